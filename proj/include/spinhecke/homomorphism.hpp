#pragma once

// Algebra maps given by generator images, extended multiplicatively.

#include <map>
#include <string>
#include <tuple>

#include "spinhecke/engine.hpp"

namespace spinhecke {

class Morphism {
 public:
  Morphism(std::string name, const Algebra& source, const Algebra& target)
      : name_(std::move(name)), source_(&source), target_(&target) {}

  const std::string& name() const { return name_; }
  const Algebra& source() const { return *source_; }
  const Algebra& target() const { return *target_; }

  /// Image of a generating letter (see generators()); simple group letters
  /// only. Group basis elements are expanded along their reduced words.
  void set(const Letter& l, Element image);
  const Element& image(const Letter& l) const;
  bool has_image(const Letter& l) const;

  /// Multiplicative, linear extension.
  Element apply(const Element& a) const;
  Element apply_word(const Word& w, const Scalar& c = Scalar(1)) const;

 private:
  using Key = std::tuple<int, int, int, int>;
  static Key key(const Letter& l);
  const Element& letter_image(const Letter& l) const;

  std::string name_;
  const Algebra* source_;
  const Algebra* target_;
  std::map<Key, Element> images_;
  mutable std::map<int, Element> group_images_;
};

/// Every defining relation of the source maps to zero, and every generator
/// image has the parity of its generator.
Report check_homomorphism(const Morphism& m);
/// g(f(x)) = x on the generators of f's source.
Report check_inverse_on_generators(const Morphism& f, const Morphism& g);
/// f, g mutually inverse on generators.
Report check_inverse_pair(const Morphism& f, const Morphism& g);

/// The same monomials read in another algebra with a compatible slot layout
/// (e.g. into the localized or tensor version).
Element reinterpret(const Element& a, const Algebra& target);

}  // namespace spinhecke
