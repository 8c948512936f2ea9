#include "spinhecke/homomorphism.hpp"

#include <stdexcept>

namespace spinhecke {

Morphism::Key Morphism::key(const Letter& l) {
  return {static_cast<int>(l.slot), l.index, l.power, l.perm};
}

void Morphism::set(const Letter& l, Element image) {
  if (&image.algebra() != target_) throw std::invalid_argument(name_ + ": image in the wrong algebra");
  images_.insert_or_assign(key(l), std::move(image));
  group_images_.clear();
}

bool Morphism::has_image(const Letter& l) const { return images_.count(key(l)) > 0; }

const Element& Morphism::image(const Letter& l) const {
  auto it = images_.find(key(l));
  if (it == images_.end())
    throw std::invalid_argument(name_ + ": no image for " + letter_name(*source_, l));
  return it->second;
}

const Element& Morphism::letter_image(const Letter& l) const {
  if (l.slot != Slot::Group || source_->group().simple_index(l.perm) != 0) return image(l);
  auto it = group_images_.find(l.perm);
  if (it != group_images_.end()) return it->second;
  // t_sigma (or sigma) is the product of simple generators along the
  // canonical reduced word.
  Element acc = one(*target_);
  for (int k : source_->group().word(l.perm)) acc = acc * image(simple_letter(*source_, k));
  return group_images_.emplace(l.perm, std::move(acc)).first->second;
}

Element Morphism::apply_word(const Word& w, const Scalar& c) const {
  Element acc(*target_, c);
  for (const Letter& l : w) {
    if (l.slot == Slot::Group && l.perm == 0) continue;
    acc = acc * letter_image(l);
  }
  return acc;
}

Element Morphism::apply(const Element& a) const {
  if (&a.algebra() != source_)
    throw std::invalid_argument(name_ + ": argument lives in " + a.algebra().name() + ", expected " +
                                source_->name());
  Element out(*target_);
  for (const auto& [m, c] : a.terms()) out += apply_word(source_->letters(m), c);
  return out;
}

Report check_homomorphism(const Morphism& m) {
  Report rep;
  for (const Letter& l : generators(m.source())) {
    const Element& img = m.image(l);
    Parity want = m.source().letter_parity(l) ? Parity::Odd : Parity::Even;
    bool ok = img.is_zero() || img.parity() == want;
    rep.add("parity of image of " + letter_name(m.source(), l), ok, ok ? "" : img.to_string());
  }
  for (const auto& rel : defining_relations(m.source())) {
    Element sum(m.target());
    for (const auto& t : rel.terms) sum += m.apply_word(t.word, t.coeff);
    rep.add_zero(rel.id, sum);
  }
  return rep;
}

Report check_inverse_on_generators(const Morphism& f, const Morphism& g) {
  Report rep;
  if (&f.target() != &g.source() || &g.target() != &f.source())
    throw std::invalid_argument(f.name() + " and " + g.name() + " are not composable both ways");
  for (const Letter& l : generators(f.source())) {
    Element x = letter_element(f.source(), l);
    rep.add_zero(g.name() + "(" + f.name() + "(" + letter_name(f.source(), l) + "))", g.apply(f.apply(x)) - x);
  }
  return rep;
}

Report check_inverse_pair(const Morphism& f, const Morphism& g) {
  Report rep = check_inverse_on_generators(f, g);
  rep.append(check_inverse_on_generators(g, f));
  return rep;
}

Element reinterpret(const Element& a, const Algebra& target) {
  const Algebra& s = a.algebra();
  if (s.n() != target.n() || s.kind() != target.kind())
    throw std::invalid_argument("cannot reinterpret " + s.name() + " in " + target.name());
  Element out(target);
  for (const auto& [m, c] : a.terms()) {
    if (m.ext && !target.has_ext()) throw std::invalid_argument("target has no external Clifford factor");
    for (int i = 0; i < target.n(); ++i)
      if (m.right[i] < 0 && target.right_kind() != PolyKind::Laurent)
        throw std::invalid_argument("negative exponent in a non-localized algebra");
    Scalar cc = c;
    if (target.spec().u_value) cc = Scalar(c.eval(*target.spec().u_value));
    out.add_term(m, cc);
  }
  return out;
}

}  // namespace spinhecke
