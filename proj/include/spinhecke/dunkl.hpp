#pragma once

// Polynomial realizations: induced modules C[y] (x) W and C[x] (x) W over
// the rational double affine algebras, with the polynomial generators of the
// other side acting by Dunkl operators.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinhecke/engine.hpp"

namespace spinhecke {

using Exponents = std::array<std::int16_t, kMaxRank>;

/// Sparse polynomial in n commuting variables over Scalar.
class Poly {
 public:
  using Map = std::map<Exponents, Scalar>;

  explicit Poly(int n) : n_(n) {}
  static Poly monomial(int n, const Exponents& e, const Scalar& c = Scalar(1));
  /// The variable with 1-based index i.
  static Poly variable(int n, int i);

  int n() const { return n_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponents& e, const Scalar& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// sigma(f), sending the i-th variable to the sigma(i)-th.
  Poly permuted(const Permutation& sigma) const;
  /// The i-th variable (1-based) replaced by its negative.
  Poly negated(int i) const;

  std::string to_string(const std::string& var) const;

 private:
  int n_;
  Map terms_;
};

/// (f - s_ki f) / (v_i - v_k), exact, by telescoping on each monomial.
Poly divided_difference(const Poly& f, int i, int k);
/// (f - tau s_ki f) / (v_i + v_k), where tau negates v_i and v_k.
Poly signed_divided_difference(const Poly& f, int i, int k);

/// Sparse vector of a finite module.
using FiberVector = std::map<int, Scalar>;

/// A finite-dimensional module over C_n x| CS_n (Clifford kind) or over
/// CS_n^- (spin kind). Every generator acts by a signed permutation of the
/// basis.
class FiniteModule {
 public:
  enum class Type { Clifford, Spin };

  /// L_n = C(c_1..c_n): c_i by left multiplication, S_n permuting indices.
  static FiniteModule basic_spin(int n);
  /// C_n x| CS_n acting on itself by left multiplication.
  static FiniteModule regular_clifford(int n);
  /// CS_n^- acting on itself: t_s t_r = beta(s, r) t_{sr}.
  static FiniteModule regular_spin(int n);
  /// "basic-spin", "regular-clifford", "regular-spin".
  static FiniteModule by_name(const std::string& name, int n);

  const std::string& name() const { return name_; }
  Type type() const { return type_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int b) const { return labels_[b]; }

  /// c_i (1-based) on basis vector b.
  Signed<int> cliff(int i, int b) const;
  /// Group basis element (id in SymmetricGroup::get(n)) on basis vector b.
  Signed<int> group(int perm, int b) const;

  /// Defining relations of the finite algebra as operators on every basis
  /// vector.
  Report verify() const;

 private:
  FiniteModule() = default;

  std::string name_;
  Type type_ = Type::Clifford;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Signed<int>>> cliff_;  // [i][b]
  std::vector<std::vector<Signed<int>>> group_;  // [perm][b]
};

/// Which polynomial generators the induced module is free over.
enum class PolySide { Y, X };

/// Finite sum of (monomial in the free variables) (x) (basis vector of W).
class InducedVector {
 public:
  using Key = std::pair<Exponents, int>;
  using Map = std::map<Key, Scalar>;

  InducedVector() = default;
  static InducedVector basis(const Exponents& e, int b) {
    InducedVector v;
    v.add_term(e, b, Scalar(1));
    return v;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest polynomial degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponents& e, int b, const Scalar& c);
  InducedVector& operator+=(const InducedVector& o);
  InducedVector& operator-=(const InducedVector& o);
  InducedVector& operator*=(const Scalar& s);
  friend InducedVector operator+(InducedVector a, const InducedVector& b) { return a += b; }
  friend InducedVector operator-(InducedVector a, const InducedVector& b) { return a -= b; }
  friend InducedVector operator*(const Scalar& s, InducedVector a) { return a *= s; }
  friend bool operator==(const InducedVector& a, const InducedVector& b) { return a.terms_ == b.terms_; }

  /// f (x) w_b as a polynomial-valued vector.
  static InducedVector tensor(const Poly& f, int b);

 private:
  Map terms_;
};

/// Ind W for DaHCa (W of Clifford type, either side) or SDaHa (W of spin
/// type, Y side only).
class InducedModule {
 public:
  InducedModule(const Algebra& a, FiniteModule fiber, PolySide side);

  const Algebra& algebra() const { return *alg_; }
  const FiniteModule& fiber() const { return fiber_; }
  PolySide side() const { return side_; }
  int n() const { return alg_->n(); }
  /// Name of the free polynomial variables ("y" or "x").
  std::string variable() const;
  /// True when letter l acts by a Dunkl operator.
  bool is_dunkl(const Letter& l) const;

  /// All f (x) w_b with f a monomial of degree <= bound.
  std::vector<InducedVector> basis(int degree_bound) const;

  InducedVector act(const Letter& l, const InducedVector& v) const;
  /// Letters act right to left.
  InducedVector act_word(const Word& w, const InducedVector& v) const;
  InducedVector act(const Element& a, const InducedVector& v) const;

  /// Dunkl letter g on v computed from the algebra alone:
  /// g o (f (x) w) = (g f - (-1)^{|g||f|} f g) o (1 (x) w), normalized by the
  /// engine, with the remaining letters acting on 1 (x) w.
  InducedVector oracle(const Letter& g, const InducedVector& v) const;

  std::string to_string(const InducedVector& v) const;
  nlohmann::ordered_json to_json(const InducedVector& v) const;

 private:
  InducedVector act_basis(const Letter& l, const Exponents& e, int b) const;

  const Algebra* alg_;
  FiniteModule fiber_;
  PolySide side_;
};

/// x_i o (f (x) w) = u sum_{k != i} dd_{ik}(f) (x) (1 - c_i c_k) s_ki w on C[y] (x) W.
InducedVector dunkl_x(const InducedModule& m, int i, const InducedVector& v);
/// y_i o (f (x) w) = u sum_{k != i} [ (f - s_ki f)/(x_k - x_i) (x) s_ki w
///                   + (f - tau s_ki f)/(x_i + x_k) (x) c_i c_k s_ki w ] on C[x] (x) W.
InducedVector dunkl_y(const InducedModule& m, int i, const InducedVector& v);
/// xi_i o (f (x) w) = u sum_{k != i} dd_{ik}(f) (x) [k,i] w on C[y] (x) W^-.
InducedVector dunkl_xi(const InducedModule& m, int i, const InducedVector& v);

/// Fiber relations, every defining relation of the algebra as an operator
/// on every basis vector of degree <= bound, and Dunkl = oracle on the same
/// vectors. One result per relation and per Dunkl generator.
Report verify_module(const InducedModule& m, int degree_bound);

/// The DaHCa action on C[y] (x) L_n pulled back along C_n (x) SDaHa -> DaHCa:
/// every relation of C_n (x) SDaHa holds as an operator.
Report transport_check(int n, int degree_bound);

}  // namespace spinhecke
