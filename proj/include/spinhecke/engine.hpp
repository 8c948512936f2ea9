#pragma once

// PBW normal forms for the presented superalgebras.
//
// A monomial is stored slot by slot in normal order:
//   [ext Clifford] [left polynomial] [group] [Clifford] [right polynomial]
// Products are computed by pushing one generator at a time into a normal
// monomial; every (generator, monomial) product is memoized per algebra.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "spinhecke/scalar.hpp"
#include "spinhecke/structure.hpp"

namespace spinhecke {

enum class Kind {
  Sym,
  CliffordSym,
  SpinSym,
  AffineHC,
  SpinAffine,
  DaHCa,
  SDaHa,
  TrigDaHCa,
  TrigSDaHa,
};

std::string kind_name(Kind k);
/// Case-insensitive; throws std::invalid_argument.
Kind parse_kind(const std::string& s);

struct AlgebraSpec {
  Kind kind = Kind::Sym;
  int n = 2;
  /// Extra Clifford factor on the left, multiplied with Koszul signs.
  bool tensor = false;
  /// Right polynomial slot widened to Laurent exponents (y^-1 adjoined).
  bool localized = false;
  /// u specialized to a number; nullopt keeps u symbolic.
  std::optional<QOmega> u_value;

  std::string key() const;
};

enum class Slot : std::uint8_t { Ext = 0, Left = 1, Group = 2, Cliff = 3, Right = 4 };

enum class PolyKind : std::uint8_t { None, Commuting, Anticommuting, Laurent };
enum class GroupKind : std::uint8_t { None, Plain, Spin };

/// One generator: a polynomial letter (index, power +-1), a Clifford
/// generator, or a whole group basis element.
struct Letter {
  Slot slot = Slot::Group;
  std::int8_t index = 0;  // 0-based
  std::int8_t power = 1;
  std::uint16_t perm = 0;  // group element id

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Monomial {
  std::uint8_t ext = 0;
  std::array<std::int16_t, kMaxRank> left{};
  std::uint16_t group = 0;
  std::uint8_t cliff = 0;
  std::array<std::int16_t, kMaxRank> right{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool is_identity() const { return *this == Monomial{}; }
  int left_degree() const;
  int right_degree() const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

/// Display order: total polynomial degree descending, then slot by slot
/// (exponent vectors descending lexicographically).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class Parity { Even, Odd, Mixed };

class Element;

using Terms = std::vector<std::pair<Scalar, Word>>;

class Algebra {
 public:
  /// Shared instance per spec.
  static const Algebra& get(const AlgebraSpec& spec);
  static const Algebra& get(Kind kind, int n) { AlgebraSpec s; s.kind = kind; s.n = n; return get(s); }

  const AlgebraSpec& spec() const { return spec_; }
  Kind kind() const { return spec_.kind; }
  int n() const { return spec_.n; }
  std::string name() const;

  PolyKind left_kind() const { return left_; }
  PolyKind right_kind() const { return right_; }
  GroupKind group_kind() const { return group_; }
  bool has_cliff() const { return cliff_; }
  bool has_ext() const { return spec_.tensor; }
  bool parameterized() const;
  const SymmetricGroup& group() const { return *sym_; }

  /// The deformation parameter (symbolic or specialized).
  Scalar u() const;

  /// Generator names for rendering and parsing.
  const char* left_name() const;
  const char* right_name() const;

  int letter_parity(const Letter& l) const;
  int parity(const Monomial& m) const;

  /// l * m in normal form.
  const std::vector<std::pair<Monomial, Scalar>>& lmul(const Letter& l, const Monomial& m) const;

  std::string render(const Monomial& m) const;
  /// Letters of the monomial in normal order (product equals m exactly).
  Word letters(const Monomial& m) const;

  size_t cache_size() const { return cache_.size(); }

 private:
  explicit Algebra(const AlgebraSpec& spec);

  struct Key {
    Letter l;
    Monomial m;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };
  using Result = std::vector<std::pair<Monomial, Scalar>>;

  Result compute(const Letter& l, const Monomial& m) const;
  /// First letter f and remainder r with m = f * r exactly.
  std::pair<Letter, Monomial> split_first(const Monomial& m) const;
  /// Product of l with m when l belongs at or before the first slot of m.
  std::pair<int, Monomial> merge(const Letter& l, const Monomial& m) const;
  /// l * f rewritten as words, for l strictly after f in normal order.
  std::optional<Terms> reorder(const Letter& l, const Letter& f) const;
  void lmul_word_into(const Word& w, const Scalar& c, const Monomial& rest,
                      std::map<Monomial, Scalar, MonomialOrder>& acc) const;
  Word odd_transposition_word(int i, int j, int& sign) const;
  Letter perm_letter(int id) const;

  AlgebraSpec spec_;
  PolyKind left_ = PolyKind::None;
  PolyKind right_ = PolyKind::None;
  GroupKind group_ = GroupKind::None;
  bool cliff_ = false;
  const SymmetricGroup* sym_;
  mutable std::unordered_map<Key, Result, KeyHash> cache_;
};

/// Finite Scalar-linear combination of normal monomials of one algebra.
class Element {
 public:
  using Map = std::map<Monomial, Scalar, MonomialOrder>;

  explicit Element(const Algebra& a) : alg_(&a) {}
  Element(const Algebra& a, const Scalar& s);
  Element(const Algebra& a, const Monomial& m, const Scalar& s = Scalar(1));

  static Element word(const Algebra& a, const Word& w, const Scalar& s = Scalar(1));

  const Algebra& algebra() const { return *alg_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a monomial (zero when absent).
  Scalar coeff(const Monomial& m) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b);

  /// Left multiplication by a single generator.
  Element lmul(const Letter& l) const;

  Parity parity() const;
  /// Total polynomial degree (left + right) of the highest term; -1 for 0.
  int degree() const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

  void add_term(const Monomial& m, const Scalar& s);

 private:
  const Algebra* alg_;
  Map terms_;
};

Element pow(const Element& a, int k);
/// ab - ba.
Element bracket(const Element& a, const Element& b);
/// ab + ba when anti is true, ab - ba otherwise.
Element super_bracket(const Element& a, const Element& b, bool anti);
/// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba for homogeneous a, b.
Element graded_bracket(const Element& a, const Element& b);

/// Term-wise u := u0; the result lives in the specialized algebra.
Element specialize(const Element& a, const QOmega& u0);

// ---- generators (1-based indices; throw RankError when out of range or
// ---- absent from the algebra) ----

Element one(const Algebra& a);
Letter left_letter(const Algebra& a, int i, int power = 1);
Letter right_letter(const Algebra& a, int i, int power = 1);
Letter cliff_letter(const Algebra& a, int i);
Letter ext_letter(const Algebra& a, int i);
Letter group_letter(const Algebra& a, const Permutation& p);
Letter simple_letter(const Algebra& a, int i);

Element left_gen(const Algebra& a, int i, int power = 1);
Element right_gen(const Algebra& a, int i, int power = 1);
/// c_i: the inner Clifford generator, or the external one for tensor
/// algebras without an inner Clifford slot.
Element cliff_gen(const Algebra& a, int i);
Element ext_gen(const Algebra& a, int i);
Element simple_gen(const Algebra& a, int i);
Element group_gen(const Algebra& a, const Permutation& p);
/// s_ij in plain algebras.
Element transposition(const Algebra& a, int i, int j);
/// [i,j] in spin algebras.
Element odd_transposition(const Algebra& a, int i, int j);
Element letter_element(const Algebra& a, const Letter& l);

// ---- relations ----

struct FormalTerm {
  Scalar coeff;
  Word word;
};

/// A relation sum(coeff * word) = 0 over the generators of an algebra.
struct Relation {
  std::string id;
  std::vector<FormalTerm> terms;
};

/// Every defining-relation instance over all index tuples.
std::vector<Relation> defining_relations(const Algebra& a);
/// The generating letters (inverse Laurent letters included).
std::vector<Letter> generators(const Algebra& a);
std::string letter_name(const Algebra& a, const Letter& l);

Element evaluate(const Algebra& a, const std::vector<FormalTerm>& terms);

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> results;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  void add(std::string id, bool pass, std::string witness = {});
  void add_zero(std::string id, const Element& e);
  void append(const Report& other, const std::string& prefix = {});
};

Report verify_relations(const Algebra& a);

struct ConfluenceOptions {
  int trials = 200;
  int degree_bound = 3;
  std::uint64_t seed = 1;
  /// Each defining relation is also applied, as an operator, to this many
  /// random monomials (checking relations on 1 alone misses bad rewrites).
  int relation_samples = 2;
};
/// (ab)c = a(bc), idempotence of normalization, and relations acting on
/// random monomials.
Report confluence_probe(const Algebra& a, const ConfluenceOptions& opt);
/// A random normal monomial of polynomial degree <= bound.
Monomial random_monomial(const Algebra& a, int degree_bound, std::mt19937_64& rng);

/// Right-hand side of [epsv_i, e^eta] (or [zeta_i, e^eta]) in a
/// trigonometric algebra, as formal words: the divided difference
/// (e^eta - e^{s_ki eta}) / (1 - e^{+-(eps_k - eps_i)}) expanded as a finite
/// geometric sum. i is 1-based, eta has n entries.
std::vector<FormalTerm> trig_commutator_terms(const Algebra& a, int i, const std::vector<int>& eta);

}  // namespace spinhecke
