#include "spinhecke/dunkl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "spinhecke/morphisms.hpp"

namespace spinhecke {

namespace {

int total(const Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

std::string render_monomial(const Exponents& e, int n, const std::string& var) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// Shared "c*body" formatting, same conventions as Element::to_string.
struct TermWriter {
  std::string out;
  bool first = true;
  bool multi = false;

  void add(const Scalar& s, const std::string& body, bool body_is_one) {
    int sign = 1;
    Scalar mag = s;
    if (s.is_atomic() && s.leading_sign() < 0) {
      sign = -1;
      mag = -s;
    }
    std::string t;
    if (body_is_one) {
      t = mag.to_string();
      if (!mag.is_atomic() && multi) t = "(" + t + ")";
    } else if (mag.is_one()) {
      t = body;
    } else {
      std::string c = mag.to_string();
      if (!mag.is_atomic()) c = "(" + c + ")";
      t = c + "*" + body;
    }
    if (first) {
      out = (sign < 0 ? "-" : "") + t;
      first = false;
    } else {
      out += (sign < 0 ? " - " : " + ") + t;
    }
  }
  std::string str() const { return first ? "0" : out; }
};

// X^a Z^b -> (X^a Z^b - X^b Z^a) / (X - Z) as a list of (sign, p, q) for
// X^p Z^q.
template <typename F>
void telescope(int a, int b, F&& emit) {
  if (a == b) return;
  int sign = 1;
  if (a < b) {
    std::swap(a, b);
    sign = -1;
  }
  // X^b Z^b (X^{a-b} - Z^{a-b}) / (X - Z)
  int d = a - b;
  for (int j = 0; j < d; ++j) emit(sign, b + d - 1 - j, b + j);
}

std::string perm_label(const SymmetricGroup& g, int id, char letter) {
  std::string s;
  for (int i : g.word(id)) {
    if (!s.empty()) s += "*";
    s += letter + std::to_string(i);
  }
  return s;
}

std::string join_label(const std::string& a, const std::string& b) {
  if (a.empty() || a == "1") return b.empty() ? "1" : b;
  if (b.empty()) return a;
  return a + "*" + b;
}

void add_signed(FiberVector& v, const Signed<int>& s, const Scalar& c) {
  Scalar& t = v[s.value];
  t += s.sign < 0 ? -c : c;
  if (t.is_zero()) v.erase(s.value);
}

}  // namespace

// ------------------------------------------------------------------ Poly

Poly Poly::monomial(int n, const Exponents& e, const Scalar& c) {
  Poly p(n);
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int n, int i) {
  if (i < 1 || i > n) throw RankError("variable index out of range");
  Exponents e{};
  e[i - 1] = 1;
  return monomial(n, e);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    if (d >= 0 && total(e) != d) return false;
    d = total(e);
  }
  return true;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (int i = 0; i < kMaxRank; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Scalar& s, const Poly& a) {
  Poly r(a.n_);
  for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
  return r;
}

Poly Poly::permuted(const Permutation& sigma) const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f{};
    for (int i = 0; i < n_; ++i) f[sigma(i)] = e[i];
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::negated(int i) const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) r.add_term(e, (e[i - 1] & 1) ? -c : c);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  TermWriter w;
  w.multi = terms_.size() > 1;
  // Highest degree first.
  std::vector<std::pair<Exponents, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = total(a.first), db = total(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  for (const auto& [e, c] : sorted) w.add(c, render_monomial(e, n_, var), total(e) == 0);
  return w.str();
}

Poly divided_difference(const Poly& f, int i, int k) {
  if (i == k) throw std::invalid_argument("divided difference needs i != k");
  if (i < 1 || k < 1 || i > f.n() || k > f.n()) throw RankError("divided difference index out of range");
  Poly r(f.n());
  for (const auto& [e, c] : f.terms()) {
    telescope(e[i - 1], e[k - 1], [&](int sign, int p, int q) {
      Exponents g = e;
      g[i - 1] = static_cast<std::int16_t>(p);
      g[k - 1] = static_cast<std::int16_t>(q);
      r.add_term(g, sign < 0 ? -c : c);
    });
  }
  return r;
}

Poly signed_divided_difference(const Poly& f, int i, int k) {
  if (i == k) throw std::invalid_argument("divided difference needs i != k");
  if (i < 1 || k < 1 || i > f.n() || k > f.n()) throw RankError("divided difference index out of range");
  // With Z = -v_k: f - tau s f = (-1)^b (X^a Z^b - X^b Z^a) and v_i + v_k = X - Z.
  Poly r(f.n());
  for (const auto& [e, c] : f.terms()) {
    int b = e[k - 1];
    telescope(e[i - 1], b, [&](int sign, int p, int q) {
      Exponents g = e;
      g[i - 1] = static_cast<std::int16_t>(p);
      g[k - 1] = static_cast<std::int16_t>(q);
      if ((b + q) & 1) sign = -sign;
      r.add_term(g, sign < 0 ? -c : c);
    });
  }
  return r;
}

// ---------------------------------------------------------- FiniteModule

FiniteModule FiniteModule::basic_spin(int n) {
  const SymmetricGroup& g = SymmetricGroup::get(n);
  FiniteModule m;
  m.name_ = "basic-spin";
  m.type_ = Type::Clifford;
  m.n_ = n;
  int dim = 1 << n;
  for (int w = 0; w < dim; ++w) m.labels_.push_back(clifford_to_string(static_cast<CliffordWord>(w)));
  m.cliff_.assign(n, std::vector<Signed<int>>(dim));
  for (int i = 0; i < n; ++i)
    for (int w = 0; w < dim; ++w) {
      auto p = clifford_mul(static_cast<CliffordWord>(1u << i), static_cast<CliffordWord>(w));
      m.cliff_[i][w] = {p.sign, p.value};
    }
  m.group_.assign(g.order(), std::vector<Signed<int>>(dim));
  for (int s = 0; s < g.order(); ++s)
    for (int w = 0; w < dim; ++w) {
      auto p = perm_conjugate_clifford(g.element(s), static_cast<CliffordWord>(w));
      m.group_[s][w] = {p.sign, p.value};
    }
  return m;
}

FiniteModule FiniteModule::regular_clifford(int n) {
  const SymmetricGroup& g = SymmetricGroup::get(n);
  FiniteModule m;
  m.name_ = "regular-clifford";
  m.type_ = Type::Clifford;
  m.n_ = n;
  int words = 1 << n, order = g.order(), dim = words * order;
  // Basis c_w sigma at index w * order + sigma.
  for (int w = 0; w < words; ++w)
    for (int s = 0; s < order; ++s)
      m.labels_.push_back(join_label(clifford_to_string(static_cast<CliffordWord>(w)), perm_label(g, s, 's')));
  m.cliff_.assign(n, std::vector<Signed<int>>(dim));
  for (int i = 0; i < n; ++i)
    for (int w = 0; w < words; ++w)
      for (int s = 0; s < order; ++s) {
        auto p = clifford_mul(static_cast<CliffordWord>(1u << i), static_cast<CliffordWord>(w));
        m.cliff_[i][w * order + s] = {p.sign, p.value * order + s};
      }
  m.group_.assign(order, std::vector<Signed<int>>(dim));
  for (int t = 0; t < order; ++t)
    for (int w = 0; w < words; ++w)
      for (int s = 0; s < order; ++s) {
        auto p = perm_conjugate_clifford(g.element(t), static_cast<CliffordWord>(w));
        m.group_[t][w * order + s] = {p.sign, p.value * order + g.compose(t, s)};
      }
  return m;
}

FiniteModule FiniteModule::regular_spin(int n) {
  const SymmetricGroup& g = SymmetricGroup::get(n);
  FiniteModule m;
  m.name_ = "regular-spin";
  m.type_ = Type::Spin;
  m.n_ = n;
  int order = g.order();
  for (int s = 0; s < order; ++s) {
    std::string l = perm_label(g, s, 't');
    m.labels_.push_back(l.empty() ? "1" : l);
  }
  m.group_.assign(order, std::vector<Signed<int>>(order));
  for (int t = 0; t < order; ++t)
    for (int s = 0; s < order; ++s) m.group_[t][s] = {g.spin_cocycle(t, s), g.compose(t, s)};
  return m;
}

FiniteModule FiniteModule::by_name(const std::string& name, int n) {
  if (name == "basic-spin") return basic_spin(n);
  if (name == "regular-clifford") return regular_clifford(n);
  if (name == "regular-spin") return regular_spin(n);
  throw std::invalid_argument("unknown module '" + name + "' (basic-spin, regular-clifford, regular-spin)");
}

Signed<int> FiniteModule::cliff(int i, int b) const {
  if (type_ != Type::Clifford) throw std::invalid_argument(name_ + " carries no Clifford action");
  if (i < 1 || i > n_) throw RankError("Clifford index out of range");
  return cliff_[i - 1][b];
}

Signed<int> FiniteModule::group(int perm, int b) const { return group_[perm][b]; }

Report FiniteModule::verify() const {
  const Algebra& a = Algebra::get(type_ == Type::Clifford ? Kind::CliffordSym : Kind::SpinSym, n_);
  Report rep;
  for (const Relation& r : defining_relations(a)) {
    std::string witness;
    for (int b = 0; b < dim() && witness.empty(); ++b) {
      FiberVector sum;
      for (const FormalTerm& t : r.terms) {
        FiberVector v{{b, t.coeff}};
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
          FiberVector next;
          for (const auto& [idx, c] : v)
            add_signed(next, it->slot == Slot::Group ? group(it->perm, idx) : cliff(it->index + 1, idx), c);
          v = std::move(next);
        }
        for (const auto& [idx, c] : v) add_signed(sum, {1, idx}, c);
      }
      if (!sum.empty()) witness = "nonzero on " + labels_[b];
    }
    rep.add(r.id, witness.empty(), witness);
  }
  return rep;
}

// --------------------------------------------------------- InducedVector

int InducedVector::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, total(k.first));
  return d;
}

bool InducedVector::is_homogeneous() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    if (d >= 0 && total(k.first) != d) return false;
    d = total(k.first);
  }
  return true;
}

void InducedVector::add_term(const Exponents& e, int b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{e, b}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

InducedVector& InducedVector::operator+=(const InducedVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

InducedVector& InducedVector::operator-=(const InducedVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

InducedVector& InducedVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

InducedVector InducedVector::tensor(const Poly& f, int b) {
  InducedVector v;
  for (const auto& [e, c] : f.terms()) v.add_term(e, b, c);
  return v;
}

// --------------------------------------------------------- InducedModule

InducedModule::InducedModule(const Algebra& a, FiniteModule fiber, PolySide side)
    : alg_(&a), fiber_(std::move(fiber)), side_(side) {
  if (a.has_ext() || a.spec().localized) throw std::invalid_argument("induced modules need a plain rational algebra");
  if (fiber_.n() != a.n()) throw RankError("fiber rank differs from the algebra rank");
  if (a.kind() == Kind::DaHCa) {
    if (fiber_.type() != FiniteModule::Type::Clifford)
      throw std::invalid_argument("DaHCa needs a module over C_n x| CS_n, got " + fiber_.name());
  } else if (a.kind() == Kind::SDaHa) {
    if (fiber_.type() != FiniteModule::Type::Spin)
      throw std::invalid_argument("SDaHa needs a module over CS_n^-, got " + fiber_.name());
    if (side != PolySide::Y) throw std::invalid_argument("SDaHa modules are induced over C[y] only");
  } else {
    throw std::invalid_argument("induced modules exist for DaHCa and SDaHa, got " + a.name());
  }
}

std::string InducedModule::variable() const { return side_ == PolySide::Y ? alg_->right_name() : alg_->left_name(); }

bool InducedModule::is_dunkl(const Letter& l) const {
  return side_ == PolySide::Y ? l.slot == Slot::Left : l.slot == Slot::Right;
}

std::vector<InducedVector> InducedModule::basis(int degree_bound) const {
  std::vector<Exponents> monos;
  const int n = alg_->n();
  for (int d = 0; d <= degree_bound; ++d) {
    // Compositions of d into n parts, lexicographically descending.
    Exponents e{};
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        e[pos] = static_cast<std::int16_t>(left);
        monos.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[pos] = static_cast<std::int16_t>(v);
        rec(pos + 1, left - v);
      }
    };
    rec(0, d);
  }
  std::vector<InducedVector> out;
  for (const Exponents& e : monos)
    for (int b = 0; b < fiber_.dim(); ++b) out.push_back(InducedVector::basis(e, b));
  return out;
}

InducedVector InducedModule::act_basis(const Letter& l, const Exponents& e, int b) const {
  const int n = alg_->n();
  InducedVector out;
  switch (l.slot) {
    case Slot::Group: {
      const Permutation& p = alg_->group().element(l.perm);
      Exponents f{};
      for (int i = 0; i < n; ++i) f[p(i)] = e[i];
      Signed<int> w = fiber_.group(l.perm, b);
      out.add_term(f, w.value, Scalar(w.sign));
      return out;
    }
    case Slot::Cliff: {
      Signed<int> w = fiber_.cliff(l.index + 1, b);
      int sign = w.sign;
      // c_i anticommutes with x_i and commutes with y_i.
      if (side_ == PolySide::X && (e[l.index] & 1)) sign = -sign;
      out.add_term(e, w.value, Scalar(sign));
      return out;
    }
    case Slot::Left:
    case Slot::Right: {
      if (is_dunkl(l)) {
        if (l.power != 1) throw std::invalid_argument("Dunkl letters act with power 1 only");
        InducedVector v = InducedVector::basis(e, b);
        if (alg_->kind() == Kind::SDaHa) return dunkl_xi(*this, l.index + 1, v);
        return side_ == PolySide::Y ? dunkl_x(*this, l.index + 1, v) : dunkl_y(*this, l.index + 1, v);
      }
      if (l.power != 1) throw std::invalid_argument("polynomial letters act with power 1 only");
      Exponents f = e;
      ++f[l.index];
      out.add_term(f, b, Scalar(1));
      return out;
    }
    case Slot::Ext:
      break;
  }
  throw std::invalid_argument("letter does not act on " + fiber_.name());
}

InducedVector InducedModule::act(const Letter& l, const InducedVector& v) const {
  InducedVector out;
  for (const auto& [k, c] : v.terms()) out += c * act_basis(l, k.first, k.second);
  return out;
}

InducedVector InducedModule::act_word(const Word& w, const InducedVector& v) const {
  InducedVector cur = v;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act(*it, cur);
  return cur;
}

InducedVector InducedModule::act(const Element& a, const InducedVector& v) const {
  if (a.algebra().spec().key() != alg_->spec().key())
    throw std::invalid_argument(a.algebra().name() + " does not act on this module");
  InducedVector out;
  for (const auto& [m, s] : a.terms()) out += s * act_word(alg_->letters(m), v);
  return out;
}

InducedVector InducedModule::oracle(const Letter& g, const InducedVector& v) const {
  if (!is_dunkl(g)) throw std::invalid_argument("oracle is for Dunkl letters");
  const Algebra& a = *alg_;
  Element G = letter_element(a, g);
  InducedVector out;
  for (const auto& [k, c] : v.terms()) {
    Monomial fm;
    (side_ == PolySide::Y ? fm.right : fm.left) = k.first;
    Element F(a, fm);
    // f is even, so the graded commutator is the plain one.
    Element comm = G * F - F * G;
    InducedVector w = InducedVector::basis(Exponents{}, k.second);
    for (const auto& [m, s] : comm.terms()) {
      Word word = a.letters(m);
      // The induced module is generated by 1 (x) W, killed by the Dunkl letters.
      if (!word.empty() && is_dunkl(word.back())) continue;
      for (const Letter& l : word)
        if (is_dunkl(l)) throw std::logic_error("oracle term needs a Dunkl letter: " + a.render(m));
      out += (c * s) * act_word(word, w);
    }
  }
  return out;
}

std::string InducedModule::to_string(const InducedVector& v) const {
  TermWriter w;
  w.multi = v.terms().size() > 1;
  for (const auto& [k, c] : v.terms()) {
    std::string body = render_monomial(k.first, n(), variable()) + " ⊗ " + fiber_.label(k.second);
    w.add(c, body, false);
  }
  return w.str();
}

nlohmann::ordered_json InducedModule::to_json(const InducedVector& v) const {
  nlohmann::ordered_json j;
  j["algebra"] = alg_->name();
  j["module"] = fiber_.name();
  j["variables"] = variable();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : v.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = c.to_string();
    t["poly"] = render_monomial(k.first, n(), variable());
    t["fiber"] = fiber_.label(k.second);
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j;
}

// ------------------------------------------------------------ Dunkl ops

namespace {

void require(const InducedModule& m, Kind k, PolySide side, const char* what) {
  if (m.algebra().kind() != k || m.side() != side)
    throw std::invalid_argument(std::string(what) + " does not apply to this module");
}

void check_index(const InducedModule& m, int i) {
  if (i < 1 || i > m.n()) throw RankError("Dunkl index out of range");
}

}  // namespace

InducedVector dunkl_x(const InducedModule& m, int i, const InducedVector& v) {
  require(m, Kind::DaHCa, PolySide::Y, "dunkl_x");
  check_index(m, i);
  const SymmetricGroup& g = m.algebra().group();
  const FiniteModule& w = m.fiber();
  Scalar u = m.algebra().u();
  InducedVector out;
  for (const auto& [key, c] : v.terms()) {
    Poly f = Poly::monomial(m.n(), key.first, u * c);
    for (int k = 1; k <= m.n(); ++k) {
      if (k == i) continue;
      Poly d = divided_difference(f, i, k);
      if (d.is_zero()) continue;
      // (1 - c_i c_k) s_ki w
      Signed<int> sw = w.group(g.transposition_id(k, i), key.second);
      Signed<int> ck = w.cliff(k, sw.value);
      Signed<int> ci = w.cliff(i, ck.value);
      out += Scalar(sw.sign) * InducedVector::tensor(d, sw.value);
      out -= Scalar(sw.sign * ck.sign * ci.sign) * InducedVector::tensor(d, ci.value);
    }
  }
  return out;
}

InducedVector dunkl_y(const InducedModule& m, int i, const InducedVector& v) {
  require(m, Kind::DaHCa, PolySide::X, "dunkl_y");
  check_index(m, i);
  const SymmetricGroup& g = m.algebra().group();
  const FiniteModule& w = m.fiber();
  Scalar u = m.algebra().u();
  InducedVector out;
  for (const auto& [key, c] : v.terms()) {
    Poly f = Poly::monomial(m.n(), key.first, u * c);
    for (int k = 1; k <= m.n(); ++k) {
      if (k == i) continue;
      Signed<int> sw = w.group(g.transposition_id(k, i), key.second);
      // (f - s f) / (x_k - x_i) (x) s w
      out -= Scalar(sw.sign) * InducedVector::tensor(divided_difference(f, i, k), sw.value);
      // (f - tau s f) / (x_i + x_k) (x) c_i c_k s w
      Signed<int> ck = w.cliff(k, sw.value);
      Signed<int> ci = w.cliff(i, ck.value);
      out += Scalar(sw.sign * ck.sign * ci.sign) * InducedVector::tensor(signed_divided_difference(f, i, k), ci.value);
    }
  }
  return out;
}

InducedVector dunkl_xi(const InducedModule& m, int i, const InducedVector& v) {
  require(m, Kind::SDaHa, PolySide::Y, "dunkl_xi");
  check_index(m, i);
  const SymmetricGroup& g = m.algebra().group();
  const FiniteModule& w = m.fiber();
  Scalar u = m.algebra().u();
  InducedVector out;
  for (const auto& [key, c] : v.terms()) {
    Poly f = Poly::monomial(m.n(), key.first, u * c);
    for (int k = 1; k <= m.n(); ++k) {
      if (k == i) continue;
      Poly d = divided_difference(f, i, k);
      if (d.is_zero()) continue;
      // [k,i] = sign * t_{s_ki}
      Signed<Permutation> t = odd_transposition(k, i, m.n());
      Signed<int> tw = w.group(g.id_of(t.value), key.second);
      out += Scalar(t.sign * tw.sign) * InducedVector::tensor(d, tw.value);
    }
  }
  return out;
}

// ---------------------------------------------------------- verification

namespace {

// sum coeff * (word acting on v) for one relation.
template <typename Act>
InducedVector relation_on(const Relation& r, const InducedVector& v, Act&& act_letter) {
  InducedVector sum;
  for (const FormalTerm& t : r.terms) {
    InducedVector cur = v;
    for (auto it = t.word.rbegin(); it != t.word.rend() && !cur.is_zero(); ++it) cur = act_letter(*it, cur);
    sum += t.coeff * cur;
  }
  return sum;
}

std::string first_nonzero(const InducedModule& m, const InducedVector& v, const InducedVector& value) {
  return "on " + m.to_string(v) + ": " + m.to_string(value);
}

}  // namespace

Report verify_module(const InducedModule& m, int degree_bound) {
  Report rep;
  rep.append(m.fiber().verify(), "fiber " + m.fiber().name() + ": ");
  std::vector<InducedVector> basis = m.basis(degree_bound);
  auto act = [&](const Letter& l, const InducedVector& v) { return m.act(l, v); };
  for (const Relation& r : defining_relations(m.algebra())) {
    std::string witness;
    for (const InducedVector& v : basis) {
      InducedVector s = relation_on(r, v, act);
      if (!s.is_zero()) {
        witness = first_nonzero(m, v, s);
        break;
      }
    }
    rep.add(r.id, witness.empty(), witness);
  }
  for (int i = 1; i <= m.n(); ++i) {
    Letter g = m.side() == PolySide::Y ? left_letter(m.algebra(), i) : right_letter(m.algebra(), i);
    std::string witness;
    for (const InducedVector& v : basis) {
      InducedVector d = m.act(g, v) - m.oracle(g, v);
      if (!d.is_zero()) {
        witness = first_nonzero(m, v, d);
        break;
      }
    }
    rep.add("Dunkl " + letter_name(m.algebra(), g) + " = engine oracle", witness.empty(), witness);
  }
  return rep;
}

Report transport_check(int n, int degree_bound) {
  InducedModule mod(Algebra::get(Kind::DaHCa, n), FiniteModule::basic_spin(n), PolySide::Y);
  Morphism psi = make_morphism(MorphismName::Psi, n);
  if (psi.target().spec().key() != mod.algebra().spec().key())
    throw std::logic_error("Psi does not land in the plain DaHCa");
  std::vector<std::pair<Letter, Element>> images;
  auto image = [&](const Letter& l) -> const Element& {
    for (const auto& [k, e] : images)
      if (k == l) return e;
    images.emplace_back(l, psi.apply_word({l}));
    return images.back().second;
  };
  auto act = [&](const Letter& l, const InducedVector& v) { return mod.act(image(l), v); };
  std::vector<InducedVector> basis = mod.basis(degree_bound);
  Report rep;
  for (const Relation& r : defining_relations(psi.source())) {
    std::string witness;
    for (const InducedVector& v : basis) {
      InducedVector s = relation_on(r, v, act);
      if (!s.is_zero()) {
        witness = first_nonzero(mod, v, s);
        break;
      }
    }
    rep.add("transported " + r.id, witness.empty(), witness);
  }
  return rep;
}

}  // namespace spinhecke
