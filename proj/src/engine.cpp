#include "spinhecke/engine.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace spinhecke {

// ------------------------------------------------------------------ names

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Sym: return "Sym";
    case Kind::CliffordSym: return "CliffordSym";
    case Kind::SpinSym: return "SpinSym";
    case Kind::AffineHC: return "AffineHC";
    case Kind::SpinAffine: return "SpinAffine";
    case Kind::DaHCa: return "DaHCa";
    case Kind::SDaHa: return "SDaHa";
    case Kind::TrigDaHCa: return "TrigDaHCa";
    case Kind::TrigSDaHa: return "TrigSDaHa";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  std::string low;
  for (char ch : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Kind k : {Kind::Sym, Kind::CliffordSym, Kind::SpinSym, Kind::AffineHC, Kind::SpinAffine,
                 Kind::DaHCa, Kind::SDaHa, Kind::TrigDaHCa, Kind::TrigSDaHa}) {
    std::string name;
    for (char ch : kind_name(k)) name += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == low) return k;
  }
  throw std::invalid_argument("unknown algebra: " + s);
}

std::string AlgebraSpec::key() const {
  std::string k = kind_name(kind) + "/" + std::to_string(n);
  if (tensor) k += "/tensor";
  if (localized) k += "/localized";
  if (u_value) k += "/u=" + u_value->to_string();
  return k;
}

// -------------------------------------------------------------- monomials

int Monomial::left_degree() const {
  int d = 0;
  for (auto a : left) d += std::abs(a);
  return d;
}

int Monomial::right_degree() const {
  int d = 0;
  for (auto a : right) d += std::abs(a);
  return d;
}

size_t MonomialHash::operator()(const Monomial& m) const {
  size_t h = m.ext * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto a : m.left) mix(static_cast<size_t>(a + 1000));
  mix(m.group);
  mix(m.cliff);
  for (auto a : m.right) mix(static_cast<size_t>(a + 1000));
  return h;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.left_degree() + a.right_degree();
  int db = b.left_degree() + b.right_degree();
  if (da != db) return da > db;
  if (a.ext != b.ext) return a.ext < b.ext;
  if (a.left != b.left) return a.left > b.left;
  if (a.group != b.group) return a.group < b.group;
  if (a.cliff != b.cliff) return a.cliff < b.cliff;
  return a.right > b.right;
}

// ---------------------------------------------------------------- algebra

namespace {

Letter mk(Slot s, int index, int power = 1, int perm = 0) {
  Letter l;
  l.slot = s;
  l.index = static_cast<std::int8_t>(index);
  l.power = static_cast<std::int8_t>(power);
  l.perm = static_cast<std::uint16_t>(perm);
  return l;
}

Letter L(int i, int p = 1) { return mk(Slot::Left, i, p); }
Letter R(int i, int p = 1) { return mk(Slot::Right, i, p); }
Letter C(int i) { return mk(Slot::Cliff, i); }
Letter E(int i) { return mk(Slot::Ext, i); }
Letter G(int id) { return mk(Slot::Group, 0, 1, id); }

}  // namespace

Algebra::Algebra(const AlgebraSpec& spec) : spec_(spec), sym_(&SymmetricGroup::get(spec.n)) {
  const bool rational = spec.kind == Kind::DaHCa || spec.kind == Kind::SDaHa;
  if (spec.localized && !rational)
    throw std::invalid_argument("only the rational double affine algebras can be localized");
  switch (spec.kind) {
    case Kind::Sym: group_ = GroupKind::Plain; break;
    case Kind::CliffordSym: group_ = GroupKind::Plain; cliff_ = true; break;
    case Kind::SpinSym: group_ = GroupKind::Spin; break;
    case Kind::AffineHC:
      left_ = PolyKind::Commuting; group_ = GroupKind::Plain; cliff_ = true; break;
    case Kind::SpinAffine:
      left_ = PolyKind::Anticommuting; group_ = GroupKind::Spin; break;
    case Kind::DaHCa:
      left_ = PolyKind::Commuting; group_ = GroupKind::Plain; cliff_ = true;
      right_ = spec.localized ? PolyKind::Laurent : PolyKind::Commuting;
      break;
    case Kind::SDaHa:
      left_ = PolyKind::Anticommuting; group_ = GroupKind::Spin;
      right_ = spec.localized ? PolyKind::Laurent : PolyKind::Commuting;
      break;
    case Kind::TrigDaHCa:
      left_ = PolyKind::Laurent; group_ = GroupKind::Plain; cliff_ = true;
      right_ = PolyKind::Commuting;
      break;
    case Kind::TrigSDaHa:
      left_ = PolyKind::Laurent; group_ = GroupKind::Spin; right_ = PolyKind::Anticommuting;
      break;
  }
}

const Algebra& Algebra::get(const AlgebraSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Algebra>> registry;
  if (spec.n < 1 || spec.n > kMaxRank) throw RankError("rank out of range: " + std::to_string(spec.n));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[spec.key()];
  if (!slot) slot.reset(new Algebra(spec));
  return *slot;
}

std::string Algebra::name() const {
  std::string s = kind_name(spec_.kind);
  if (spec_.tensor) s = "Cl(x)" + s;
  if (spec_.localized) s += "[y^-1]";
  return s;
}

bool Algebra::parameterized() const {
  switch (spec_.kind) {
    case Kind::DaHCa:
    case Kind::SDaHa:
    case Kind::TrigDaHCa:
    case Kind::TrigSDaHa: return true;
    default: return false;
  }
}

Scalar Algebra::u() const { return spec_.u_value ? Scalar(*spec_.u_value) : Scalar::u(); }

const char* Algebra::left_name() const {
  switch (spec_.kind) {
    case Kind::AffineHC: return "a";
    case Kind::SpinAffine: return "b";
    case Kind::DaHCa: return "x";
    case Kind::SDaHa: return "xi";
    case Kind::TrigDaHCa:
    case Kind::TrigSDaHa: return "e";
    default: return "";
  }
}

const char* Algebra::right_name() const {
  switch (spec_.kind) {
    case Kind::DaHCa:
    case Kind::SDaHa: return "y";
    case Kind::TrigDaHCa: return "epsv";
    case Kind::TrigSDaHa: return "zeta";
    default: return "";
  }
}

int Algebra::letter_parity(const Letter& l) const {
  switch (l.slot) {
    case Slot::Ext:
    case Slot::Cliff: return 1;
    case Slot::Left: return left_ == PolyKind::Anticommuting ? 1 : 0;
    case Slot::Right: return right_ == PolyKind::Anticommuting ? 1 : 0;
    case Slot::Group: return group_ == GroupKind::Spin ? sym_->length(l.perm) & 1 : 0;
  }
  return 0;
}

int Algebra::parity(const Monomial& m) const {
  int p = std::popcount(static_cast<unsigned>(m.ext)) + std::popcount(static_cast<unsigned>(m.cliff));
  if (left_ == PolyKind::Anticommuting) p += m.left_degree();
  if (right_ == PolyKind::Anticommuting) p += m.right_degree();
  if (group_ == GroupKind::Spin) p += sym_->length(m.group);
  return p & 1;
}

size_t Algebra::KeyHash::operator()(const Key& k) const {
  size_t h = MonomialHash{}(k.m);
  size_t l = (static_cast<size_t>(k.l.slot) << 40) ^ (static_cast<size_t>(k.l.index + 16) << 32) ^
             (static_cast<size_t>(k.l.power + 4) << 24) ^ k.l.perm;
  return h ^ (l * 0xff51afd7ed558ccdULL);
}

const Algebra::Result& Algebra::lmul(const Letter& l, const Monomial& m) const {
  Key key{l, m};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Result r = compute(l, m);
  // References into an unordered_map survive rehashing.
  return cache_.emplace(key, std::move(r)).first->second;
}

std::pair<Letter, Monomial> Algebra::split_first(const Monomial& m) const {
  Monomial rest = m;
  if (m.ext) {
    int i = std::countr_zero(static_cast<unsigned>(m.ext));
    rest.ext &= static_cast<std::uint8_t>(~(1u << i));
    return {E(i), rest};
  }
  for (int i = 0; i < spec_.n; ++i) {
    if (m.left[i] != 0) {
      int p = m.left[i] > 0 ? 1 : -1;
      rest.left[i] = static_cast<std::int16_t>(rest.left[i] - p);
      return {L(i, p), rest};
    }
  }
  if (m.group) {
    rest.group = 0;
    return {G(m.group), rest};
  }
  if (m.cliff) {
    int i = std::countr_zero(static_cast<unsigned>(m.cliff));
    rest.cliff &= static_cast<std::uint8_t>(~(1u << i));
    return {C(i), rest};
  }
  for (int i = 0; i < spec_.n; ++i) {
    if (m.right[i] != 0) {
      int p = m.right[i] > 0 ? 1 : -1;
      rest.right[i] = static_cast<std::int16_t>(rest.right[i] - p);
      return {R(i, p), rest};
    }
  }
  throw std::logic_error("split_first of the identity");
}

std::pair<int, Monomial> Algebra::merge(const Letter& l, const Monomial& m) const {
  Monomial r = m;
  int sign = 1;
  auto poly = [&](std::array<std::int16_t, kMaxRank>& exps, PolyKind kind) {
    if (kind == PolyKind::Anticommuting) {
      int below = 0;
      for (int j = 0; j < l.index; ++j) below += exps[j];
      if (below & 1) sign = -sign;
    }
    exps[l.index] = static_cast<std::int16_t>(exps[l.index] + l.power);
  };
  switch (l.slot) {
    case Slot::Ext: {
      auto p = clifford_mul(static_cast<CliffordWord>(1u << l.index), m.ext);
      sign = p.sign;
      r.ext = p.value;
      break;
    }
    case Slot::Cliff: {
      auto p = clifford_mul(static_cast<CliffordWord>(1u << l.index), m.cliff);
      sign = p.sign;
      r.cliff = p.value;
      break;
    }
    case Slot::Left: poly(r.left, left_); break;
    case Slot::Right: poly(r.right, right_); break;
    case Slot::Group:
      if (group_ == GroupKind::Spin) sign = sym_->spin_cocycle(l.perm, m.group);
      r.group = static_cast<std::uint16_t>(sym_->compose(l.perm, m.group));
      break;
  }
  return {sign, r};
}

Letter Algebra::perm_letter(int id) const { return G(id); }

Word Algebra::odd_transposition_word(int i, int j, int& sign) const {
  auto t = spinhecke::odd_transposition(i + 1, j + 1, spec_.n);
  sign = t.sign;
  return {G(sym_->id_of(t.value))};
}

void Algebra::lmul_word_into(const Word& w, const Scalar& c, const Monomial& rest,
                             std::map<Monomial, Scalar, MonomialOrder>& acc) const {
  std::map<Monomial, Scalar, MonomialOrder> cur{{rest, c}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::map<Monomial, Scalar, MonomialOrder> next;
    for (const auto& [m, s] : cur) {
      for (const auto& [m2, s2] : lmul(*it, m)) {
        auto& slot = next[m2];
        slot += s * s2;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  for (const auto& [m, s] : cur) acc[m] += s;
}

Algebra::Result Algebra::compute(const Letter& l, const Monomial& m) const {
  Result out;
  if (m.is_identity()) {
    auto [s, r] = merge(l, m);
    out.emplace_back(r, Scalar(s));
    return out;
  }
  auto [f, rest] = split_first(m);
  if (l.slot <= f.slot) {
    auto [s, r] = merge(l, m);
    out.emplace_back(r, Scalar(s));
    return out;
  }
  std::map<Monomial, Scalar, MonomialOrder> acc;
  if (f.slot == Slot::Ext) {
    const int s = koszul_sign(letter_parity(l), 1);
    for (const auto& [m1, c1] : lmul(l, rest))
      for (const auto& [m2, c2] : lmul(f, m1)) acc[m2] += Scalar(s) * c1 * c2;
  } else if (auto t = reorder(l, f)) {
    for (const auto& [c, w] : *t) lmul_word_into(w, c, rest, acc);
  } else if (l.slot == Slot::Group && !sym_->simple_index(l.perm)) {
    // sigma = beta * s_i * sigma' with i a left descent.
    int i = sym_->first_left_descent(l.perm);
    int si = sym_->simple_id(i);
    int tail = sym_->compose(si, l.perm);
    int s = group_ == GroupKind::Spin ? sym_->spin_cocycle(si, tail) : 1;
    lmul_word_into({G(si), G(tail)}, Scalar(s), m, acc);
  } else if (f.slot == Slot::Group && !sym_->simple_index(f.perm)) {
    int i = sym_->first_left_descent(f.perm);
    int si = sym_->simple_id(i);
    int tail = sym_->compose(si, f.perm);
    int s = group_ == GroupKind::Spin ? sym_->spin_cocycle(si, tail) : 1;
    auto t2 = reorder(l, G(si));
    if (!t2) throw std::logic_error("missing rewrite rule against a simple reflection");
    Monomial shifted = rest;
    shifted.group = static_cast<std::uint16_t>(tail);
    for (const auto& [c, w] : *t2) lmul_word_into(w, c * Scalar(s), shifted, acc);
  } else {
    throw std::logic_error("no rewrite rule in " + name());
  }
  for (auto& [mm, c] : acc)
    if (!c.is_zero()) out.emplace_back(mm, c);
  return out;
}

// The rewrite table: l * f for l strictly after f in normal order, where f
// is the first letter of a normal monomial. Returns nullopt when f is a
// non-simple group element and only simple rules are available.
std::optional<Terms> Algebra::reorder(const Letter& l, const Letter& f) const {
  const Scalar u = this->u();
  const int n = spec_.n;
  Terms t;
  auto add = [&t](Scalar c, Word w) { t.emplace_back(std::move(c), std::move(w)); };
  const bool spin = group_ == GroupKind::Spin;

  // ---- Clifford letter against the group or the left polynomials.
  if (l.slot == Slot::Cliff) {
    if (f.slot == Slot::Group) {
      const int j = sym_->image(sym_->inverse(f.perm), l.index);
      add(Scalar(1), {f, C(j)});
      return t;
    }
    if (f.slot == Slot::Left) {
      int s = 1;
      if (spec_.kind != Kind::TrigDaHCa && l.index == f.index) s = -1;
      add(Scalar(s), {f, l});
      return t;
    }
  }

  // ---- group element against a left letter.
  if (l.slot == Slot::Group && f.slot == Slot::Left) {
    const int k = f.index;
    switch (spec_.kind) {
      case Kind::DaHCa:
      case Kind::TrigDaHCa:
      case Kind::TrigSDaHa:
        add(Scalar(1), {L(sym_->image(l.perm, k), f.power), l});
        return t;
      case Kind::SDaHa: {
        int s = (sym_->length(l.perm) & 1) ? -1 : 1;
        add(Scalar(s), {L(sym_->image(l.perm, k)), l});
        return t;
      }
      case Kind::AffineHC: {
        int si = sym_->simple_index(l.perm);
        if (!si) return std::nullopt;
        const int p = si - 1;
        if (k == p) {
          // s_i a_i = a_{i+1} s_i - 1 + c_{i+1} c_i
          add(Scalar(1), {L(p + 1), l});
          add(Scalar(-1), {});
          add(Scalar(1), {C(p + 1), C(p)});
        } else if (k == p + 1) {
          // s_i a_{i+1} = a_i s_i + 1 + c_{i+1} c_i
          add(Scalar(1), {L(p), l});
          add(Scalar(1), {});
          add(Scalar(1), {C(p + 1), C(p)});
        } else {
          add(Scalar(1), {f, l});
        }
        return t;
      }
      case Kind::SpinAffine: {
        int si = sym_->simple_index(l.perm);
        if (!si) return std::nullopt;
        const int p = si - 1;
        if (k == p) {
          // t_i b_i = 1 - b_{i+1} t_i
          add(Scalar(1), {});
          add(Scalar(-1), {L(p + 1), l});
        } else if (k == p + 1) {
          add(Scalar(1), {});
          add(Scalar(-1), {L(p), l});
        } else {
          add(Scalar(-1), {f, l});
        }
        return t;
      }
      default: break;
    }
  }

  // ---- right letter.
  if (l.slot == Slot::Right) {
    const int j = l.index;
    if (f.slot == Slot::Cliff) {
      int s = (spec_.kind == Kind::TrigDaHCa && f.index == j) ? -1 : 1;
      add(Scalar(s), {f, l});
      return t;
    }
    if (f.slot == Slot::Group) {
      if (spec_.kind == Kind::DaHCa || spec_.kind == Kind::SDaHa) {
        add(Scalar(1), {f, R(sym_->image(sym_->inverse(f.perm), j), l.power)});
        return t;
      }
      int si = sym_->simple_index(f.perm);
      if (!si) return std::nullopt;
      const int p = si - 1;
      if (spec_.kind == Kind::TrigDaHCa) {
        if (j == p + 1) {
          // epsv_{i+1} s_i = s_i epsv_i + u (1 - c_{i+1} c_i)
          add(Scalar(1), {f, R(p)});
          add(u, {});
          add(-u, {C(p + 1), C(p)});
        } else if (j == p) {
          // epsv_i s_i = s_i epsv_{i+1} - u (1 - c_i c_{i+1})
          add(Scalar(1), {f, R(p + 1)});
          add(-u, {});
          add(u, {C(p), C(p + 1)});
        } else {
          add(Scalar(1), {f, l});
        }
        return t;
      }
      if (spec_.kind == Kind::TrigSDaHa) {
        if (j == p + 1) {
          // zeta_{i+1} t_i = u - t_i zeta_i
          add(u, {});
          add(Scalar(-1), {f, R(p)});
        } else if (j == p) {
          add(u, {});
          add(Scalar(-1), {f, R(p + 1)});
        } else {
          add(Scalar(-1), {f, l});
        }
        return t;
      }
    }
    if (f.slot == Slot::Left) {
      const int k = f.index;
      // [l, f] as words.
      Terms comm;
      auto cadd = [&comm](Scalar c, Word w) { comm.emplace_back(std::move(c), std::move(w)); };
      switch (spec_.kind) {
        case Kind::DaHCa:
          if (j != k) {
            // [y_j, x_k] = u (1 + c_j c_k) s_kj
            int s = sym_->transposition_id(j + 1, k + 1);
            cadd(u, {G(s)});
            cadd(u, {C(j), C(k), G(s)});
          } else {
            for (int m = 0; m < n; ++m) {
              if (m == j) continue;
              int s = sym_->transposition_id(m + 1, j + 1);
              cadd(-u, {G(s)});
              cadd(-u, {C(m), C(j), G(s)});
            }
          }
          break;
        case Kind::SDaHa:
          if (j != k) {
            int sign;
            Word w = odd_transposition_word(j, k, sign);
            cadd(u * Scalar(sign), w);
          } else {
            for (int m = 0; m < n; ++m) {
              if (m == j) continue;
              int sign;
              Word w = odd_transposition_word(j, m, sign);
              cadd(u * Scalar(sign), w);
            }
          }
          break;
        case Kind::TrigDaHCa:
        case Kind::TrigSDaHa: {
          // Base cases of [epsv_i, e^eta] for eta = +-eps_k.
          auto correction = [&](int m, const Scalar& c, Letter e) {
            if (spec_.kind == Kind::TrigDaHCa) {
              int s = sym_->transposition_id(m + 1, j + 1);
              cadd(c, {e, G(s)});
              cadd(-c, {e, C(j), C(m), G(s)});
            } else {
              int sign;
              Word w = odd_transposition_word(m, j, sign);
              w.insert(w.begin(), e);
              cadd(c * Scalar(sign), w);
            }
          };
          if (f.power > 0) {
            if (k != j) {
              correction(k, -u, L(std::min(j, k), 1));
            } else {
              for (int m = 0; m < n; ++m)
                if (m != j) correction(m, u, L(std::min(j, m), 1));
            }
          } else {
            if (k != j) {
              correction(k, u, L(std::max(j, k), -1));
            } else {
              for (int m = 0; m < n; ++m)
                if (m != j) correction(m, -u, L(std::max(j, m), -1));
            }
          }
          break;
        }
        default: return std::nullopt;
      }
      if (l.power > 0) {
        add(Scalar(1), {f, l});
        for (auto& [c, w] : comm) add(c, w);
      } else {
        // y^-1 a = a y^-1 - y^-1 [y, a] y^-1
        Letter inv = R(j, -1);
        add(Scalar(1), {f, l});
        for (auto& [c, w] : comm) {
          Word ww{inv};
          ww.insert(ww.end(), w.begin(), w.end());
          ww.push_back(inv);
          add(-c, ww);
        }
      }
      (void)spin;
      return t;
    }
  }
  return std::nullopt;
}

Word Algebra::letters(const Monomial& m) const {
  Word w;
  for (int i = 0; i < spec_.n; ++i)
    if (m.ext >> i & 1u) w.push_back(E(i));
  for (int i = 0; i < spec_.n; ++i) {
    int a = m.left[i];
    for (int k = 0; k < std::abs(a); ++k) w.push_back(L(i, a > 0 ? 1 : -1));
  }
  if (m.group) w.push_back(G(m.group));
  for (int i = 0; i < spec_.n; ++i)
    if (m.cliff >> i & 1u) w.push_back(C(i));
  for (int i = 0; i < spec_.n; ++i) {
    int a = m.right[i];
    for (int k = 0; k < std::abs(a); ++k) w.push_back(R(i, a > 0 ? 1 : -1));
  }
  return w;
}

namespace {

std::string poly_piece(PolyKind kind, const char* name, int i, int a) {
  std::string idx = std::to_string(i + 1);
  if (kind == PolyKind::Laurent && std::string(name) == "e") {
    std::string base = (a > 0 ? "e(" : "einv(") + idx + ")";
    int mag = std::abs(a);
    return mag == 1 ? base : base + "^" + std::to_string(mag);
  }
  bool paren = std::string(name).size() > 2;  // epsv(1), zeta(1)
  std::string base = paren ? std::string(name) + "(" + idx + ")" : std::string(name) + idx;
  return a == 1 ? base : base + "^" + std::to_string(a);
}

std::string group_piece(const SymmetricGroup& g, GroupKind kind, int id) {
  if (id == 0) return {};
  std::string out;
  if (kind == GroupKind::Plain) {
    const Permutation& p = g.element(id);
    // A transposition renders as s_ij.
    std::vector<int> moved;
    for (int i = 0; i < p.size(); ++i)
      if (p(i) != i) moved.push_back(i);
    if (moved.size() == 2)
      return "s" + std::to_string(moved[0] + 1) + std::to_string(moved[1] + 1);
    for (int k : g.word(id)) {
      if (!out.empty()) out += "*";
      out += "s" + std::to_string(k) + std::to_string(k + 1);
    }
    return out;
  }
  for (int k : g.word(id)) {
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string Algebra::render(const Monomial& m) const {
  std::vector<std::string> parts;
  const char* ext_name = cliff_ ? "C" : "c";
  for (int i = 0; i < spec_.n; ++i)
    if (m.ext >> i & 1u) parts.push_back(ext_name + std::to_string(i + 1));
  for (int i = 0; i < spec_.n; ++i)
    if (m.left[i]) parts.push_back(poly_piece(left_, left_name(), i, m.left[i]));
  if (m.group) parts.push_back(group_piece(*sym_, group_, m.group));
  for (int i = 0; i < spec_.n; ++i)
    if (m.cliff >> i & 1u) parts.push_back("c" + std::to_string(i + 1));
  for (int i = 0; i < spec_.n; ++i)
    if (m.right[i]) parts.push_back(poly_piece(right_, right_name(), i, m.right[i]));
  if (parts.empty()) return "1";
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "*";
    s += p;
  }
  return s;
}

std::string letter_name(const Algebra& a, const Letter& l) {
  Monomial m;
  switch (l.slot) {
    case Slot::Ext: m.ext = static_cast<std::uint8_t>(1u << l.index); break;
    case Slot::Cliff: m.cliff = static_cast<std::uint8_t>(1u << l.index); break;
    case Slot::Left: m.left[l.index] = l.power; break;
    case Slot::Right: m.right[l.index] = l.power; break;
    case Slot::Group: m.group = l.perm; break;
  }
  return a.render(m);
}

// ---------------------------------------------------------------- element

Element::Element(const Algebra& a, const Scalar& s) : alg_(&a) {
  if (!s.is_zero()) terms_.emplace(Monomial{}, s);
}

Element::Element(const Algebra& a, const Monomial& m, const Scalar& s) : alg_(&a) {
  if (!s.is_zero()) terms_.emplace(m, s);
}

Element Element::word(const Algebra& a, const Word& w, const Scalar& s) {
  Element e(a, s);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = e.lmul(*it);
  return e;
}

Scalar Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, s] : r.terms_) s = -s;
  return r;
}

namespace {
void same_algebra(const Algebra& a, const Algebra& b) {
  if (&a != &b) throw std::invalid_argument("algebra mismatch: " + a.name() + " vs " + b.name());
}
}  // namespace

Element& Element::operator+=(const Element& o) {
  same_algebra(*alg_, *o.alg_);
  for (const auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  same_algebra(*alg_, *o.alg_);
  for (const auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element Element::lmul(const Letter& l) const {
  Element r(*alg_);
  for (const auto& [m, s] : terms_)
    for (const auto& [m2, s2] : alg_->lmul(l, m)) r.add_term(m2, s * s2);
  return r;
}

Element operator*(const Element& a, const Element& b) {
  same_algebra(*a.alg_, *b.alg_);
  Element out(*a.alg_);
  for (const auto& [ma, ca] : a.terms_) {
    Element cur = b;
    Word w = a.alg_->letters(ma);
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = cur.lmul(*it);
    cur *= ca;
    out += cur;
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  return a.alg_ == b.alg_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

Parity Element::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, s] : terms_) (alg_->parity(m) ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

int Element::degree() const {
  int d = -1;
  for (const auto& [m, s] : terms_) d = std::max(d, m.left_degree() + m.right_degree());
  return d;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  const bool multi = terms_.size() > 1;
  for (const auto& [m, s] : terms_) {
    int sign = 1;
    Scalar mag = s;
    if (s.is_atomic() && s.leading_sign() < 0) {
      sign = -1;
      mag = -s;
    }
    std::string body;
    if (m.is_identity()) {
      body = mag.to_string();
      if (!mag.is_atomic() && multi) body = "(" + body + ")";
    } else if (mag.is_one()) {
      body = alg_->render(m);
    } else {
      std::string c = mag.to_string();
      if (!mag.is_atomic()) c = "(" + c + ")";
      body = c + "*" + alg_->render(m);
    }
    if (first) {
      out = (sign < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sign < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

nlohmann::ordered_json Element::to_json() const {
  nlohmann::ordered_json j;
  j["algebra"] = alg_->name();
  j["n"] = alg_->n();
  if (alg_->spec().u_value) j["u"] = alg_->spec().u_value->to_string();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, s] : terms_) {
    nlohmann::ordered_json t;
    t["coeff"] = s.to_string();
    t["mono"] = alg_->render(m);
    arr.push_back(t);
  }
  j["terms"] = arr;
  return j;
}

Element pow(const Element& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of an element");
  Element r = one(a.algebra());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Element bracket(const Element& a, const Element& b) { return a * b - b * a; }

Element super_bracket(const Element& a, const Element& b, bool anti) {
  return anti ? a * b + b * a : a * b - b * a;
}

Element graded_bracket(const Element& a, const Element& b) {
  bool anti = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
  return super_bracket(a, b, anti);
}

Element specialize(const Element& a, const QOmega& u0) {
  AlgebraSpec spec = a.algebra().spec();
  spec.u_value = u0;
  Element r(Algebra::get(spec));
  for (const auto& [m, s] : a.terms()) r.add_term(m, Scalar(s.eval(u0)));
  return r;
}

// ------------------------------------------------------------- generators

namespace {
void check_index(const Algebra& a, int i, const char* what) {
  if (i < 1 || i > a.n())
    throw RankError(std::string(what) + " index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(a.n()));
}
}  // namespace

Element one(const Algebra& a) { return Element(a, Scalar(1)); }

Letter left_letter(const Algebra& a, int i, int power) {
  if (a.left_kind() == PolyKind::None) throw RankError(a.name() + " has no left polynomial generators");
  check_index(a, i, a.left_name());
  if (power != 1 && !(power == -1 && a.left_kind() == PolyKind::Laurent))
    throw RankError("letter power must be +1 (or -1 for invertible letters)");
  return L(i - 1, power);
}

Letter right_letter(const Algebra& a, int i, int power) {
  if (a.right_kind() == PolyKind::None) throw RankError(a.name() + " has no right polynomial generators");
  check_index(a, i, a.right_name());
  if (power != 1 && !(power == -1 && a.right_kind() == PolyKind::Laurent))
    throw RankError("letter power must be +1 (or -1 for invertible letters)");
  return R(i - 1, power);
}

Letter cliff_letter(const Algebra& a, int i) {
  if (!a.has_cliff()) {
    if (a.has_ext()) return ext_letter(a, i);
    throw RankError(a.name() + " has no Clifford generators");
  }
  check_index(a, i, "c");
  return C(i - 1);
}

Letter ext_letter(const Algebra& a, int i) {
  if (!a.has_ext()) throw RankError(a.name() + " has no external Clifford factor");
  check_index(a, i, "c");
  return E(i - 1);
}

Letter group_letter(const Algebra& a, const Permutation& p) {
  if (a.group_kind() == GroupKind::None) throw RankError(a.name() + " has no group part");
  return G(a.group().id_of(p));
}

Letter simple_letter(const Algebra& a, int i) {
  if (i < 1 || i >= a.n())
    throw RankError("simple reflection index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(a.n() - 1));
  return group_letter(a, Permutation::simple(a.n(), i));
}

Element letter_element(const Algebra& a, const Letter& l) { return one(a).lmul(l); }
Element left_gen(const Algebra& a, int i, int power) { return letter_element(a, left_letter(a, i, power)); }
Element right_gen(const Algebra& a, int i, int power) { return letter_element(a, right_letter(a, i, power)); }
Element cliff_gen(const Algebra& a, int i) { return letter_element(a, cliff_letter(a, i)); }
Element ext_gen(const Algebra& a, int i) { return letter_element(a, ext_letter(a, i)); }
Element simple_gen(const Algebra& a, int i) { return letter_element(a, simple_letter(a, i)); }
Element group_gen(const Algebra& a, const Permutation& p) { return letter_element(a, group_letter(a, p)); }

Element transposition(const Algebra& a, int i, int j) {
  if (a.group_kind() != GroupKind::Plain) throw RankError(a.name() + " has no plain transpositions");
  check_index(a, i, "s");
  check_index(a, j, "s");
  if (i == j) throw RankError("transposition needs distinct indices");
  return group_gen(a, Permutation::transposition(a.n(), i, j));
}

Element odd_transposition(const Algebra& a, int i, int j) {
  if (a.group_kind() != GroupKind::Spin) throw RankError(a.name() + " has no odd transpositions");
  auto t = spinhecke::odd_transposition(i, j, a.n());
  return group_gen(a, t.value) * Scalar(t.sign);
}

std::vector<Letter> generators(const Algebra& a) {
  std::vector<Letter> g;
  const int n = a.n();
  for (int i = 1; i <= n && a.has_ext(); ++i) g.push_back(E(i - 1));
  for (int i = 1; i <= n && a.left_kind() != PolyKind::None; ++i) {
    g.push_back(L(i - 1));
    if (a.left_kind() == PolyKind::Laurent) g.push_back(L(i - 1, -1));
  }
  for (int i = 1; i < n && a.group_kind() != GroupKind::None; ++i) g.push_back(simple_letter(a, i));
  for (int i = 1; i <= n && a.has_cliff(); ++i) g.push_back(C(i - 1));
  for (int i = 1; i <= n && a.right_kind() != PolyKind::None; ++i) {
    g.push_back(R(i - 1));
    if (a.right_kind() == PolyKind::Laurent) g.push_back(R(i - 1, -1));
  }
  return g;
}

// -------------------------------------------------------------- relations

Element evaluate(const Algebra& a, const std::vector<FormalTerm>& terms) {
  Element e(a);
  for (const auto& t : terms) e += Element::word(a, t.word, t.coeff);
  return e;
}

std::vector<FormalTerm> trig_commutator_terms(const Algebra& a, int i, const std::vector<int>& eta) {
  if (a.kind() != Kind::TrigDaHCa && a.kind() != Kind::TrigSDaHa)
    throw std::invalid_argument("trigonometric commutator needs a trigonometric algebra");
  const int n = a.n();
  check_index(a, i, "commutator");
  if (static_cast<int>(eta.size()) != n) throw RankError("weight has wrong length");
  const int ii = i - 1;
  const Scalar u = a.u();
  std::vector<FormalTerm> out;
  for (int k = 0; k < n; ++k) {
    if (k == ii) continue;
    const int p = eta[ii], q = eta[k];
    if (p == q) continue;
    // (r^q - r^p)/(1 - r) with r = e^{eps_k - eps_i}, scaled by e^{(p+q) eps_i};
    // for k < i one extra factor r.
    int lo = std::min(p, q), hi = std::max(p, q);
    int sign = p > q ? 1 : -1;
    for (int m = lo; m < hi; ++m) {
      int mm = k < ii ? m + 1 : m;
      std::vector<int> w = eta;
      w[ii] = p + q - mm;
      w[k] = mm;
      Word ew;
      for (int idx = 0; idx < n; ++idx)
        for (int c = 0; c < std::abs(w[idx]); ++c) ew.push_back(L(idx, w[idx] > 0 ? 1 : -1));
      Scalar coeff = u * Scalar(sign);
      if (a.kind() == Kind::TrigDaHCa) {
        int s = a.group().transposition_id(k + 1, ii + 1);
        Word w1 = ew;
        w1.push_back(G(s));
        Word w2 = ew;
        w2.push_back(C(ii));
        w2.push_back(C(k));
        w2.push_back(G(s));
        out.push_back({coeff, w1});
        out.push_back({-coeff, w2});
      } else {
        auto t = spinhecke::odd_transposition(k + 1, ii + 1, n);
        Word w1 = ew;
        w1.push_back(G(a.group().id_of(t.value)));
        out.push_back({coeff * Scalar(t.sign), w1});
      }
    }
  }
  return out;
}

namespace {

struct RelationBuilder {
  const Algebra& a;
  std::vector<Relation> out;

  void add(std::string id, std::vector<FormalTerm> terms) { out.push_back({std::move(id), std::move(terms)}); }

  static std::string idx(int i) { return std::to_string(i); }
  static std::string idx(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }
};

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

}  // namespace

std::vector<Relation> defining_relations(const Algebra& a) {
  RelationBuilder b{a, {}};
  const int n = a.n();
  const Scalar one_s(1), minus(-1);
  const Scalar u = a.u();
  const auto& g = a.group();
  const bool spin = a.group_kind() == GroupKind::Spin;
  auto S = [&](int i) { return G(g.simple_id(i)); };  // 1-based simple index
  auto name = [&](const char* base) { return std::string(base); };

  // Group relations.
  if (a.group_kind() != GroupKind::None) {
    const char* s = spin ? "t" : "s";
    for (int i = 1; i < n; ++i) {
      b.add(name(s) + "_i^2=1 i=" + b.idx(i), {{one_s, {S(i), S(i)}}, {minus, {}}});
      if (i + 1 < n)
        b.add(name("braid i=") + b.idx(i),
              {{one_s, {S(i), S(i + 1), S(i)}}, {minus, {S(i + 1), S(i), S(i + 1)}}});
      for (int j = i + 2; j < n; ++j)
        b.add(name("far ") + s + " i,j=" + b.idx(i, j),
              {{one_s, {S(i), S(j)}}, {spin ? one_s : minus, {S(j), S(i)}}});
    }
  }
  // Clifford relations and their compatibility with the group.
  if (a.has_cliff()) {
    for (int i = 0; i < n; ++i) {
      b.add("c_i^2=1 i=" + b.idx(i + 1), {{one_s, {C(i), C(i)}}, {minus, {}}});
      for (int j = i + 1; j < n; ++j)
        b.add("c_i c_j=-c_j c_i i,j=" + b.idx(i + 1, j + 1), {{one_s, {C(i), C(j)}}, {one_s, {C(j), C(i)}}});
      for (int sg = 1; sg < g.order(); ++sg)
        b.add("sigma c_i=c_(sigma i) sigma i=" + b.idx(i + 1) + " sigma=" + g.element(sg).to_string(),
              {{one_s, {G(sg), C(i)}}, {minus, {C(g.image(sg, i)), G(sg)}}});
    }
  }
  // External Clifford factor: supercommutes with the whole algebra.
  if (a.has_ext()) {
    for (int i = 0; i < n; ++i) {
      b.add("ext c_i^2=1 i=" + b.idx(i + 1), {{one_s, {E(i), E(i)}}, {minus, {}}});
      for (int j = i + 1; j < n; ++j)
        b.add("ext anticommute i,j=" + b.idx(i + 1, j + 1), {{one_s, {E(i), E(j)}}, {one_s, {E(j), E(i)}}});
      for (const Letter& l : generators(a)) {
        if (l.slot == Slot::Ext) continue;
        int p = a.letter_parity(l);
        b.add("ext supercommutes i=" + b.idx(i + 1) + " with " + letter_name(a, l),
              {{one_s, {E(i), l}}, {Scalar(-koszul_sign(p, 1)), {l, E(i)}}});
      }
    }
  }

  auto polynomial_rels = [&](Slot slot, PolyKind kind, const std::string& nm) {
    auto P = [&](int i, int p = 1) { return mk(slot, i, p); };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Scalar s = kind == PolyKind::Anticommuting ? one_s : minus;
        b.add(nm + " commutation i,j=" + b.idx(i + 1, j + 1), {{one_s, {P(i), P(j)}}, {s, {P(j), P(i)}}});
      }
      if (kind == PolyKind::Laurent) {
        b.add(nm + " inverse i=" + b.idx(i + 1), {{one_s, {P(i), P(i, -1)}}, {minus, {}}});
        b.add(nm + " inverse' i=" + b.idx(i + 1), {{one_s, {P(i, -1), P(i)}}, {minus, {}}});
      }
    }
  };
  // sigma p_i = (+-) p_{sigma i} sigma for every sigma.
  auto equivariance = [&](Slot slot, const std::string& nm, bool odd, std::initializer_list<int> powers) {
    for (int i = 0; i < n; ++i)
      for (int sg = 1; sg < g.order(); ++sg)
        for (int p : powers) {
          Scalar s = (odd && (g.length(sg) & 1)) ? one_s : minus;
          b.add("sigma " + nm + "_i=" + nm + "_(sigma i) sigma i=" + b.idx(i + 1) + " p=" + std::to_string(p) +
                    " sigma=" + g.element(sg).to_string(),
                {{one_s, {G(sg), mk(slot, i, p)}}, {s, {mk(slot, g.image(sg, i), p), G(sg)}}});
        }
  };
  auto cliff_action = [&](Slot slot, const std::string& nm, bool anti_same, std::initializer_list<int> powers) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p : powers) {
          Scalar s = (anti_same && i == j) ? one_s : minus;
          b.add("c_j " + nm + "_i i,j=" + b.idx(i + 1, j + 1) + " p=" + std::to_string(p),
                {{one_s, {C(j), mk(slot, i, p)}}, {s, {mk(slot, i, p), C(j)}}});
        }
  };

  switch (a.kind()) {
    case Kind::Sym:
    case Kind::CliffordSym:
    case Kind::SpinSym: break;
    case Kind::AffineHC:
      polynomial_rels(Slot::Left, PolyKind::Commuting, "a");
      cliff_action(Slot::Left, "a", true, {1});
      for (int i = 1; i < n; ++i) {
        b.add("a_(i+1) s_i - s_i a_i = 1 - c_(i+1) c_i i=" + b.idx(i),
              {{one_s, {L(i), S(i)}}, {minus, {S(i), L(i - 1)}}, {minus, {}}, {one_s, {C(i), C(i - 1)}}});
        for (int j = 0; j < n; ++j)
          if (j != i - 1 && j != i)
            b.add("a_j s_i = s_i a_j i,j=" + b.idx(i, j + 1), {{one_s, {L(j), S(i)}}, {minus, {S(i), L(j)}}});
      }
      break;
    case Kind::SpinAffine:
      polynomial_rels(Slot::Left, PolyKind::Anticommuting, "b");
      for (int i = 1; i < n; ++i) {
        b.add("b_(i+1) t_i + t_i b_i = 1 i=" + b.idx(i),
              {{one_s, {L(i), S(i)}}, {one_s, {S(i), L(i - 1)}}, {minus, {}}});
        for (int j = 0; j < n; ++j)
          if (j != i - 1 && j != i)
            b.add("t_i b_j = -b_j t_i i,j=" + b.idx(i, j + 1), {{one_s, {S(i), L(j)}}, {one_s, {L(j), S(i)}}});
      }
      break;
    case Kind::DaHCa: {
      const bool loc = a.right_kind() == PolyKind::Laurent;
      polynomial_rels(Slot::Left, PolyKind::Commuting, "x");
      polynomial_rels(Slot::Right, a.right_kind(), "y");
      equivariance(Slot::Left, "x", false, {1});
      if (loc) equivariance(Slot::Right, "y", false, {1, -1});
      else equivariance(Slot::Right, "y", false, {1});
      cliff_action(Slot::Left, "x", true, {1});
      if (loc) cliff_action(Slot::Right, "y", false, {1, -1});
      else cliff_action(Slot::Right, "y", false, {1});
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          std::vector<FormalTerm> t{{one_s, {R(j), L(i)}}, {minus, {L(i), R(j)}}};
          if (i != j) {
            int s = g.transposition_id(i + 1, j + 1);
            t.push_back({-u, {G(s)}});
            t.push_back({-u, {C(j), C(i), G(s)}});
            b.add("[y_j, x_i] = u(1 + c_j c_i) s_ij i,j=" + b.idx(i + 1, j + 1), t);
          } else {
            for (int k = 0; k < n; ++k) {
              if (k == i) continue;
              int s = g.transposition_id(k + 1, i + 1);
              t.push_back({u, {G(s)}});
              t.push_back({u, {C(k), C(i), G(s)}});
            }
            b.add("[y_i, x_i] = -u sum(1 + c_k c_i) s_ki i=" + b.idx(i + 1), t);
          }
        }
      break;
    }
    case Kind::SDaHa: {
      const bool loc = a.right_kind() == PolyKind::Laurent;
      polynomial_rels(Slot::Left, PolyKind::Anticommuting, "xi");
      polynomial_rels(Slot::Right, a.right_kind(), "y");
      for (int i = 1; i < n; ++i) {
        b.add("t_i xi_i = -xi_(i+1) t_i i=" + b.idx(i), {{one_s, {S(i), L(i - 1)}}, {one_s, {L(i), S(i)}}});
        b.add("t_i y_i = y_(i+1) t_i i=" + b.idx(i), {{one_s, {S(i), R(i - 1)}}, {minus, {R(i), S(i)}}});
        if (loc)
          b.add("t_i y_i^-1 = y_(i+1)^-1 t_i i=" + b.idx(i),
                {{one_s, {S(i), R(i - 1, -1)}}, {minus, {R(i, -1), S(i)}}});
        for (int j = 0; j < n; ++j) {
          if (j == i - 1 || j == i) continue;
          b.add("t_i xi_j = -xi_j t_i i,j=" + b.idx(i, j + 1), {{one_s, {S(i), L(j)}}, {one_s, {L(j), S(i)}}});
          b.add("t_i y_j = y_j t_i i,j=" + b.idx(i, j + 1), {{one_s, {S(i), R(j)}}, {minus, {R(j), S(i)}}});
        }
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<FormalTerm> t{{one_s, {R(i), L(j)}}, {minus, {L(j), R(i)}}};
          if (i != j) {
            auto tr = spinhecke::odd_transposition(i + 1, j + 1, n);
            t.push_back({-u * Scalar(tr.sign), {G(g.id_of(tr.value))}});
            b.add("[y_i, xi_j] = u[i,j] i,j=" + b.idx(i + 1, j + 1), t);
          } else {
            for (int k = 0; k < n; ++k) {
              if (k == i) continue;
              auto tr = spinhecke::odd_transposition(i + 1, k + 1, n);
              t.push_back({-u * Scalar(tr.sign), {G(g.id_of(tr.value))}});
            }
            b.add("[y_i, xi_i] = u sum[i,k] i=" + b.idx(i + 1), t);
          }
        }
      break;
    }
    case Kind::TrigDaHCa:
    case Kind::TrigSDaHa: {
      const bool tdc = a.kind() == Kind::TrigDaHCa;
      polynomial_rels(Slot::Left, PolyKind::Laurent, "e");
      polynomial_rels(Slot::Right, tdc ? PolyKind::Commuting : PolyKind::Anticommuting, tdc ? "epsv" : "zeta");
      equivariance(Slot::Left, "e", false, {1, -1});
      if (tdc) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int p : {1, -1})
              b.add("c_j e_i = e_i c_j i,j=" + b.idx(i + 1, j + 1) + " p=" + std::to_string(p),
                    {{one_s, {C(j), L(i, p)}}, {minus, {L(i, p), C(j)}}});
        cliff_action(Slot::Right, "epsv", true, {1});
      }
      for (int i = 1; i < n; ++i) {
        if (tdc) {
          b.add("epsv_(i+1) s_i - s_i epsv_i = u(1 - c_(i+1) c_i) i=" + b.idx(i),
                {{one_s, {R(i), S(i)}}, {minus, {S(i), R(i - 1)}}, {-u, {}}, {u, {C(i), C(i - 1)}}});
        } else {
          b.add("zeta_(i+1) t_i + t_i zeta_i = u i=" + b.idx(i),
                {{one_s, {R(i), S(i)}}, {one_s, {S(i), R(i - 1)}}, {-u, {}}});
        }
        for (int j = 0; j < n; ++j) {
          if (j == i - 1 || j == i) continue;
          b.add(std::string(tdc ? "epsv_j s_i = s_i epsv_j" : "zeta_j t_i = -t_i zeta_j") + " i,j=" + b.idx(i, j + 1),
                {{one_s, {R(j), S(i)}}, {tdc ? minus : one_s, {S(i), R(j)}}});
        }
      }
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int p : {1, -1}) {
            std::vector<int> eta(n, 0);
            eta[k] = p;
            std::vector<FormalTerm> t{{one_s, {R(i), L(k, p)}}, {minus, {L(k, p), R(i)}}};
            for (auto& ft : trig_commutator_terms(a, i + 1, eta)) t.push_back({-ft.coeff, ft.word});
            b.add(std::string(tdc ? "[epsv_i, e^eta]" : "[zeta_i, e^eta]") + " i=" + b.idx(i + 1) +
                      " eta=" + (p > 0 ? "+" : "-") + "eps" + b.idx(k + 1),
                  t);
          }
      break;
    }
  }
  (void)cat;
  return std::move(b.out);
}

// ---------------------------------------------------------------- reports

int Report::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
}

int Report::failed() const { return static_cast<int>(results.size()) - passed(); }

void Report::add(std::string id, bool pass, std::string witness) {
  results.push_back({std::move(id), pass, std::move(witness)});
}

void Report::add_zero(std::string id, const Element& e) {
  std::string w;
  if (!e.is_zero()) {
    w = e.to_string();
    if (w.size() > 400) w = w.substr(0, 400) + "...";
  }
  add(std::move(id), e.is_zero(), std::move(w));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& r : other.results) results.push_back({prefix + r.id, r.pass, r.witness});
}

Report verify_relations(const Algebra& a) {
  Report rep;
  for (const auto& rel : defining_relations(a)) rep.add_zero(rel.id, evaluate(a, rel.terms));
  return rep;
}

Monomial random_monomial(const Algebra& a, int degree_bound, std::mt19937_64& rng) {
  Monomial m;
  const int n = a.n();
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (a.has_ext()) m.ext = static_cast<std::uint8_t>(pick(0, (1 << n) - 1));
  if (a.has_cliff()) m.cliff = static_cast<std::uint8_t>(pick(0, (1 << n) - 1));
  if (a.group_kind() != GroupKind::None) m.group = static_cast<std::uint16_t>(pick(0, a.group().order() - 1));
  int budget = pick(0, degree_bound);
  const bool has_left = a.left_kind() != PolyKind::None;
  const bool has_right = a.right_kind() != PolyKind::None;
  while (budget > 0 && (has_left || has_right)) {
    bool left = has_left && (!has_right || pick(0, 1) == 0);
    int i = pick(0, n - 1);
    PolyKind kind = left ? a.left_kind() : a.right_kind();
    auto& exps = left ? m.left : m.right;
    int step = 1;
    if (kind == PolyKind::Laurent) {
      // Keep the sign of an existing exponent so that |exps| stays within budget.
      if (exps[i] < 0 || (exps[i] == 0 && pick(0, 1) == 0)) step = -1;
    }
    exps[i] = static_cast<std::int16_t>(exps[i] + step);
    --budget;
  }
  return m;
}

Report confluence_probe(const Algebra& a, const ConfluenceOptions& opt) {
  Report rep;
  std::mt19937_64 rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    Monomial ma = random_monomial(a, opt.degree_bound, rng);
    Monomial mb = random_monomial(a, opt.degree_bound, rng);
    Monomial mc = random_monomial(a, opt.degree_bound, rng);
    Element ea(a, ma), eb(a, mb), ec(a, mc);
    Element left = (ea * eb) * ec;
    Element right = ea * (eb * ec);
    std::string id = "(" + a.render(ma) + ")(" + a.render(mb) + ")(" + a.render(mc) + ")";
    rep.add_zero("assoc " + id, left - right);
    Element again(a);
    for (const auto& [m, s] : left.terms()) again += Element::word(a, a.letters(m), s);
    rep.add_zero("idempotent " + id, again - left);
  }
  if (opt.relation_samples > 0) {
    for (const auto& rel : defining_relations(a)) {
      for (int k = 0; k < opt.relation_samples; ++k) {
        Element m(a, random_monomial(a, opt.degree_bound, rng));
        Element sum(a);
        for (const auto& t : rel.terms) {
          Element cur = m;
          for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) cur = cur.lmul(*it);
          sum += cur * t.coeff;
        }
        rep.add_zero("relation " + rel.id + " on " + m.to_string(), sum);
      }
    }
  }
  return rep;
}

}  // namespace spinhecke
