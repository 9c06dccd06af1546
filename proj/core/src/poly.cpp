#include "siflag/poly.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <numeric>
#include <vector>

#include "siflag/error.hpp"

namespace siflag {

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_[Mono{}] = c;
  return p;
}

Poly Poly::monomial(const Mono& m, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

std::pair<Mono, mpq_class> Poly::leading() const {
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::add_term(const Mono& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator*=(const Mono& mono) {
  Map out;
  for (auto& [m, v] : terms_) out.emplace_hint(out.end(), m * mono, std::move(v));
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    Poly r = a;
    const auto& [m, c] = *b.terms_.begin();
    r *= m;
    r *= c;
    return r;
  }
  if (a.is_monomial()) return b * a;
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::map_monomials(const std::function<Mono(const Mono&)>& f) const {
  Poly r;
  for (const auto& [m, c] : terms_) r.add_term(f(m), c);
  return r;
}

int Poly::t_valuation() const {
  int v = INT_MAX;
  for (const auto& [m, c] : terms_) v = std::min(v, m.t);
  return v;
}

int Poly::max_t() const {
  int v = INT_MIN;
  for (const auto& [m, c] : terms_) v = std::max(v, m.t);
  return v;
}

Poly Poly::t_coefficient(int halves) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.t == halves) r.terms_.emplace(Mono{m.q, 0, m.x}, c);
  return r;
}

bool Poly::is_t_free() const {
  for (const auto& [m, c] : terms_)
    if (m.t != 0) return false;
  return true;
}

namespace {

constexpr int kVars = kMaxRank + 2;
using Expo = std::array<int, kVars>;

Expo to_expo(const Mono& m) {
  Expo e{};
  e[0] = m.q;
  e[1] = m.t;
  for (int i = 0; i < kMaxRank; ++i) e[static_cast<std::size_t>(i + 2)] = m.x[i];
  return e;
}

Mono to_mono(const Expo& e) {
  Mono m;
  m.q = e[0];
  m.t = e[1];
  for (int i = 0; i < kMaxRank; ++i) m.x[i] = e[static_cast<std::size_t>(i + 2)];
  return m;
}

// Shifts every exponent so the minimum in each variable is zero; returns the shift.
Expo min_exponents(const Poly& p) {
  Expo lo;
  lo.fill(INT_MAX);
  for (const auto& [m, c] : p.terms()) {
    Expo e = to_expo(m);
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  }
  return lo;
}

// Fast rejection for exact division: specialize every variable but one to a
// fixed residue mod a prime and test univariate divisibility there. If d | n
// then the specializations divide too, so a nonzero remainder proves d does not
// divide n. Returns true when division may succeed.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// Residue of a rational; nullopt if the denominator vanishes mod p.
std::optional<std::uint64_t> residue(const mpq_class& c) {
  std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
  if (c.get_den() == 1) return num;
  std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(num, invmod(den));
}

// Exponent of v -> coefficient, other variables set to fixed residues.
std::optional<std::map<int, std::uint64_t>> specialize(const Poly& p, std::size_t v) {
  static const std::array<std::uint64_t, kVars> point = [] {
    std::array<std::uint64_t, kVars> a{};
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    for (auto& x : a) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      x = s % (kPrime - 2) + 2;
    }
    return a;
  }();
  constexpr int kTab = 512;
  // pow_table[i][k + kTab] = point[i]^k
  static const auto pow_table = [] {
    std::vector<std::array<std::uint64_t, 2 * kTab + 1>> t(kVars);
    for (std::size_t i = 0; i < kVars; ++i) {
      std::uint64_t inv = invmod(point[i]);
      t[i][kTab] = 1;
      for (int k = 1; k <= kTab; ++k) {
        t[i][kTab + k] = mulmod(t[i][kTab + k - 1], point[i]);
        t[i][kTab - k] = mulmod(t[i][kTab - k + 1], inv);
      }
    }
    return t;
  }();
  auto power = [&](std::size_t i, int k) {
    if (k >= -kTab && k <= kTab) return pow_table[i][static_cast<std::size_t>(k + kTab)];
    return k > 0 ? powmod(point[i], static_cast<std::uint64_t>(k))
                 : powmod(invmod(point[i]), static_cast<std::uint64_t>(-k));
  };
  std::map<int, std::uint64_t> out;
  for (const auto& [m, c] : p.terms()) {
    auto r = residue(c);
    if (!r) return std::nullopt;
    std::uint64_t val = *r;
    Expo e = to_expo(m);
    for (std::size_t i = 0; i < kVars; ++i) {
      if (i == v || e[i] == 0) continue;
      val = mulmod(val, power(i, e[i]));
    }
    auto& slot = out[e[v]];
    slot = (slot + val) % kPrime;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool may_divide(const Poly& n, const Poly& d) {
  Expo lo = min_exponents(d);
  Expo hi;
  hi.fill(INT_MIN);
  for (const auto& [m, c] : d.terms()) {
    Expo e = to_expo(m);
    for (std::size_t i = 0; i < kVars; ++i) hi[i] = std::max(hi[i], e[i]);
  }
  std::size_t v = 0;
  for (std::size_t i = 1; i < kVars; ++i)
    if (hi[i] - lo[i] > hi[v] - lo[v]) v = i;
  if (hi[v] == lo[v]) return true;
  auto ns = specialize(n, v);
  auto ds = specialize(d, v);
  if (!ns || !ds || ds->size() < 2) return true;
  if (ns->empty()) return true;
  // Dense univariate remainder after shifting to nonnegative exponents.
  int nlo = ns->begin()->first, dlo = ds->begin()->first;
  std::vector<std::uint64_t> a(static_cast<std::size_t>(ns->rbegin()->first - nlo + 1), 0);
  std::vector<std::uint64_t> b(static_cast<std::size_t>(ds->rbegin()->first - dlo + 1), 0);
  for (const auto& [k, c] : *ns) a[static_cast<std::size_t>(k - nlo)] = c;
  for (const auto& [k, c] : *ds) b[static_cast<std::size_t>(k - dlo)] = c;
  if (a.size() < b.size()) return false;
  std::uint64_t lead_inv = invmod(b.back());
  for (std::size_t top = a.size(); top-- >= b.size();) {
    std::uint64_t f = mulmod(a[top], lead_inv);
    if (f == 0) continue;
    std::size_t shift = top + 1 - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + kPrime - mulmod(f, b[j])) % kPrime;
  }
  for (std::size_t j = 0; j + 1 < b.size(); ++j)
    if (a[j] != 0) return false;
  return true;
}

}  // namespace

std::optional<Poly> Poly::exact_divide(const Poly& d) const {
  if (d.is_zero()) throw AssertionFailure("division by zero polynomial");
  if (is_zero()) return Poly{};
  if (d.is_monomial()) {
    const auto& [m, c] = *d.terms_.begin();
    Poly r = *this;
    r *= m.inverse();
    r *= mpq_class(1) / c;
    return r;
  }
  if (!may_divide(*this, d)) return std::nullopt;
  // Clear negative exponents, then divide in the ordinary polynomial ring under
  // grlex. After the shift d has no monomial content, so it divides the Laurent
  // numerator iff it divides the shifted polynomial.
  Expo la = min_exponents(*this);
  Expo ld = min_exponents(d);
  // Keys carry the total degree first, which makes the map order grlex.
  using Key = std::pair<long, Expo>;
  using Rem = std::map<Key, mpq_class>;
  auto shifted = [](const Poly& p, const Expo& lo) {
    Rem r;
    for (const auto& [m, c] : p.terms()) {
      Expo e = to_expo(m);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] -= lo[i];
      r.emplace(Key{std::accumulate(e.begin(), e.end(), 0L), e}, c);
    }
    return r;
  };
  Rem rem = shifted(*this, la);
  Rem dd = shifted(d, ld);
  const Key dl = dd.rbegin()->first;
  const mpq_class dc = dd.rbegin()->second;
  Poly quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Expo diff;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = top->first.second[i] - dl.second[i];
      if (diff[i] < 0) return std::nullopt;
    }
    long ddeg = top->first.first - dl.first;
    mpq_class coef = top->second / dc;
    for (const auto& [e, c] : dd) {
      Key k{e.first + ddeg, {}};
      for (std::size_t i = 0; i < diff.size(); ++i) k.second[i] = e.second[i] + diff[i];
      auto [it, ins] = rem.try_emplace(k, -coef * c);
      if (!ins) {
        it->second -= coef * c;
        if (it->second == 0) rem.erase(it);
      }
    }
    Expo qe;
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = diff[i] + la[i] - ld[i];
    quot.add_term(to_mono(qe), coef);
  }
  return quot;
}

std::string exponent_string(long num, long den) {
  long g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string rational_string(const mpq_class& c) { return c.get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class c;
  if (s.empty() || c.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (c.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  c.canonicalize();
  return c;
}

std::string Poly::format(int q_scale, int rank) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    auto power = [](const char* var, long num, long den) {
      std::string e = exponent_string(num, den);
      return e == "1" ? std::string(var) : std::string(var) + "^" + e;
    };
    if (m.q != 0) factors.push_back(power("q", m.q, q_scale));
    if (m.t != 0) factors.push_back(power("t", m.t, 2));
    if (!m.x.is_zero()) factors.push_back("x" + to_string(m.x, rank));
    mpq_class a = abs(c);
    bool neg = c < 0;
    std::string body;
    if (factors.empty()) {
      body = a.get_str();
    } else {
      if (a != 1) body = a.get_str() + "*";
      for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    }
    if (first) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// QLaurent

QLaurent QLaurent::q_power(int k, const mpz_class& c) {
  QLaurent r;
  r.add_term(k, c);
  return r;
}

void QLaurent::add_term(int k, const mpz_class& c) {
  if (c == 0) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator-(QLaurent a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

QLaurent QLaurent::inverted() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string QLaurent::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    mpz_class a = abs(c);
    std::string body;
    if (k == 0) {
      body = a.get_str();
    } else {
      std::string qp = k == 1 ? "q" : "q^" + std::to_string(k);
      body = a == 1 ? qp : a.get_str() + "*" + qp;
    }
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace siflag
