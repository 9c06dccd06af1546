#pragma once

// Exact Laurent polynomials.
//
// Poly models Q[q^{+-1/(2e)}, t^{+-1/2}][P]: a monomial stores its q-exponent in
// units of 1/(2e), its t-exponent in units of 1/2 and its lattice exponent in
// fundamental-weight coordinates. The scale 2e is a property of the root system
// and is not stored here.
//
// QLaurent models Z[q^{+-1}] with integral exponents.

#include <climits>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "siflag/lattice.hpp"

namespace siflag {

struct Mono {
  int q = 0;
  int t = 0;
  Weight x;

  Mono& operator*=(const Mono& o) {
    q += o.q;
    t += o.t;
    x += o.x;
    return *this;
  }
  friend Mono operator*(Mono a, const Mono& b) { return a *= b; }
  Mono inverse() const { return {-q, -t, -x}; }
  bool is_one() const { return q == 0 && t == 0 && x.is_zero(); }

  friend bool operator==(const Mono&, const Mono&) = default;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

class Poly {
 public:
  using Map = std::map<Mono, mpq_class>;

  Poly() = default;
  Poly(int c) { if (c != 0) terms_[Mono{}] = c; }  // NOLINT(google-explicit-constructor)
  static Poly constant(const mpq_class& c);
  static Poly monomial(const Mono& m, const mpq_class& c = 1);
  static Poly x(const Weight& lambda) { return monomial(Mono{0, 0, lambda}); }
  /// q^{units/(2e)}.
  static Poly q(int units) { return monomial(Mono{units, 0, {}}); }
  /// t^{halves/2}.
  static Poly t(int halves) { return monomial(Mono{0, halves, {}}); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Largest term in the Mono ordering. Requires a nonzero polynomial.
  std::pair<Mono, mpq_class> leading() const;

  void add_term(const Mono& m, const mpq_class& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const mpq_class& c);
  Poly& operator*=(const Mono& m);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= mpq_class(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Mono& m) { return a *= m; }
  friend Poly operator*(const mpq_class& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  /// Apply a monomial substitution term by term (must be injective to keep terms apart;
  /// collisions are summed anyway).
  Poly map_monomials(const std::function<Mono(const Mono&)>& f) const;

  /// Minimal t-exponent (in halves); INT_MAX for the zero polynomial.
  int t_valuation() const;
  /// Coefficient of t^{halves/2}, as a t-free polynomial.
  Poly t_coefficient(int halves) const;
  bool is_t_free() const;
  /// Set of distinct t-exponents present.
  int max_t() const;

  /// Exact quotient in the Laurent ring, or nullopt if d does not divide *this.
  /// q and t are treated as further Laurent variables.
  std::optional<Poly> exact_divide(const Poly& d) const;

  /// Human-readable form; q_scale = 2e converts stored q-units.
  std::string format(int q_scale, int rank) const;

 private:
  Map terms_;
};

/// Element of Z[q^{+-1}].
class QLaurent {
 public:
  using Map = std::map<int, mpz_class>;

  QLaurent() = default;
  QLaurent(long c) { if (c != 0) terms_[0] = c; }  // NOLINT(google-explicit-constructor)
  static QLaurent q_power(int k, const mpz_class& c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }
  void add_term(int k, const mpz_class& c);

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(QLaurent a);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  /// Multiply by q^k.
  QLaurent shifted(int k) const;
  /// q -> q^{-1}.
  QLaurent inverted() const;

  friend bool operator==(const QLaurent&, const QLaurent&) = default;
  friend bool operator<(const QLaurent& a, const QLaurent& b) { return a.terms_ < b.terms_; }

  std::string format() const;

 private:
  Map terms_;
};

/// "p/r" or "p" for a rational.
std::string rational_string(const mpq_class& c);
/// Parses "p" or "p/r"; throws ParseError.
mpq_class parse_rational(const std::string& s);
/// Exponent a/b rendered as "a" or "(a/b)" after reduction.
std::string exponent_string(long num, long den);

}  // namespace siflag
