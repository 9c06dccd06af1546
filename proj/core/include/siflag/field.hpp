#pragma once

// Elements of k(P) = Frac(k[P]), k = Q(q^{1/e}, t^{1/2}).
//
// The denominator is kept as a multiset of normalised factors (leading term 1
// in the Mono order, units pushed into the numerator). Every denominator the
// polynomial representation produces is a product of binomials 1 - c x^beta,
// so this keeps sums cheap: common denominators are lcm's of factor multisets
// and no polynomial gcd is ever needed.

#include <functional>
#include <string>
#include <vector>

#include "siflag/poly.hpp"

namespace siflag {

class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(int c) : num_(c) {}                   // NOLINT(google-explicit-constructor)
  FieldElt(Poly p) : num_(std::move(p)) {}       // NOLINT(google-explicit-constructor)
  /// num / den; throws AssertionFailure when den == 0.
  static FieldElt fraction(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const std::vector<Poly>& denominator_factors() const { return den_; }
  Poly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  FieldElt& operator+=(const FieldElt& o);
  FieldElt& operator-=(const FieldElt& o);
  FieldElt& operator*=(const FieldElt& o);
  friend FieldElt operator+(FieldElt a, const FieldElt& b) { return a += b; }
  friend FieldElt operator-(FieldElt a, const FieldElt& b) { return a -= b; }
  friend FieldElt operator*(FieldElt a, const FieldElt& b) { return a *= b; }
  friend FieldElt operator-(FieldElt a);
  /// Throws AssertionFailure on division by zero.
  FieldElt inverse() const;

  /// Equality in k(P), by cross-multiplication.
  friend bool operator==(const FieldElt& a, const FieldElt& b);

  /// Applies a ring automorphism given on monomials (scalars are untouched).
  FieldElt map_monomials(const std::function<Mono(const Mono&)>& f) const;

  /// Minimal t-exponent of numerator minus that of the denominator (halves).
  int t_valuation() const;
  /// t -> 0 limit. Throws LimitError ("limit diverges", "limit not Laurent").
  Poly t_limit() const;

  std::string format(int q_scale, int rank) const;

 private:
  void push_factor(const Poly& p);
  void cancel();

  Poly num_;
  std::vector<Poly> den_;
};

}  // namespace siflag
