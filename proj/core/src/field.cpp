#include "siflag/field.hpp"

#include <algorithm>

#include "siflag/error.hpp"

namespace siflag {

FieldElt FieldElt::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw AssertionFailure("zero denominator");
  FieldElt f(num);
  if (num.is_zero()) return f;
  f.push_factor(den);
  f.cancel();
  return f;
}

void FieldElt::push_factor(const Poly& p) {
  auto [m, c] = p.leading();
  Mono inv = m.inverse();
  mpq_class cinv = mpq_class(1) / c;
  num_ *= inv;
  num_ *= cinv;
  if (p.is_monomial()) return;
  Poly f = p;
  f *= inv;
  f *= cinv;
  den_.push_back(std::move(f));
}

void FieldElt::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t k = 0; k < den_.size();) {
    if (auto q = num_.exact_divide(den_[k])) {
      num_ = std::move(*q);
      den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  std::sort(den_.begin(), den_.end());
}

Poly FieldElt::denominator() const {
  Poly d(1);
  for (const auto& f : den_) d *= f;
  return d;
}

namespace {

// Factors of `from` not matched in `in` (multiset difference from \ in).
std::vector<Poly> missing(const std::vector<Poly>& from, const std::vector<Poly>& in) {
  std::vector<bool> used(in.size(), false);
  std::vector<Poly> out;
  for (const auto& f : from) {
    bool hit = false;
    for (std::size_t k = 0; k < in.size(); ++k)
      if (!used[k] && in[k] == f) {
        used[k] = true;
        hit = true;
        break;
      }
    if (!hit) out.push_back(f);
  }
  return out;
}

}  // namespace

FieldElt& FieldElt::operator+=(const FieldElt& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  auto extra_for_this = missing(o.den_, den_);
  auto extra_for_other = missing(den_, o.den_);
  // Distinct normalized factors are coprime, so only factors shared by both
  // denominators can divide a/D1 + b/D2 once both sides are reduced.
  auto shared = missing(den_, extra_for_other);
  Poly a = num_;
  for (const auto& f : extra_for_this) a *= f;
  Poly b = o.num_;
  for (const auto& f : extra_for_other) b *= f;
  num_ = a + b;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (auto& f : extra_for_this) den_.push_back(std::move(f));
  for (const auto& f : shared) {
    auto q = num_.exact_divide(f);
    if (!q) continue;
    num_ = std::move(*q);
    den_.erase(std::find(den_.begin(), den_.end(), f));
  }
  std::sort(den_.begin(), den_.end());
  return *this;
}

FieldElt& FieldElt::operator-=(const FieldElt& o) { return *this += -o; }

FieldElt operator-(FieldElt a) {
  a.num_ = -a.num_;
  return a;
}

namespace {

// Divide `num` by as many factors of `den` as possible, removing them from `den`.
void cross_cancel(Poly& num, std::vector<Poly>& den) {
  for (std::size_t k = 0; k < den.size();) {
    if (auto q = num.exact_divide(den[k])) {
      num = std::move(*q);
      den.erase(den.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
}

}  // namespace

FieldElt& FieldElt::operator*=(const FieldElt& o) {
  if (is_zero() || o.is_zero()) {
    *this = FieldElt();
    return *this;
  }
  if (o.den_.empty() && den_.empty()) {
    num_ *= o.num_;
    return *this;
  }
  Poly b = o.num_;
  std::vector<Poly> od = o.den_;
  cross_cancel(b, den_);
  cross_cancel(num_, od);
  num_ *= b;
  den_.insert(den_.end(), std::make_move_iterator(od.begin()), std::make_move_iterator(od.end()));
  std::sort(den_.begin(), den_.end());
  return *this;
}

FieldElt FieldElt::inverse() const {
  if (is_zero()) throw AssertionFailure("inverse of zero");
  return fraction(denominator(), num_);
}

bool operator==(const FieldElt& a, const FieldElt& b) { return (a - b).is_zero(); }

FieldElt FieldElt::map_monomials(const std::function<Mono(const Mono&)>& f) const {
  FieldElt r(num_.map_monomials(f));
  if (r.num_.is_zero()) return r;
  // Monomial maps are ring automorphisms, so a reduced fraction stays reduced.
  for (const auto& d : den_) r.push_factor(d.map_monomials(f));
  std::sort(r.den_.begin(), r.den_.end());
  return r;
}

int FieldElt::t_valuation() const {
  if (is_zero()) return INT_MAX;
  int v = num_.t_valuation();
  for (const auto& d : den_) v -= d.t_valuation();
  return v;
}

Poly FieldElt::t_limit() const {
  if (is_zero()) return {};
  int vn = num_.t_valuation();
  int vd = 0;
  for (const auto& d : den_) vd += d.t_valuation();
  if (vn > vd) return {};
  if (vn < vd) throw LimitError("limit diverges");
  // The lowest t-coefficient of a product is the product of lowest coefficients.
  Poly lead = num_.t_coefficient(vn);
  for (const auto& d : den_) {
    auto q = lead.exact_divide(d.t_coefficient(d.t_valuation()));
    if (!q) throw LimitError("limit not Laurent");
    lead = std::move(*q);
  }
  return lead;
}

std::string FieldElt::format(int q_scale, int rank) const {
  if (den_.empty()) return num_.format(q_scale, rank);
  std::string s = "(" + num_.format(q_scale, rank) + ")/(";
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (k) s += "*";
    s += "(" + den_[k].format(q_scale, rank) + ")";
  }
  return s + ")";
}

}  // namespace siflag
