#include "siflag/matrix_rep.hpp"

#include "siflag/error.hpp"

namespace siflag {

void OpEntry::add_term(const Weight& eta, const FieldElt& f) {
  if (f.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(eta, f);
  if (!ins) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpEntry& OpEntry::operator+=(const OpEntry& o) {
  for (const auto& [eta, f] : o.terms_) add_term(eta, f);
  return *this;
}

OpEntry& OpEntry::operator-=(const OpEntry& o) {
  for (const auto& [eta, f] : o.terms_) add_term(eta, -f);
  return *this;
}

bool operator==(const OpEntry& a, const OpEntry& b) {
  OpEntry d = a;
  d -= b;
  return d.is_zero();
}

MatrixRep::MatrixRep(std::shared_ptr<const RootSystem> rs)
    : rs_(rs), daha_(rs), weyl_(rs), heis_(*rs_) {
  inv_finite_.reserve(weyl_.size());
  for (std::size_t k = 0; k < weyl_.size(); ++k)
    inv_finite_.push_back(rs_->ext_finite(weyl_[weyl_.inverse_index(k)]));
}

OpEntry MatrixRep::mul(const OpEntry& a, const OpEntry& b) const {
  // (f1 y^e1)(f2 y^e2) = f1 (y^e1 . f2) y^{e1+e2}
  OpEntry r;
  for (const auto& [e1, f1] : a.terms())
    for (const auto& [e2, f2] : b.terms())
      r.add_term(e1 + e2, f1 * daha_.act(rs_->translation(e1), f2));
  return r;
}

OpMat MatrixRep::mul(const OpMat& a, const OpMat& b) const {
  if (a.n != b.n) throw AssertionFailure("matrix size mismatch");
  OpMat r(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const OpEntry& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n; ++j) {
        const OpEntry& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += mul(aik, bkj);
      }
    }
  return r;
}

OpMat MatrixRep::add(const OpMat& a, const OpMat& b) const {
  if (a.n != b.n) throw AssertionFailure("matrix size mismatch");
  OpMat r = a;
  for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] += b.entries[k];
  return r;
}

OpMat MatrixRep::sub(const OpMat& a, const OpMat& b) const {
  if (a.n != b.n) throw AssertionFailure("matrix size mismatch");
  OpMat r = a;
  for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] -= b.entries[k];
  return r;
}

OpMat MatrixRep::identity() const {
  OpMat r(weyl_.size());
  for (std::size_t k = 0; k < r.n; ++k) r.at(k, k).add_term(Weight::zero(), FieldElt(1));
  return r;
}

OpMat MatrixRep::to_matrix(const DiffReflOp& d) const {
  OpMat r(weyl_.size());
  for (const auto& [g, f] : d.terms()) {
    // f (u, beta) = f y^{u beta} u
    Weight eta = g.w.apply(g.beta);
    std::size_t u = weyl_.index_of(g.w);
    std::size_t uinv = weyl_.inverse_index(u);
    for (std::size_t v = 0; v < weyl_.size(); ++v) {
      const ExtAffineElt& vinv = inv_finite_[v];
      r.at(v, weyl_.mul_index(uinv, v)).add_term(vinv.w.apply(eta), daha_.act(vinv, f));
    }
  }
  return r;
}

OpMat MatrixRep::kappa(const OpMat& m) const {
  const Weight& rho = rs_->rho();
  auto twist = [&](const Mono& x) {
    Mono y = x;
    y.t -= static_cast<int>(rs_->pairing_scaled(x.x, rho, 2));
    return y;
  };
  OpMat r(m.n);
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    for (const auto& [eta, f] : m.entries[k].terms()) {
      FieldElt g = f.map_monomials(twist);
      int halves = static_cast<int>(rs_->pairing_scaled(eta, rho, 2));
      r.entries[k].add_term(eta, g * FieldElt(Poly::t(halves)));
    }
  return r;
}

HeisMat MatrixRep::re_limit(const OpMat& m) const {
  const int q2e = rs_->q_scale();
  HeisMat r(HeisTag::Hp, m.n);
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    for (const auto& [eta, f] : m.entries[k].terms()) {
      Poly lim = f.t_limit();
      for (const auto& [mono, c] : lim.terms()) {
        if (mono.q % q2e != 0)
          throw AssertionFailure("non-integral exponent: q-power in the limit is not integral");
        if (!rs_->in_root_lattice(mono.x))
          throw AssertionFailure("non-integral exponent: x" + to_string(mono.x, rs_->rank()) +
                                 " outside the root lattice");
        if (c.get_den() != 1) throw AssertionFailure("non-integral coefficient in the limit");
        r.entries[k].add_term(mono.x, eta, QLaurent::q_power(mono.q / q2e, c.get_num()));
      }
    }
  return r;
}

OpMat MatrixRep::rho_prime(const Expr& e) const { return to_matrix(daha_.evaluate(e)); }

HeisMat MatrixRep::rho0_prime(const Expr& e) const {
  if (!e.all_primed()) throw ParseError("rho0' expects a primed expression");
  return re_limit(kappa(rho_prime(e)));
}

HeisMat MatrixRep::rho0_prime_factored(const Expr& e) const {
  if (!e.all_primed()) throw ParseError("rho0' expects a primed expression");
  const int q2e = rs_->q_scale();
  HeisMat out(HeisTag::Hp, weyl_.size());
  for (const auto& t : e.terms) {
    HeisMat m = HeisMat::identity(HeisTag::Hp, weyl_.size());
    for (const auto& l : t.word) m = heis_.mat_mul(m, rho0_prime(Expr::letter(l)));
    // The coefficient must survive t -> 0 as an integral Laurent polynomial in q.
    QLaurent c;
    for (const auto& [mono, v] : t.coeff.terms()) {
      if (mono.t != 0 || mono.q % q2e != 0 || v.get_den() != 1)
        throw AssertionFailure("coefficient has no integral t = 0 specialization");
      c.add_term(mono.q / q2e, v.get_num());
    }
    out = heis_.mat_add(out, heis_.mat_scale(m, c));
  }
  return out;
}

}  // namespace siflag
