#include "siflag/ktheory.hpp"

#include "siflag/error.hpp"

namespace siflag {

KClass KClass::basis(const ExtAffineElt& w, const Weight& lambda) {
  KClass c;
  c.add_term(w, lambda, 1);
  return c;
}

void KClass::add_term(const ExtAffineElt& w, const Weight& lambda, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(Key{w, lambda}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KClass& KClass::operator+=(const KClass& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

KClass KClass::scaled(const QLaurent& c) const {
  KClass r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

KTheory::KTheory(std::shared_ptr<const RootSystem> rs) : rs_(rs), nil_(rs) {}

void KTheory::check_affine(const ExtAffineElt& w) const {
  if (!rs_->in_affine_weyl(w))
    throw ParseError("Schubert classes are indexed by W_aff; " + rs_->format(w) +
                     " has a translation outside the root lattice");
}

KClass KTheory::heis_act(const KClass& c, const HeisElt& h) const {
  if (h.tag() != HeisTag::H) throw AssertionFailure("K is a right module over H, not H'");
  KClass r;
  for (const auto& [key, a] : c.terms()) {
    const auto& [w, lam] = key;
    for (const auto& [hk, b] : h.terms()) {
      const auto& [nu, gamma] = hk;
      if (!rs_->in_root_lattice(gamma))
        throw AssertionFailure("y-exponent outside the root lattice");
      Weight mu = lam + nu;
      ExtAffineElt v = rs_->ext_mul(w, rs_->translation(gamma));
      r.add_term(v, mu, (a * b).shifted(rs_->pairing_int(gamma, mu)));
    }
  }
  return r;
}

std::vector<HeisElt> KTheory::to_free_form(const KClass& c) const {
  std::vector<HeisElt> h(weyl().size(), HeisElt(HeisTag::H));
  for (const auto& [key, a] : c.terms()) {
    const auto& [w, lam] = key;
    check_affine(w);
    // [O_{w y^b}(l)] = [O_w] q^{-<b,l>} x^l y^b
    h[weyl().index_of(w.w)].add_term(lam, w.beta, a.shifted(-rs_->pairing_int(w.beta, lam)));
  }
  return h;
}

KClass KTheory::from_free_form(const std::vector<HeisElt>& h) const {
  KClass r;
  for (std::size_t w = 0; w < h.size(); ++w)
    if (!h[w].is_zero()) r += heis_act(KClass::basis(rs_->ext_finite(weyl()[w])), h[w]);
  return r;
}

KClass KTheory::matrix_act(const HeisMat& m, const KClass& c) const {
  const Heisenberg& H = nil_.heis();
  auto h = to_free_form(c);
  std::vector<HeisElt> g(m.n, HeisElt(HeisTag::H));
  for (std::size_t v = 0; v < m.n; ++v)
    for (std::size_t w = 0; w < m.n; ++w)
      if (!m.at(v, w).is_zero() && !h[w].is_zero()) g[v] += H.mul(m.at(v, w), h[w]);
  return from_free_form(g);
}

KClass KTheory::nil_act(const Expr& h, const KClass& c) const {
  return matrix_act(nil_.rho0(h), c);
}

KClass KTheory::demazure_act(int node, const KClass& c) const {
  return matrix_act(nil_.rho0_D_direct(node), c);
}

KClass KTheory::inverse_pieri_chevalley(const Weight& lambda, const ExtAffineElt& w) const {
  check_affine(w);
  return nil_act(Expr::letter(Letter::X(-lambda)), KClass::basis(w));
}

std::vector<IpcTerm> KTheory::ipc_terms(const KClass& c) const {
  std::vector<IpcTerm> out;
  for (const auto& [key, d] : c.terms()) out.push_back({key.first, key.second, d});
  return out;
}

SupportReport KTheory::support_report(const Weight& lambda, const KClass& c) const {
  // y^lambda = u pi with pi of length zero; classes live in W_aff, so compare against u.
  ExtAffineElt y = rs_->translation(lambda);
  ExtAffineElt p = y;
  for (int l = rs_->ext_length(p); l > 0; --l) {
    int s = 0;
    while (!rs_->is_ext_right_descent(p, s)) ++s;
    p = rs_->ext_mul(p, rs_->ext_simple_reflection(s));
  }
  ExtAffineElt u = rs_->ext_mul(y, rs_->ext_inverse(p));
  SupportReport r;
  for (const auto& [key, d] : c.terms()) {
    ++r.terms;
    if (rs_->ext_bruhat_le(key.first, u)) ++r.below_translation;
  }
  return r;
}

KClass KTheory::overline(const KClass& c) const {
  KClass r;
  for (const auto& [key, d] : c.terms()) {
    const auto& [w, lam] = key;
    r.add_term(ExtAffineElt{w.w, -rs_->w0().apply(w.beta)}, lam, d);
  }
  return r;
}

std::string KTheory::format(const KClass& c) const {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [key, d] : c.terms()) {
    std::string cls = "[O_" + rs_->format(key.first) + "(" + to_string(key.second, rs_->rank()) + ")]";
    bool single = d.terms().size() == 1;
    bool neg = single && d.terms().begin()->second < 0;
    QLaurent a = neg ? -d : d;
    std::string coef = a.format();
    std::string term = coef == "1" ? cls : (single ? coef : "(" + coef + ")") + "*" + cls;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace siflag
