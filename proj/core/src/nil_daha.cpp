#include "siflag/nil_daha.hpp"

#include "siflag/error.hpp"

namespace siflag {

void add_term(CharPoly& f, const Weight& nu, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, ins] = f.try_emplace(nu, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

std::string format(const CharPoly& f, int rank) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [nu, c] : f) {
    std::string coef = c.format();
    std::string mono = nu.is_zero() ? "" : "e" + to_string(nu, rank);
    std::string term;
    if (mono.empty())
      term = c.terms().size() == 1 ? coef : "(" + coef + ")";
    else if (coef == "1")
      term = mono;
    else if (coef == "-1")
      term = "-" + mono;
    else
      term = (c.terms().size() == 1 ? coef : "(" + coef + ")") + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

NilDaha::NilDaha(std::shared_ptr<const RootSystem> rs) : rs_(rs), rep_(rs) {}

QLaurent NilDaha::nil_scalar(const Poly& c) const {
  const int q2e = rs_->q_scale();
  QLaurent r;
  for (const auto& [m, v] : c.terms()) {
    if (m.t != 0 || !m.x.is_zero())
      throw ParseError("nil coefficients must be Laurent polynomials in q");
    if (m.q % q2e != 0) throw ParseError("nil coefficients need integral powers of q");
    if (v.get_den() != 1) throw ParseError("nil coefficients must be integral");
    r.add_term(m.q / q2e, v.get_num());
  }
  return r;
}

void NilDaha::check_nil_word(const Expr& e) const {
  for (const auto& t : e.terms)
    for (const auto& l : t.word)
      switch (l.kind) {
        case LetterKind::T:
        case LetterKind::Tinv:
        case LetterKind::D:
        case LetterKind::X:
        case LetterKind::Xd:
          break;
        default:
          throw ParseError("nil words use only T, Tinv, D, X and Xd letters");
      }
}

Expr NilDaha::phi0(const Expr& e) const {
  check_nil_word(e);
  return rep_.daha().phi(e);
}

Expr NilDaha::phi0_inverse(const Expr& e) const {
  Expr r = rep_.daha().phi_inverse(e);
  check_nil_word(r);
  return r;
}

HeisMat NilDaha::from_primed(const HeisMat& rho0p) const {
  return heis().mat_star(heis().mat_tau(rho0p));
}

HeisMat NilDaha::rho0(const Expr& e) const {
  check_nil_word(e);
  HeisMat out(HeisTag::H, weyl().size());
  for (const auto& t : e.terms) {
    QLaurent c = nil_scalar(t.coeff);
    if (c.is_zero()) continue;
    Expr single(t.word);
    HeisMat m = from_primed(rep_.rho0_prime(rep_.daha().phi(single)));
    out = heis().mat_add(out, heis().mat_scale(m, c));
  }
  return out;
}

HeisMat NilDaha::rho0_factored(const Expr& e) const {
  check_nil_word(e);
  const std::size_t n = weyl().size();
  HeisMat out(HeisTag::H, n);
  for (const auto& t : e.terms) {
    QLaurent c = nil_scalar(t.coeff);
    if (c.is_zero()) continue;
    HeisMat m = HeisMat::identity(HeisTag::H, n);
    for (const auto& l : t.word) m = heis().mat_mul(m, rho0(Expr::letter(l)));
    out = heis().mat_add(out, heis().mat_scale(m, c));
  }
  return out;
}

HeisMat NilDaha::rho0_D_direct(int node) const {
  if (node < 0 || node > rs_->rank())
    throw ParseError("generator index " + std::to_string(node) + " out of range for " +
                     rs_->name());
  const WeylGroup& W = weyl();
  HeisMat r(HeisTag::H, W.size());
  if (node != 0) {
    WeylElt s = rs_->simple_reflection(node);
    for (std::size_t w = 0; w < W.size(); ++w) {
      std::size_t sw = W.index_of(s * W[w]);
      bool down = rs_->length(W[sw]) < rs_->length(W[w]);
      // v = s_i w < w, or v = w < s_i w
      if (down)
        r.at(sw, w) = HeisElt::one(HeisTag::H);
      else
        r.at(w, w) = HeisElt::one(HeisTag::H);
    }
    return r;
  }
  WeylElt st = rs_->reflection(rs_->theta());
  for (std::size_t w = 0; w < W.size(); ++w) {
    std::size_t v = W.index_of(st * W[w]);
    if (rs_->length(W[v]) > rs_->length(W[w])) {
      // v = s_theta w > w: y^{-w0 v^{-1}(theta)}
      Weight eta = -rs_->w0().apply(rs_->inverse(W[v]).apply(rs_->theta()));
      r.at(v, w) = HeisElt::term(HeisTag::H, Weight::zero(), eta);
    } else {
      r.at(w, w) = HeisElt::one(HeisTag::H);
    }
  }
  return r;
}

namespace {

// z^j for z = q^a e^beta.
void add_power(CharPoly& out, const Weight& base, int a, const Weight& beta, int j,
               const QLaurent& c) {
  add_term(out, base + j * beta, c.shifted(a * j));
}

// e^mu (1 - z^m)/(1 - z) with z = q^a e^beta, added into out with coefficient c.
void add_geom(CharPoly& out, const Weight& mu, int a, const Weight& beta, int m,
              const QLaurent& c) {
  if (m > 0)
    for (int j = 0; j < m; ++j) add_power(out, mu, a, beta, j, c);
  else
    for (int j = m; j < 0; ++j) add_power(out, mu, a, beta, j, -c);
}

}  // namespace

CharPoly NilDaha::nil_poly_apply(const Expr& e, const CharPoly& f, NilVariant variant) const {
  check_nil_word(e);
  const bool star = variant == NilVariant::star;
  const int ec = rs_->e_const();
  auto demazure = [&](int i, const CharPoly& g) {
    CharPoly out;
    for (const auto& [mu, c] : g) {
      if (i == 0) {
        int tm = rs_->pairing_int(rs_->theta(), mu);
        if (star)
          add_geom(out, mu, -1, rs_->theta(), 1 - tm, c);
        else
          add_geom(out, mu, 1, -rs_->theta(), 1 + tm, c);
      } else {
        int mi = mu[i - 1];
        if (star)
          add_geom(out, mu, 0, -rs_->simple_root(i), mi + 1, c);
        else
          add_geom(out, mu, 0, rs_->simple_root(i), 1 - mi, c);
      }
    }
    return out;
  };
  auto apply_letter = [&](const Letter& l, const CharPoly& g) {
    switch (l.kind) {
      case LetterKind::D:
      case LetterKind::Tinv:
        if (l.index < 0 || l.index > rs_->rank()) throw ParseError("generator index out of range");
        return demazure(l.index, g);
      case LetterKind::T: {
        if (l.index < 0 || l.index > rs_->rank()) throw ParseError("generator index out of range");
        CharPoly out = demazure(l.index, g);
        for (const auto& [mu, c] : g) add_term(out, mu, -c);
        return out;
      }
      case LetterKind::X: {
        CharPoly out;
        for (const auto& [mu, c] : g) add_term(out, mu + (star ? l.weight : -l.weight), c);
        return out;
      }
      case LetterKind::Xd: {
        if (l.index % ec != 0) throw ParseError("nil representation needs integral powers of X^delta");
        int k = l.index / ec;
        CharPoly out;
        for (const auto& [mu, c] : g) add_term(out, mu, c.shifted(star ? k : -k));
        return out;
      }
      default:
        throw ParseError("letter not in the nil DAHA");
    }
  };
  CharPoly result;
  for (const auto& t : e.terms) {
    QLaurent c = nil_scalar(t.coeff);
    if (star) c = c.inverted();
    CharPoly g = f;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) g = apply_letter(*it, g);
    for (const auto& [mu, v] : g) add_term(result, mu, v * c);
  }
  return result;
}

namespace {

// Collapses words made only of `lattice` and `delta` letters into exponent sums.
std::map<std::pair<Weight, int>, Poly> collapse(const Expr& e, LetterKind lattice, LetterKind delta) {
  std::map<std::pair<Weight, int>, Poly> out;
  for (const auto& t : e.terms) {
    Weight nu;
    int k = 0;
    for (const auto& l : t.word) {
      if (l.kind == lattice)
        nu += l.weight;
      else if (l.kind == delta)
        k += l.index;
      else
        throw ParseError("spherical input must be a polynomial in a single lattice");
    }
    auto& slot = out[{nu, k}];
    slot += t.coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void check_invariant(const RootSystem& rs, const std::map<std::pair<Weight, int>, Poly>& f) {
  for (const auto& [key, c] : f)
    for (int i = 1; i <= rs.rank(); ++i) {
      auto it = f.find({rs.reflect(i, key.first), key.second});
      if (it == f.end() || !(it->second == c))
        throw AssertionFailure("input is not W-invariant: exponent " +
                               to_string(key.first, rs.rank()) + " has no matching s" +
                               std::to_string(i) + "-image");
    }
}

}  // namespace

HeisElt NilDaha::rho0_sph(const Expr& f) const {
  check_invariant(*rs_, collapse(f, LetterKind::X, LetterKind::Xd));
  HeisMat m = rho0(f);
  for (std::size_t w = 1; w < m.n; ++w)
    if (!m.at(w, 0).is_zero())
      throw AssertionFailure("spherical column condition fails at w = " + weyl().label(w));
  return m.at(0, 0);
}

HeisElt NilDaha::qtoda(const Expr& f) const {
  check_invariant(*rs_, collapse(f, LetterKind::Y, LetterKind::Yd));
  HeisMat m = rep_.rho0_prime(f);
  for (std::size_t w = 1; w < m.n; ++w)
    if (!m.at(0, w).is_zero())
      throw AssertionFailure("spherical row condition fails at w = " + weyl().label(w));
  return m.at(0, 0);
}

std::vector<DiagramItem> NilDaha::diagram_check() const {
  std::vector<DiagramItem> items;
  const Heisenberg& H = heis();
  HeisMat id = HeisMat::identity(HeisTag::H, weyl().size());
  auto record = [&](std::string name, const HeisMat& a, const HeisMat& b) {
    DiagramItem it;
    it.name = std::move(name);
    it.pass = a == b;
    if (!it.pass) {
      for (std::size_t i = 0; i < a.n && it.detail.empty(); ++i)
        for (std::size_t j = 0; j < a.n; ++j)
          if (!(a.at(i, j) == b.at(i, j))) {
            it.detail = "first mismatch at (" + weyl().label(i) + "," + weyl().label(j) +
                        "): " + H.format(a.at(i, j)) + " vs " + H.format(b.at(i, j));
            break;
          }
    }
    items.push_back(std::move(it));
  };
  for (int i = 0; i <= rs_->rank(); ++i) {
    HeisMat direct = rho0_D_direct(i);
    HeisMat lhs = H.mat_star(H.mat_sub(direct, id));
    HeisMat rhs = H.mat_tau(rep_.rho0_prime(Expr::letter(Letter::Tp(i))));
    record("T" + std::to_string(i) + "'", lhs, rhs);
    record("D" + std::to_string(i), direct, rho0(Expr::letter(Letter::D(i))));
  }
  for (int r = 1; r <= rs_->rank(); ++r)
    for (int sign : {1, -1}) {
      Weight nu = sign * rs_->fundamental_weight(r);
      // Left side through the split construction of Y, right side through epsilon signs.
      HeisMat split = rep_.re_limit(rep_.kappa(rep_.to_matrix(rep_.daha().elt_Y_split(nu))));
      HeisMat lhs = H.mat_star(from_primed(split));
      HeisMat rhs = H.mat_tau(rep_.rho0_prime(Expr::letter(Letter::Y(nu))));
      record(std::string("Y^") + (sign < 0 ? "-" : "") + "w" + std::to_string(r), lhs, rhs);
    }
  return items;
}

}  // namespace siflag
