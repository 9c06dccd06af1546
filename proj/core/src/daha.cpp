#include "siflag/daha.hpp"

#include <algorithm>

#include "siflag/error.hpp"

namespace siflag {

bool Letter::is_primed() const {
  switch (kind) {
    case LetterKind::Tp:
    case LetterKind::Tpinv:
    case LetterKind::Dp:
    case LetterKind::Y:
    case LetterKind::Yd:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Expr

Expr operator*(const Expr& a, const Expr& b) {
  Expr r;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      r.terms.push_back({ta.coeff * tb.coeff, std::move(w)});
    }
  return r;
}

Expr operator+(Expr a, const Expr& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

Expr Expr::scaled(const Poly& c) const {
  Expr r = *this;
  for (auto& t : r.terms) t.coeff = c * t.coeff;
  return r;
}

bool Expr::all_plain() const {
  for (const auto& t : terms)
    for (const auto& l : t.word)
      if (l.is_primed()) return false;
  return true;
}

bool Expr::all_primed() const {
  for (const auto& t : terms)
    for (const auto& l : t.word)
      if (!l.is_primed() && l.kind != LetterKind::Xd) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DiffReflOp

DiffReflOp DiffReflOp::identity(const RootSystem& rs) { return term(FieldElt(1), rs.ext_identity()); }

DiffReflOp DiffReflOp::term(const FieldElt& f, const ExtAffineElt& g) {
  DiffReflOp d;
  d.add_term(g, f);
  return d;
}

void DiffReflOp::add_term(const ExtAffineElt& g, const FieldElt& f) {
  if (f.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(g, f);
  if (!ins) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffReflOp& DiffReflOp::operator+=(const DiffReflOp& o) {
  for (const auto& [g, f] : o.terms_) add_term(g, f);
  return *this;
}

DiffReflOp& DiffReflOp::operator-=(const DiffReflOp& o) {
  for (const auto& [g, f] : o.terms_) add_term(g, -f);
  return *this;
}

DiffReflOp DiffReflOp::scaled(const FieldElt& c) const {
  DiffReflOp r;
  for (const auto& [g, f] : terms_) r.add_term(g, c * f);
  return r;
}

bool operator==(const DiffReflOp& a, const DiffReflOp& b) { return (a - b).is_zero(); }

// ---------------------------------------------------------------------------
// Daha

Daha::Daha(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)), q2e_(rs_->q_scale()) {}

void Daha::check_node(int node) const {
  if (node < 0 || node > rs_->rank())
    throw ParseError("generator index " + std::to_string(node) + " out of range for " +
                     rs_->name());
}

Mono Daha::act(const ExtAffineElt& g, const Mono& m) const {
  Mono r;
  r.q = m.q - static_cast<int>(rs_->pairing_scaled(g.beta, m.x, q2e_));
  r.t = m.t;
  r.x = g.w.apply(m.x);
  return r;
}

FieldElt Daha::act(const ExtAffineElt& g, const FieldElt& f) const {
  if (g.beta.is_zero() && g.w.is_identity()) return f;
  return f.map_monomials([this, &g](const Mono& m) { return act(g, m); });
}

Poly Daha::act(const ExtAffineElt& g, const Poly& f) const {
  return f.map_monomials([this, &g](const Mono& m) { return act(g, m); });
}

DiffReflOp Daha::mul(const DiffReflOp& a, const DiffReflOp& b) const {
  DiffReflOp r;
  for (const auto& [g1, f1] : a.terms())
    for (const auto& [g2, f2] : b.terms()) r.add_term(rs_->ext_mul(g1, g2), f1 * act(g1, f2));
  return r;
}

FieldElt Daha::apply(const DiffReflOp& op, const FieldElt& f) const {
  FieldElt r;
  for (const auto& [g, c] : op.terms()) r += c * act(g, f);
  return r;
}

Poly Daha::x_alpha(int node) const {
  check_node(node);
  if (node == 0) return Poly::monomial(Mono{q2e_, 0, -rs_->theta()});
  return Poly::x(rs_->simple_root(node));
}

DiffReflOp Daha::scalar(const Poly& c) const {
  return DiffReflOp::term(FieldElt(c), rs_->ext_identity());
}

DiffReflOp Daha::gen_T(int node) const {
  auto it = t_cache_.find(node);
  if (it != t_cache_.end()) return it->second;
  DiffReflOp d = compute_T(node);
  t_cache_.emplace(node, d);
  return d;
}

DiffReflOp Daha::compute_T(int node) const {
  Poly z = x_alpha(node);
  Poly one(1);
  Poly tm1 = Poly::t(2) - one;
  DiffReflOp d;
  d.add_term(rs_->ext_identity(), FieldElt::fraction(tm1, one - z));
  d.add_term(rs_->ext_simple_reflection(node), FieldElt::fraction(one - Poly::t(2) * z, one - z));
  return d;
}

DiffReflOp Daha::gen_Tinv(int node) const {
  return gen_T(node) - scalar(Poly::t(2) - Poly(1));
}

DiffReflOp Daha::gen_X(const Weight& nu) const {
  return DiffReflOp::term(FieldElt(Poly::x(nu)), rs_->ext_identity());
}

DiffReflOp Daha::gen_Xdelta(int k) const { return scalar(Poly::q(2 * k)); }

DiffReflOp Daha::gen_pi(int r) const {
  return DiffReflOp::term(FieldElt(1), rs_->pi_element(r));
}

DiffReflOp Daha::gen_Tp(int node) const {
  check_node(node);
  if (node != 0) return gen_T(node);
  // X^{-alpha_0} = X^{theta - delta} = q^{-1} x^theta.
  DiffReflOp pre = scalar(Poly::monomial(Mono{-q2e_, 0, rs_->theta()}));
  return mul(pre, gen_Tinv(0));
}

DiffReflOp Daha::gen_Tpinv(int node) const {
  return gen_Tp(node) - scalar(Poly::t(2) - Poly(1));
}

DiffReflOp Daha::elt_Y(const Weight& nu, DescentChoice choice) const {
  auto key = std::make_pair(nu, static_cast<int>(choice));
  auto it = y_cache_.find(key);
  if (it != y_cache_.end()) return it->second;
  DiffReflOp d = compute_Y(nu, choice);
  y_cache_.emplace(key, d);
  return d;
}

DiffReflOp Daha::compute_Y(const Weight& nu, DescentChoice choice) const {
  auto tw = rs_->translation_word(nu, choice);
  auto eps = rs_->epsilon_signs(tw.pi, tw.word);
  int l = static_cast<int>(tw.word.size());
  // t^{-sum eps/2} pi prod T^{eps}; with T^{-1} = t^{-1} Tinv the t-power is t^{-l/2}.
  DiffReflOp r = DiffReflOp::term(FieldElt(Poly::t(-l)), tw.pi);
  for (std::size_t k = 0; k < tw.word.size(); ++k)
    r = mul(r, eps[k] > 0 ? gen_T(tw.word[k]) : gen_Tinv(tw.word[k]));
  return r;
}

DiffReflOp Daha::elt_Y_split(const Weight& nu) const {
  Weight plus, minus;
  for (int i = 0; i < rs_->rank(); ++i) {
    plus[i] = std::max(nu[i], 0);
    minus[i] = std::max(-nu[i], 0);
  }
  auto tp = rs_->translation_word(plus);
  DiffReflOp yp = DiffReflOp::term(FieldElt(Poly::t(-static_cast<int>(tp.word.size()))), tp.pi);
  for (int i : tp.word) yp = mul(yp, gen_T(i));
  // (t^{-l/2} pi T_{i_1}...T_{i_l})^{-1} = t^{-l/2} Tinv_{i_l} ... Tinv_{i_1} pi^{-1}.
  auto tm = rs_->translation_word(minus);
  DiffReflOp ym = DiffReflOp::term(FieldElt(Poly::t(-static_cast<int>(tm.word.size()))),
                                   rs_->ext_identity());
  for (auto it = tm.word.rbegin(); it != tm.word.rend(); ++it) ym = mul(ym, gen_Tinv(*it));
  ym = mul(ym, DiffReflOp::term(FieldElt(1), rs_->ext_inverse(tm.pi)));
  return mul(yp, ym);
}

DiffReflOp Daha::letter(const Letter& l) const {
  switch (l.kind) {
    case LetterKind::T:
      return gen_T(l.index);
    case LetterKind::Tinv:
      return gen_Tinv(l.index);
    case LetterKind::D:
      return gen_T(l.index) + scalar(Poly(1));
    case LetterKind::X:
      return gen_X(l.weight);
    case LetterKind::Xd:
      return gen_Xdelta(l.index);
    case LetterKind::Pi:
      return gen_pi(l.index);
    case LetterKind::Tp:
      return gen_Tp(l.index);
    case LetterKind::Tpinv:
      return gen_Tpinv(l.index);
    case LetterKind::Dp:
      return gen_Tp(l.index) + scalar(Poly(1));
    case LetterKind::Y:
      return elt_Y(l.weight);
    case LetterKind::Yd:
      return gen_Xdelta(-l.index);
  }
  throw AssertionFailure("unknown letter");
}

DiffReflOp Daha::evaluate(const Word& w) const {
  DiffReflOp r = DiffReflOp::identity(*rs_);
  for (const auto& l : w) r = mul(r, letter(l));
  return r;
}

DiffReflOp Daha::evaluate(const Expr& e) const {
  DiffReflOp r;
  for (const auto& t : e.terms) r += mul(scalar(t.coeff), evaluate(t.word));
  return r;
}

// ---------------------------------------------------------------------------
// word-level symmetries

Expr Daha::tau_plus(const Expr& e) const {
  const RootSystem& R = *rs_;
  const int ec = R.e_const();
  auto image = [&](const Letter& l) -> Expr {
    switch (l.kind) {
      case LetterKind::T:
        if (l.index != 0) return Expr::letter(l);
        return Expr(Word{Letter::X(R.theta()), Letter::Xd(-ec), Letter::Tinv(0)});
      case LetterKind::Tinv:
        if (l.index != 0) return Expr::letter(l);
        return Expr(Word{Letter::T(0), Letter::X(-R.theta()), Letter::Xd(ec)});
      case LetterKind::D:
        if (l.index != 0) return Expr::letter(l);
        return Expr(Word{Letter::X(R.theta()), Letter::Xd(-ec), Letter::Tinv(0)}) + Expr(Word{});
      case LetterKind::X:
      case LetterKind::Xd:
        return Expr::letter(l);
      case LetterKind::Pi: {
        Weight om = R.fundamental_weight(l.index);
        long k = R.pairing_scaled(om, om, ec);
        return Expr(Word{Letter::X(om), Letter::Xd(static_cast<int>(-k / 2)), l});
      }
      default:
        throw ParseError("tau_+ is defined on plain words only");
    }
  };
  Expr out;
  for (const auto& t : e.terms) {
    Expr acc(Word{});
    acc = acc.scaled(t.coeff);
    for (const auto& l : t.word) acc = acc * image(l);
    out = out + acc;
  }
  return out;
}

Expr Daha::phi(const Expr& e) const {
  Expr out;
  for (const auto& t : e.terms) {
    Word w;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      const Letter& l = *it;
      switch (l.kind) {
        case LetterKind::T: w.push_back(Letter::Tp(l.index)); break;
        case LetterKind::Tinv: w.push_back(Letter::Tpinv(l.index)); break;
        case LetterKind::D: w.push_back(Letter::Dp(l.index)); break;
        case LetterKind::X: w.push_back(Letter::Y(-l.weight)); break;
        case LetterKind::Xd: w.push_back(l); break;
        case LetterKind::Pi: throw ParseError("phi is not defined on pi letters");
        default: throw ParseError("phi expects a plain word");
      }
    }
    out.terms.push_back({t.coeff, std::move(w)});
  }
  return out;
}

Expr Daha::phi_inverse(const Expr& e) const {
  Expr out;
  for (const auto& t : e.terms) {
    Word w;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      const Letter& l = *it;
      switch (l.kind) {
        case LetterKind::Tp: w.push_back(Letter::T(l.index)); break;
        case LetterKind::Tpinv: w.push_back(Letter::Tinv(l.index)); break;
        case LetterKind::Dp: w.push_back(Letter::D(l.index)); break;
        case LetterKind::Y: w.push_back(Letter::X(-l.weight)); break;
        case LetterKind::Yd: w.push_back(Letter::Xd(-l.index)); break;
        case LetterKind::Xd: w.push_back(l); break;
        default: throw ParseError("phi^{-1} expects a primed word");
      }
    }
    out.terms.push_back({t.coeff, std::move(w)});
  }
  return out;
}

}  // namespace siflag
