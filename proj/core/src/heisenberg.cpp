#include "siflag/heisenberg.hpp"

#include "siflag/error.hpp"

namespace siflag {

const char* tag_name(HeisTag tag) { return tag == HeisTag::H ? "H" : "H'"; }

HeisElt HeisElt::scalar(HeisTag tag, const QLaurent& c) {
  HeisElt h(tag);
  h.add_term(Weight::zero(), Weight::zero(), c);
  return h;
}

HeisElt HeisElt::term(HeisTag tag, const Weight& a, const Weight& b, const QLaurent& c) {
  HeisElt h(tag);
  h.add_term(a, b, c);
  return h;
}

void HeisElt::add_term(const Weight& a, const Weight& b, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(Key{a, b}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeisElt& HeisElt::operator+=(const HeisElt& o) {
  if (o.tag_ != tag_) throw AssertionFailure("Heisenberg tag mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

HeisElt& HeisElt::operator-=(const HeisElt& o) {
  if (o.tag_ != tag_) throw AssertionFailure("Heisenberg tag mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

HeisElt operator-(HeisElt a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

HeisElt HeisElt::scaled(const QLaurent& c) const {
  HeisElt r(tag_);
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

HeisMat HeisMat::identity(HeisTag t, std::size_t size) {
  HeisMat m(t, size);
  for (std::size_t k = 0; k < size; ++k) m.at(k, k) = HeisElt::one(t);
  return m;
}

// ---------------------------------------------------------------------------

HeisElt Heisenberg::mul(const HeisElt& a, const HeisElt& b) const {
  if (a.tag() != b.tag()) throw AssertionFailure("Heisenberg tag mismatch");
  HeisElt r(a.tag());
  // (x^a y^b)(x^a' y^b') = q^{-<a',b>} x^{a+a'} y^{b+b'}
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      int e = rs_.pairing_int(kb.first, ka.second);
      r.add_term(ka.first + kb.first, ka.second + kb.second, (ca * cb).shifted(-e));
    }
  return r;
}

void Heisenberg::check_membership(const HeisElt& h) const {
  for (const auto& [k, c] : h.terms()) {
    const Weight& q_part = h.tag() == HeisTag::H ? k.second : k.first;
    if (!rs_.in_root_lattice(q_part))
      throw AssertionFailure(std::string("exponent ") + to_string(q_part, rs_.rank()) +
                             " outside the root lattice in " + tag_name(h.tag()));
  }
}

HeisElt Heisenberg::star(const HeisElt& h) const {
  HeisElt r(h.tag());
  for (const auto& [k, c] : h.terms()) r.add_term(-k.first, k.second, c.inverted());
  return r;
}

HeisElt Heisenberg::tau(const HeisElt& h) const {
  if (h.tag() != HeisTag::Hp) throw AssertionFailure("tau expects an element of H'");
  // tau(x^a y^b) = tau(y^b) tau(x^a) = q^{<a,a>/2} x^{w0(b-a)} y^{w0 a}.
  const WeylElt& w0 = rs_.w0();
  HeisElt r(HeisTag::H);
  for (const auto& [k, c] : h.terms()) {
    const Weight& a = k.first;
    const Weight& b = k.second;
    long aa = rs_.pairing_scaled(a, a, 1);
    if (aa % 2 != 0) throw AssertionFailure("tau: <a,a> not even");
    r.add_term(w0.apply(b - a), w0.apply(a), c.shifted(static_cast<int>(aa / 2)));
  }
  return r;
}

HeisMat Heisenberg::mat_mul(const HeisMat& a, const HeisMat& b) const {
  if (a.n != b.n || a.tag != b.tag) throw AssertionFailure("matrix shape or tag mismatch");
  HeisMat r(a.tag, a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const HeisElt& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n; ++j) {
        const HeisElt& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += mul(aik, bkj);
      }
    }
  return r;
}

HeisMat Heisenberg::mat_add(const HeisMat& a, const HeisMat& b) const {
  if (a.n != b.n || a.tag != b.tag) throw AssertionFailure("matrix shape or tag mismatch");
  HeisMat r = a;
  for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] += b.entries[k];
  return r;
}

HeisMat Heisenberg::mat_sub(const HeisMat& a, const HeisMat& b) const {
  if (a.n != b.n || a.tag != b.tag) throw AssertionFailure("matrix shape or tag mismatch");
  HeisMat r = a;
  for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] -= b.entries[k];
  return r;
}

HeisMat Heisenberg::mat_scale(const HeisMat& a, const QLaurent& c) const {
  HeisMat r = a;
  for (auto& e : r.entries) e = e.scaled(c);
  return r;
}

HeisMat Heisenberg::mat_tau(const HeisMat& m) const {
  HeisMat r(HeisTag::H, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r.at(j, i) = tau(m.at(i, j));
  return r;
}

HeisMat Heisenberg::mat_star(const HeisMat& m) const {
  HeisMat r(m.tag, m.n);
  for (std::size_t k = 0; k < m.entries.size(); ++k) r.entries[k] = star(m.entries[k]);
  return r;
}

std::string Heisenberg::format(const HeisElt& h) const {
  if (h.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : h.terms()) {
    std::vector<std::string> f;
    if (!k.first.is_zero()) f.push_back("x" + to_string(k.first, rs_.rank()));
    if (!k.second.is_zero()) f.push_back("y" + to_string(k.second, rs_.rank()));
    std::string mono;
    for (std::size_t i = 0; i < f.size(); ++i) mono += (i ? "*" : "") + f[i];
    std::string coef = c.format();
    bool single = c.terms().size() == 1;
    bool neg = single && c.terms().begin()->second < 0;
    if (neg) coef = (-c).format();
    std::string body;
    if (mono.empty())
      body = single ? coef : "(" + coef + ")";
    else if (coef == "1")
      body = mono;
    else
      body = (single ? coef : "(" + coef + ")") + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace siflag
