#include "siflag/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "siflag/error.hpp"

namespace siflag {

// ---------------------------------------------------------------------------
// WeylElt

WeylElt WeylElt::identity(int rank) {
  WeylElt w;
  w.rank_ = rank;
  for (int i = 0; i < rank; ++i) w.set(i, i, 1);
  return w;
}

Weight WeylElt::apply(const Weight& lambda) const {
  Weight out;
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += entry(i, j) * lambda[j];
    out[i] = s;
  }
  return out;
}

bool WeylElt::is_identity() const { return *this == identity(rank_); }

std::vector<int> WeylElt::entries() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.push_back(entry(i, j));
  return out;
}

WeylElt operator*(const WeylElt& a, const WeylElt& b) {
  WeylElt c;
  c.rank_ = a.rank_;
  for (int i = 0; i < a.rank_; ++i)
    for (int j = 0; j < a.rank_; ++j) {
      int s = 0;
      for (int k = 0; k < a.rank_; ++k) s += a.entry(i, k) * b.entry(k, j);
      c.set(i, j, s);
    }
  return c;
}

// ---------------------------------------------------------------------------
// construction

namespace {

long determinant(std::vector<std::vector<long>> m) {
  // Bareiss fraction-free elimination.
  const int n = static_cast<int>(m.size());
  long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

RootSystem RootSystem::build(CartanType kind, int rank) {
  switch (kind) {
    case CartanType::A:
      if (rank < 1 || rank > kMaxRank) throw ParseError("type A needs 1 <= rank <= 8");
      break;
    case CartanType::D:
      if (rank < 4 || rank > kMaxRank) throw ParseError("type D needs 4 <= rank <= 8");
      break;
    case CartanType::E:
      if (rank < 6 || rank > 8) throw ParseError("type E needs rank 6, 7 or 8");
      break;
  }
  RootSystem rs;
  rs.kind_ = kind;
  rs.rank_ = rank;
  auto link = [&rs](int i, int j) {  // 1-based nodes
    rs.cartan_[idx(i - 1, j - 1)] = -1;
    rs.cartan_[idx(j - 1, i - 1)] = -1;
  };
  for (int i = 0; i < rank; ++i) rs.cartan_[idx(i, i)] = 2;
  switch (kind) {
    case CartanType::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case CartanType::D:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      link(rank - 2, rank);
      break;
    case CartanType::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
  }

  // C^{-1} by exact Gauss-Jordan, then adj = det * C^{-1}.
  std::vector<std::vector<long>> cm(rank, std::vector<long>(rank));
  std::vector<std::vector<mpq_class>> a(rank, std::vector<mpq_class>(2 * rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      cm[i][j] = rs.cartan_[idx(i, j)];
      a[i][j] = rs.cartan_[idx(i, j)];
      a[i][rank + j] = (i == j) ? 1 : 0;
    }
  for (int col = 0; col < rank; ++col) {
    int p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    mpq_class piv = a[col][col];
    for (auto& v : a[col]) v /= piv;
    for (int r = 0; r < rank; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int j = 0; j < 2 * rank; ++j) a[r][j] -= f * a[col][j];
    }
  }
  rs.det_ = determinant(cm);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      mpq_class v = a[i][rank + j] * rs.det_;
      if (v.get_den() != 1) throw AssertionFailure("adjugate not integral");
      rs.adj_[idx(i, j)] = v.get_num().get_si();
    }

  // Positive roots: closure under adding simple roots (simply-laced string rule).
  std::vector<Weight> roots;
  std::set<Weight> seen;
  for (int i = 1; i <= rank; ++i) {
    roots.push_back(rs.simple_root(i));
    seen.insert(roots.back());
  }
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (int i = 1; i <= rank; ++i) {
      if (roots[k][i - 1] != -1) continue;
      Weight b = roots[k] + rs.simple_root(i);
      if (seen.insert(b).second) roots.push_back(b);
    }
  std::stable_sort(roots.begin(), roots.end(), [&rs](const Weight& x, const Weight& y) {
    return rs.height(x) < rs.height(y);
  });
  rs.positive_roots_ = roots;
  rs.theta_ = roots.back();
  for (int i = 0; i < rank; ++i) rs.rho_[i] = 1;

  // w0: drive rho to -rho by simple reflections.
  WeylElt w = rs.identity();
  Weight lam = rs.rho_;
  for (;;) {
    int i = 0;
    while (i < rank && lam[i] <= 0) ++i;
    if (i == rank) break;
    lam = rs.reflect(i + 1, lam);
    w = rs.simple_reflection(i + 1) * w;
  }
  rs.w0_ = w;

  int e = 1;
  for (;; ++e) {
    bool ok = true;
    for (int i = 1; i <= rank && ok; ++i)
      for (int j = 1; j <= rank && ok; ++j) {
        mpq_class v = rs.gram(i, j) * e;
        ok = v.get_den() == 1 && v.get_num() % 2 == 0;
      }
    if (ok) break;
  }
  rs.e_const_ = e;
  return rs;
}

RootSystem RootSystem::from_name(std::string_view name) {
  if (name.size() < 2) throw ParseError("unknown root system '" + std::string(name) + "'");
  CartanType kind;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': kind = CartanType::A; break;
    case 'D': kind = CartanType::D; break;
    case 'E': kind = CartanType::E; break;
    default:
      throw ParseError("unsupported root system '" + std::string(name) +
                       "' (only simply-laced types A, D, E)");
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), rank);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw ParseError("bad rank in root system '" + std::string(name) + "'");
  return build(kind, rank);
}

std::string RootSystem::name() const {
  const char* k = kind_ == CartanType::A ? "A" : kind_ == CartanType::D ? "D" : "E";
  return k + std::to_string(rank_);
}

Weight RootSystem::simple_root(int node) const {
  if (node < 1 || node > rank_) throw ParseError("node index out of range");
  Weight a;
  for (int j = 0; j < rank_; ++j) a[j] = cartan_[idx(node - 1, j)];
  return a;
}

std::vector<int> RootSystem::minuscule_nodes() const {
  auto c = *root_coords(theta_);
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (c[static_cast<std::size_t>(i)] == 1) out.push_back(i + 1);
  return out;
}

// ---------------------------------------------------------------------------
// pairings

mpq_class RootSystem::pairing(const Weight& a, const Weight& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    long r = 0;
    for (int j = 0; j < rank_; ++j) r += adj_[idx(i, j)] * b[j];
    s += a[i] * r;
  }
  mpq_class q(s, det_);
  q.canonicalize();
  return q;
}

long RootSystem::pairing_scaled(const Weight& a, const Weight& b, long scale) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    long r = 0;
    for (int j = 0; j < rank_; ++j) r += adj_[idx(i, j)] * b[j];
    s += a[i] * r;
  }
  s *= scale;
  if (s % det_ != 0)
    throw AssertionFailure("pairing " + to_string(a, rank_) + "," + to_string(b, rank_) +
                           " not integral at scale " + std::to_string(scale));
  return s / det_;
}

mpq_class RootSystem::gram(int i, int j) const {
  mpq_class q(adj_[idx(i - 1, j - 1)], det_);
  q.canonicalize();
  return q;
}

std::optional<std::vector<int>> RootSystem::root_coords(const Weight& lambda) const {
  std::vector<int> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += adj_[idx(i, j)] * lambda[j];
    if (s % det_ != 0) return std::nullopt;
    out[static_cast<std::size_t>(i)] = static_cast<int>(s / det_);
  }
  return out;
}

int RootSystem::height(const Weight& beta) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += adj_[idx(i, j)] * beta[j];
  if (s % det_ != 0)
    throw AssertionFailure("height of " + to_string(beta, rank_) + " outside the root lattice");
  return static_cast<int>(s / det_);
}

bool RootSystem::is_root(const Weight& lambda) const {
  for (const auto& r : positive_roots_)
    if (r == lambda || -r == lambda) return true;
  return false;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// finite Weyl group

WeylElt RootSystem::simple_reflection(int node) const {
  if (node < 1 || node > rank_) throw ParseError("node index out of range");
  WeylElt w = identity();
  for (int k = 0; k < rank_; ++k)
    w.set(k, node - 1, w.entry(k, node - 1) - cartan_[idx(node - 1, k)]);
  return w;
}

WeylElt RootSystem::reflection(const Weight& root) const {
  auto c = root_coords(root);
  if (!c) throw AssertionFailure("reflection in a non-root");
  WeylElt w = identity();
  for (int j = 0; j < rank_; ++j) {
    int cj = (*c)[static_cast<std::size_t>(j)];
    for (int k = 0; k < rank_; ++k) w.set(k, j, w.entry(k, j) - cj * root[k]);
  }
  return w;
}

WeylElt RootSystem::from_word(const std::vector<int>& word) const {
  WeylElt w = identity();
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

WeylElt RootSystem::inverse(const WeylElt& w) const {
  // W preserves <,>, so w^{-1} = C w^T C^{-1}.
  WeylElt out;
  out.rank_ = rank_;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      long s = 0;
      for (int k = 0; k < rank_; ++k) {
        if (cartan_[idx(i, k)] == 0) continue;
        long t = 0;
        for (int l = 0; l < rank_; ++l) t += w.entry(l, k) * adj_[idx(l, j)];
        s += cartan_[idx(i, k)] * t;
      }
      out.set(i, j, static_cast<int>(s / det_));
    }
  return out;
}

Weight RootSystem::reflect(int node, const Weight& lambda) const {
  return lambda - lambda[node - 1] * simple_root(node);
}

Weight RootSystem::reflect_by(const Weight& root, const Weight& lambda) const {
  return lambda - pairing_int(root, lambda) * root;
}

int RootSystem::length(const WeylElt& w) const {
  int n = 0;
  for (const auto& r : positive_roots_)
    if (height(w.apply(r)) < 0) ++n;
  return n;
}

bool RootSystem::is_right_descent(const WeylElt& w, int node) const {
  return height(w.apply(simple_root(node))) < 0;
}

bool RootSystem::is_left_descent(const WeylElt& w, int node) const {
  return height(inverse(w).apply(simple_root(node))) < 0;
}

std::vector<int> RootSystem::reduced_word(const WeylElt& w) const {
  std::vector<int> word;
  WeylElt cur = w;
  while (!cur.is_identity()) {
    WeylElt inv = inverse(cur);
    int i = 1;
    while (height(inv.apply(simple_root(i))) >= 0) ++i;
    word.push_back(i);
    cur = simple_reflection(i) * cur;
  }
  return word;
}

bool RootSystem::bruhat_le(const WeylElt& v, const WeylElt& w) const {
  // Lifting property: for a right descent s of w, v <= w iff min(v, vs) <= ws.
  WeylElt vv = v, ww = w;
  for (;;) {
    if (ww.is_identity()) return vv.is_identity();
    int s = 1;
    while (!is_right_descent(ww, s)) ++s;
    WeylElt sr = simple_reflection(s);
    if (is_right_descent(vv, s)) vv = vv * sr;
    ww = ww * sr;
  }
}

std::optional<Weight> RootSystem::reflection_root(const WeylElt& w) const {
  for (const auto& r : positive_roots_)
    if (reflection(r) == w) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// extended affine Weyl group

ExtAffineElt RootSystem::ext_simple_reflection(int node) const {
  if (node == 0) return {reflection(theta_), -theta_};
  return {simple_reflection(node), Weight::zero()};
}

ExtAffineElt RootSystem::ext_mul(const ExtAffineElt& a, const ExtAffineElt& b) const {
  return {a.w * b.w, inverse(b.w).apply(a.beta) + b.beta};
}

ExtAffineElt RootSystem::ext_inverse(const ExtAffineElt& a) const {
  return {inverse(a.w), -a.w.apply(a.beta)};
}

ExtAffineElt RootSystem::ext_from_word(const std::vector<int>& affine_word) const {
  ExtAffineElt g = ext_identity();
  for (int i : affine_word) g = ext_mul(g, ext_simple_reflection(i));
  return g;
}

ExtAffineElt RootSystem::pi_element(int node) const {
  auto nodes = minuscule_nodes();
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
    throw ParseError("node " + std::to_string(node) + " is not minuscule in " + name());
  return translation_word(fundamental_weight(node)).pi;
}

AffineRoot RootSystem::affine_simple_root(int node) const {
  if (node == 0) return {-theta_, 1};
  return {simple_root(node), 0};
}

AffineRoot RootSystem::affine_act(const ExtAffineElt& g, const AffineRoot& r) const {
  return {g.w.apply(r.alpha), r.level - pairing_int(g.beta, r.alpha)};
}

bool RootSystem::is_affine_positive(const AffineRoot& r) const {
  return r.level > 0 || (r.level == 0 && height(r.alpha) > 0);
}

int RootSystem::ext_length(const ExtAffineElt& g) const {
  int len = 0;
  for (const auto& a : positive_roots_) {
    int n = pairing_int(g.beta, a);
    int neg = height(g.w.apply(a)) < 0 ? 1 : 0;
    len += n >= 0 ? n + neg : -n - neg;
  }
  return len;
}

bool RootSystem::is_ext_right_descent(const ExtAffineElt& g, int node) const {
  return !is_affine_positive(affine_act(g, affine_simple_root(node)));
}

TranslationWord RootSystem::ext_reduced_word(const ExtAffineElt& g, DescentChoice choice) const {
  std::vector<int> peeled;
  ExtAffineElt cur = g;
  int len = ext_length(cur);
  while (len > 0) {
    int pick = -1;
    for (int i = 0; i <= rank_; ++i) {
      if (!is_ext_right_descent(cur, i)) continue;
      pick = i;
      if (choice == DescentChoice::smallest) break;
    }
    if (pick < 0) throw AssertionFailure("no right descent on an element of positive length");
    cur = ext_mul(cur, ext_simple_reflection(pick));
    peeled.push_back(pick);
    --len;
  }
  std::reverse(peeled.begin(), peeled.end());
  return {cur, peeled};
}

std::vector<int> RootSystem::epsilon_signs(const ExtAffineElt& pi,
                                           const std::vector<int>& word) const {
  if (ext_length(pi) != 0) throw ParseError("leading factor is not of length zero");
  ExtAffineElt prefix = pi;
  std::vector<int> eps;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int i = word[k];
    if (i < 0 || i > rank_) throw ParseError("node index out of range");
    AffineRoot r = affine_act(prefix, affine_simple_root(i));
    // Each step of a reduced word sends alpha_{i_k} to a positive affine root.
    if (!is_affine_positive(r)) throw ParseError("expression is not reduced");
    eps.push_back(height(r.alpha) < 0 ? 1 : -1);
    prefix = ext_mul(prefix, ext_simple_reflection(i));
  }
  return eps;
}

bool RootSystem::ext_bruhat_le(const ExtAffineElt& v, const ExtAffineElt& w) const {
  ExtAffineElt vv = v, ww = w;
  int lw = ext_length(ww);
  while (lw > 0) {
    int s = 0;
    while (!is_ext_right_descent(ww, s)) ++s;
    ExtAffineElt sr = ext_simple_reflection(s);
    if (is_ext_right_descent(vv, s)) vv = ext_mul(vv, sr);
    ww = ext_mul(ww, sr);
    --lw;
  }
  return vv == ww;
}

int RootSystem::semiinfinite_length(const ExtAffineElt& g) const {
  if (!in_affine_weyl(g)) throw AssertionFailure("semi-infinite length needs an element of W_aff");
  return length(g.w) + 2 * height(g.beta);
}

bool RootSystem::semiinfinite_cover(const ExtAffineElt& w, const ExtAffineElt& v) const {
  if (!in_affine_weyl(w) || !in_affine_weyl(v)) return false;
  if (semiinfinite_length(v) != semiinfinite_length(w) - 1) return false;
  // v w^{-1} must be an affine reflection s_{a+k delta} = s_a y^{k a}.
  ExtAffineElt g = ext_mul(v, ext_inverse(w));
  auto a = reflection_root(g.w);
  if (!a) return false;
  auto ca = *root_coords(*a);
  auto cb = *root_coords(g.beta);
  int k = 0;
  bool found = false;
  for (std::size_t j = 0; j < ca.size(); ++j) {
    if (ca[j] == 0) {
      if (cb[j] != 0) return false;
      continue;
    }
    if (cb[j] % ca[j] != 0) return false;
    int kj = cb[j] / ca[j];
    if (found && kj != k) return false;
    k = kj;
    found = true;
  }
  AffineRoot b = k >= 0 ? AffineRoot{*a, k} : AffineRoot{-*a, -k};
  return height(affine_act(ext_inverse(w), b).alpha) < 0;
}

bool RootSystem::semiinfinite_descends(int node, const ExtAffineElt& w) const {
  return semiinfinite_cover(w, ext_mul(ext_simple_reflection(node), w));
}

std::string RootSystem::format(const WeylElt& w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += '*';
    s += 's' + std::to_string(word[k]);
  }
  return s;
}

std::string RootSystem::format(const ExtAffineElt& g) const {
  if (g.beta.is_zero()) return format(g.w);
  std::string y = "y" + to_string(g.beta, rank_);
  if (g.w.is_identity()) return y;
  return format(g.w) + "*" + y;
}

}  // namespace siflag
