#include <doctest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

#include "siflag/error.hpp"
#include "siflag/root_system.hpp"
#include "siflag/weyl_group.hpp"

using namespace siflag;

namespace {

Weight W(std::vector<int> c) { return Weight::from(c); }

// Gram matrix of fundamental weights by naive rational Gauss-Jordan on the Cartan matrix.
std::vector<std::vector<mpq_class>> gram_oracle(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = rs.cartan(i + 1, j + 1);
      a[i][n + j] = i == j ? 1 : 0;
    }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    mpq_class v = a[c][c];
    for (auto& x : a[c]) x /= v;
    for (int r = 0; r < n; ++r)
      if (r != c) {
        mpq_class f = a[r][c];
        for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
  }
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = a[i][n + j];
  return g;
}

int e_oracle(const RootSystem& rs) {
  auto g = gram_oracle(rs);
  for (int e = 1;; ++e) {
    bool ok = true;
    for (auto& row : g)
      for (auto& v : row) {
        mpq_class x = v * e;
        if (x.get_den() != 1 || x.get_num() % 2 != 0) ok = false;
      }
    if (ok) return e;
  }
}

// Every element obtained from a subword of a reduced word of w.
std::set<WeylElt> subword_ideal(const RootSystem& rs, const WeylElt& w) {
  auto word = rs.reduced_word(w);
  std::set<WeylElt> out;
  std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    WeylElt v = rs.identity();
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) v = v * rs.simple_reflection(word[k]);
    out.insert(v);
  }
  return out;
}

// Counts positive affine roots a + k delta (|k| <= bound) sent to negative ones.
int affine_inversions(const RootSystem& rs, const ExtAffineElt& g, int bound) {
  int n = 0;
  for (const auto& a : rs.positive_roots())
    for (int sign : {1, -1})
      for (int k = 0; k <= bound; ++k) {
        AffineRoot r{sign * a, k};
        if (!rs.is_affine_positive(r)) continue;
        if (!rs.is_affine_positive(rs.affine_act(g, r))) ++n;
      }
  return n;
}

ExtAffineElt random_ext(const RootSystem& rs, std::mt19937& gen, int len) {
  std::uniform_int_distribution<int> node(0, rs.rank());
  std::vector<int> word;
  for (int k = 0; k < len; ++k) word.push_back(node(gen));
  ExtAffineElt g = rs.ext_from_word(word);
  std::uniform_int_distribution<int> c(-2, 2);
  Weight b;
  for (int i = 0; i < rs.rank(); ++i) b[i] = c(gen);
  return rs.ext_mul(g, rs.translation(b));
}

}  // namespace

TEST_CASE("root systems satisfy the structural invariants") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::from_name(name);
    int n = rs.rank();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(rs.cartan(i, j) == rs.cartan(j, i));
        if (i == j)
          CHECK(rs.cartan(i, j) == 2);
        else
          CHECK((rs.cartan(i, j) == 0 || rs.cartan(i, j) == -1));
      }
    for (const auto& a : rs.positive_roots()) CHECK(rs.pairing(a, a) == 2);
    CHECK(rs.e_const() == e_oracle(rs));
    CHECK(rs.w0() * rs.w0() == rs.identity());
    CHECK(rs.w0().apply(rs.rho()) == -rs.rho());
    CHECK(rs.length(rs.w0()) == static_cast<int>(rs.positive_roots().size()));
    auto g = gram_oracle(rs);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(rs.gram(i, j) == g[i - 1][j - 1]);
  }
  CHECK(RootSystem::from_name("E6").positive_roots().size() == 36);
  CHECK(RootSystem::from_name("E7").positive_roots().size() == 63);
  CHECK(RootSystem::from_name("E8").positive_roots().size() == 120);
}

TEST_CASE("root system constants in small rank") {
  RootSystem a1 = RootSystem::from_name("A1");
  CHECK(a1.theta() == a1.simple_root(1));
  CHECK(a1.rho() == a1.fundamental_weight(1));
  CHECK(a1.w0() == a1.simple_reflection(1));
  CHECK(a1.e_const() == 4);
  CHECK(a1.pairing(W({1}), W({1})) == mpq_class(1, 2));

  RootSystem a2 = RootSystem::from_name("A2");
  CHECK(a2.theta() == a2.simple_root(1) + a2.simple_root(2));
  CHECK(a2.length(a2.w0()) == 3);
  CHECK(a2.e_const() == 6);
  CHECK(a2.gram(1, 2) == mpq_class(1, 3));

  RootSystem d4 = RootSystem::from_name("D4");
  CHECK(d4.positive_roots().size() == 12);
  CHECK(*d4.root_coords(d4.theta()) == std::vector<int>{1, 2, 1, 1});
  CHECK(d4.minuscule_nodes() == std::vector<int>{1, 3, 4});
  CHECK(a2.minuscule_nodes() == std::vector<int>{1, 2});
}

TEST_CASE("invalid root data is rejected") {
  CHECK_THROWS_AS(RootSystem::from_name("B2"), ParseError);
  CHECK_THROWS_AS(RootSystem::from_name("D3"), ParseError);
  CHECK_THROWS_AS(RootSystem::from_name("E9"), ParseError);
  CHECK_THROWS_AS(RootSystem::from_name("A0"), ParseError);
  CHECK_THROWS_AS(RootSystem::from_name("Ax"), ParseError);
}

TEST_CASE("finite Weyl group action") {
  RootSystem a1 = RootSystem::from_name("A1");
  CHECK(a1.simple_reflection(1).apply(W({1})) == W({-1}));
  CHECK(a1.identity().apply(W({3})) == W({3}));
  RootSystem a2 = RootSystem::from_name("A2");
  // Composition is right to left: s1 s2 (omega_1) = s1(omega_1).
  CHECK(a2.from_word({1, 2}).apply(W({1, 0})) == W({-1, 1}));
  CHECK(a2.from_word({2, 1}).apply(W({1, 0})) == W({0, -1}));

  std::mt19937 gen(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const char* name : {"A2", "A3", "D4"}) {
    RootSystem rs = RootSystem::from_name(name);
    auto ptr = std::make_shared<const RootSystem>(rs);
    WeylGroup wg(ptr);
    for (std::size_t k = 0; k < wg.size(); ++k) {
      const WeylElt& w = wg[k];
      CHECK(rs.inverse(w) * w == rs.identity());
      Weight l, m;
      for (int i = 0; i < rs.rank(); ++i) {
        l[i] = c(gen);
        m[i] = c(gen);
      }
      CHECK(rs.pairing(w.apply(l), w.apply(m)) == rs.pairing(l, m));
      CHECK(rs.from_word(rs.reduced_word(w)) == w);
      CHECK(static_cast<int>(rs.reduced_word(w).size()) == rs.length(w));
    }
  }
  RootSystem d4 = RootSystem::from_name("D4");
  CHECK(WeylGroup(std::make_shared<const RootSystem>(d4)).size() == 192);
}

TEST_CASE("lengths and Bruhat order") {
  RootSystem a2 = RootSystem::from_name("A2");
  CHECK(a2.length(a2.identity()) == 0);
  CHECK(a2.length(a2.from_word({1, 2, 1})) == 3);
  CHECK(a2.from_word({1, 2, 1}) == a2.w0());
  WeylElt s1 = a2.simple_reflection(1), s2 = a2.simple_reflection(2);
  CHECK(a2.bruhat_le(s1, s1 * s2));
  CHECK(a2.bruhat_le(s2, s1 * s2));
  CHECK_FALSE(a2.bruhat_le(s1 * s2, s2 * s1));

  for (const char* name : {"A1", "A2", "A3"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::from_name(name);
    WeylGroup wg(std::make_shared<const RootSystem>(rs));
    int lw0 = rs.length(rs.w0());
    for (std::size_t a = 0; a < wg.size(); ++a) {
      const WeylElt& w = wg[a];
      CHECK(rs.length(rs.w0() * w) == lw0 - rs.length(w));
      auto ideal = subword_ideal(rs, w);
      for (std::size_t b = 0; b < wg.size(); ++b) {
        const WeylElt& v = wg[b];
        CHECK(rs.length(w * v) <= rs.length(w) + rs.length(v));
        CHECK(rs.bruhat_le(v, w) == (ideal.count(v) > 0));
      }
      CHECK(rs.bruhat_le(rs.identity(), w));
    }
  }
}

TEST_CASE("Weyl group ordering is length then word") {
  RootSystem a2 = RootSystem::from_name("A2");
  WeylGroup wg(std::make_shared<const RootSystem>(a2));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < wg.size(); ++k) labels.push_back(wg.label(k));
  CHECK(labels == std::vector<std::string>{"e", "s1", "s2", "s1*s2", "s2*s1", "s1*s2*s1"});
  for (std::size_t k = 0; k < wg.size(); ++k)
    CHECK(wg.mul_index(k, wg.inverse_index(k)) == wg.identity_index());
}

TEST_CASE("affine action") {
  RootSystem a1 = RootSystem::from_name("A1");
  ExtAffineElt s0 = a1.ext_simple_reflection(0);
  CHECK(s0.w == a1.simple_reflection(1));
  CHECK(s0.beta == -a1.theta());
  AffineRoot a0 = a1.affine_simple_root(0);
  AffineRoot img = a1.affine_act(s0, a0);
  CHECK(img.alpha == -a0.alpha);
  CHECK(img.level == -a0.level);
  AffineRoot r = a1.affine_act(s0, {a1.simple_root(1), 0});
  CHECK(r.alpha == -a1.simple_root(1));
  CHECK(r.level == 2);
  Weight beta = W({3});
  AffineRoot t = a1.affine_act(a1.translation(beta), {W({2}), 0});
  CHECK(t.alpha == W({2}));
  CHECK(t.level == -a1.pairing_int(beta, W({2})));

  std::mt19937 gen(11);
  for (const char* name : {"A1", "A2", "A3"}) {
    RootSystem rs = RootSystem::from_name(name);
    std::uniform_int_distribution<std::size_t> pick(0, rs.positive_roots().size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      ExtAffineElt g1 = random_ext(rs, gen, 4), g2 = random_ext(rs, gen, 4);
      AffineRoot root{rs.positive_roots()[pick(gen)], trial % 5 - 2};
      auto lhs = rs.affine_act(rs.ext_mul(g1, g2), root);
      auto rhs = rs.affine_act(g1, rs.affine_act(g2, root));
      CHECK(lhs == rhs);
      CHECK(rs.is_root(lhs.alpha));
      CHECK(rs.ext_mul(g1, rs.ext_inverse(g1)) == rs.ext_identity());
    }
  }
}

TEST_CASE("extended length agrees with counting affine inversions") {
  std::mt19937 gen(3);
  for (const char* name : {"A1", "A2", "A3"}) {
    RootSystem rs = RootSystem::from_name(name);
    for (int trial = 0; trial < 60; ++trial) {
      ExtAffineElt g = random_ext(rs, gen, 5);
      CHECK(rs.ext_length(g) == affine_inversions(rs, g, 40));
    }
  }
}

TEST_CASE("translation words") {
  RootSystem a1 = RootSystem::from_name("A1");
  auto tw = a1.translation_word(W({1}));
  CHECK(tw.word == std::vector<int>{1});
  CHECK(tw.pi == a1.ext_mul(a1.translation(W({1})), a1.ext_simple_reflection(1)));
  CHECK(a1.ext_length(tw.pi) == 0);
  auto tz = a1.translation_word(W({0}));
  CHECK(tz.word.empty());
  CHECK(tz.pi == a1.ext_identity());
  auto tn = a1.translation_word(W({-1}));
  CHECK(tn.word == std::vector<int>{0});
  CHECK(tn.pi == tw.pi);

  RootSystem a2 = RootSystem::from_name("A2");
  int l12 = static_cast<int>(a2.translation_word(W({1, 1})).word.size());
  int l1 = static_cast<int>(a2.translation_word(W({1, 0})).word.size());
  int l2 = static_cast<int>(a2.translation_word(W({0, 1})).word.size());
  CHECK(l12 == l1 + l2);

  for (const char* name : {"A1", "A2"}) {
    RootSystem rs = RootSystem::from_name(name);
    // Shortest-word oracle: breadth-first search from the length-zero elements.
    std::vector<ExtAffineElt> pis{rs.ext_identity()};
    for (int r : rs.minuscule_nodes()) pis.push_back(rs.pi_element(r));
    std::map<ExtAffineElt, int> dist;
    std::deque<ExtAffineElt> queue;
    for (const auto& p : pis) {
      dist[p] = 0;
      queue.push_back(p);
    }
    while (!queue.empty()) {
      ExtAffineElt g = queue.front();
      queue.pop_front();
      if (dist[g] >= 10) continue;
      for (int i = 0; i <= rs.rank(); ++i) {
        ExtAffineElt h = rs.ext_mul(g, rs.ext_simple_reflection(i));
        if (dist.emplace(h, dist[g] + 1).second) queue.push_back(h);
      }
    }
    std::vector<Weight> nus;
    if (rs.rank() == 1)
      for (int a = -3; a <= 3; ++a) nus.push_back(W({a}));
    else
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) nus.push_back(W({a, b}));
    for (const auto& nu : nus) {
      for (auto choice : {DescentChoice::smallest, DescentChoice::largest}) {
        auto t = rs.translation_word(nu, choice);
        ExtAffineElt g = t.pi;
        for (int i : t.word) g = rs.ext_mul(g, rs.ext_simple_reflection(i));
        CHECK(g == rs.translation(nu));
        CHECK(rs.ext_length(t.pi) == 0);
        auto it = dist.find(rs.translation(nu));
        if (it != dist.end()) CHECK(static_cast<int>(t.word.size()) == it->second);
      }
    }
  }
}

TEST_CASE("epsilon signs") {
  RootSystem a1 = RootSystem::from_name("A1");
  auto tn = a1.translation_word(W({-1}));
  CHECK(a1.epsilon_signs(tn.pi, tn.word) == std::vector<int>{-1});
  CHECK(a1.epsilon_signs(a1.ext_identity(), {}).empty());
  CHECK_THROWS_AS(a1.epsilon_signs(a1.ext_identity(), {1, 1}), ParseError);

  for (const char* name : {"A2", "A3"}) {
    RootSystem rs = RootSystem::from_name(name);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        Weight nu;
        nu[0] = a;
        nu[rs.rank() - 1] += b;
        auto t = rs.translation_word(nu);
        for (int e : rs.epsilon_signs(t.pi, t.word)) CHECK(e == 1);
      }
  }
}

TEST_CASE("semi-infinite length and covers") {
  RootSystem a1 = RootSystem::from_name("A1");
  CHECK(a1.semiinfinite_length(a1.ext_identity()) == 0);
  CHECK(a1.semiinfinite_length(a1.translation(a1.simple_root(1))) == 2);
  ExtAffineElt s0 = a1.ext_simple_reflection(0), s1 = a1.ext_simple_reflection(1);
  ExtAffineElt e = a1.ext_identity();
  CHECK(a1.semiinfinite_length(s0) == -1);
  CHECK(a1.semiinfinite_cover(e, s0));
  CHECK(a1.semiinfinite_cover(s1, e));
  CHECK_FALSE(a1.semiinfinite_cover(e, e));
  CHECK_FALSE(a1.semiinfinite_cover(s0, e));
  CHECK(a1.semiinfinite_descends(0, e));
  CHECK_FALSE(a1.semiinfinite_descends(1, e));
  CHECK_THROWS_AS(a1.semiinfinite_length(a1.translation(W({1}))), AssertionFailure);

  // Affine reflections change the semi-infinite length by an odd amount.
  for (const char* name : {"A1", "A2"}) {
    RootSystem rs = RootSystem::from_name(name);
    std::mt19937 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> node(0, rs.rank());
      std::vector<int> word;
      for (int k = 0; k < 6; ++k) word.push_back(node(gen));
      ExtAffineElt w = rs.ext_from_word(word);
      for (const auto& a : rs.positive_roots())
        for (int k = -3; k <= 3; ++k) {
          ExtAffineElt refl{rs.reflection(a), k * a};
          int d = rs.semiinfinite_length(rs.ext_mul(refl, w)) - rs.semiinfinite_length(w);
          CHECK(d % 2 != 0);
        }
    }
  }
}

TEST_CASE("affine Bruhat order") {
  RootSystem a1 = RootSystem::from_name("A1");
  ExtAffineElt y = a1.translation(a1.simple_root(1));
  auto tw = a1.ext_reduced_word(y);
  CHECK(a1.ext_bruhat_le(a1.ext_identity(), y));
  CHECK(a1.ext_bruhat_le(y, y));
  CHECK_FALSE(a1.ext_bruhat_le(y, a1.ext_identity()));
  // Subword oracle on W_aff.
  std::set<ExtAffineElt> ideal;
  std::size_t n = tw.word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ExtAffineElt g = tw.pi;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) g = a1.ext_mul(g, a1.ext_simple_reflection(tw.word[k]));
    ideal.insert(g);
  }
  for (int len = 0; len <= 3; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::vector<int> word;
      for (int k = 0; k < len; ++k) word.push_back((mask >> k) & 1);
      ExtAffineElt g = a1.ext_from_word(word);
      CHECK(a1.ext_bruhat_le(g, y) == (ideal.count(g) > 0));
    }
}

TEST_CASE("formatting") {
  RootSystem a2 = RootSystem::from_name("A2");
  CHECK(a2.format(a2.ext_identity()) == "e");
  CHECK(a2.format(a2.ext_finite(a2.from_word({2, 1}))) == "s2*s1");
  ExtAffineElt g{a2.simple_reflection(1), W({1, 1})};
  CHECK(a2.format(g) == "s1*y[1,1]");
}
