#include <doctest.h>

#include <memory>
#include <random>

#include "siflag/error.hpp"
#include "siflag/ktheory.hpp"

using namespace siflag;

namespace {

Weight W(std::vector<int> c) { return Weight::from(c); }

std::shared_ptr<const RootSystem> make(const char* name) {
  return std::make_shared<const RootSystem>(RootSystem::from_name(name));
}

Expr L(const Letter& l) { return Expr::letter(l); }

Weight random_weight(std::mt19937& rng, int rank, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Weight w;
  for (int i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

// Random W_aff element: finite part times y^beta with beta in Q.
ExtAffineElt random_affine(std::mt19937& rng, const RootSystem& rs, const WeylGroup& G) {
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  std::uniform_int_distribution<int> d(-1, 1);
  Weight beta;
  for (int i = 1; i <= rs.rank(); ++i) beta += d(rng) * rs.simple_root(i);
  return {G[pick(rng)], beta};
}

KClass random_class(std::mt19937& rng, const RootSystem& rs, const WeylGroup& G) {
  std::uniform_int_distribution<int> c(-2, 2);
  KClass k;
  for (int n = 0; n < 3; ++n)
    k.add_term(random_affine(rng, rs, G), random_weight(rng, rs.rank(), 1),
               QLaurent::q_power(c(rng), 1 + n));
  return k;
}

}  // namespace

TEST_CASE("A1 inverse Pieri-Chevalley expansions") {
  auto rs = make("A1");
  KTheory K(rs);
  const Weight w = W({1}), a = W({2}), z = W({0});
  ExtAffineElt e = rs->ext_identity(), s = rs->ext_finite(rs->simple_reflection(1));
  ExtAffineElt ya = rs->translation(a), sya = rs->ext_mul(s, ya);

  KClass expect = KClass::basis(e, w) - KClass::basis(s, w);
  CHECK(K.nil_act(L(Letter::X(-w)), KClass::basis(e)) == expect);
  CHECK(K.inverse_pieri_chevalley(w, e) == expect);

  KClass expect_s = KClass::basis(s, -w) + KClass::basis(ya, w).scaled(QLaurent::q_power(1)) -
                    KClass::basis(sya, w).scaled(QLaurent::q_power(1));
  CHECK(K.inverse_pieri_chevalley(w, s) == expect_s);
  CHECK(K.format(expect) == "-[O_s1([1])] + [O_e([1])]");

  // [O_s(omega)] y^alpha = q [O_{s y^alpha}(omega)]
  CHECK(K.heis_act(KClass::basis(s, w), HeisElt::term(HeisTag::H, z, a)) ==
        KClass::basis(sya, w).scaled(QLaurent::q_power(1)));
  CHECK(K.inverse_pieri_chevalley(z, s) == KClass::basis(s));
}

TEST_CASE("free form round trip") {
  std::mt19937 rng(21);
  for (const char* name : {"A1", "A2"}) {
    auto rs = make(name);
    KTheory K(rs);
    for (int trial = 0; trial < 10; ++trial) {
      KClass c = random_class(rng, *rs, K.weyl());
      CHECK(K.from_free_form(K.to_free_form(c)) == c);
    }
  }
}

TEST_CASE("bimodule compatibility") {
  std::mt19937 rng(4);
  for (const char* name : {"A1", "A2"}) {
    auto rs = make(name);
    KTheory K(rs);
    std::uniform_int_distribution<int> node(0, rs->rank());
    for (int trial = 0; trial < 6; ++trial) {
      KClass c = random_class(rng, *rs, K.weyl());
      Weight beta = random_affine(rng, *rs, K.weyl()).beta;
      HeisElt h = HeisElt::term(HeisTag::H, random_weight(rng, rs->rank(), 1), beta,
                                QLaurent::q_power(1, 2)) +
                  HeisElt::one(HeisTag::H);
      Expr H(Word{Letter::D(node(rng)), Letter::X(random_weight(rng, rs->rank(), 1))});
      CHECK(K.nil_act(H, K.heis_act(c, h)) == K.heis_act(K.nil_act(H, c), h));
    }
  }
}

TEST_CASE("inverse Pieri-Chevalley inverts the forward action") {
  for (const char* name : {"A1", "A2"}) {
    auto rs = make(name);
    KTheory K(rs);
    std::vector<Weight> lams;
    for (int r = 1; r <= rs->rank(); ++r) {
      lams.push_back(rs->fundamental_weight(r));
      lams.push_back(-rs->fundamental_weight(r));
    }
    for (const auto& lam : lams)
      for (std::size_t k = 0; k < K.weyl().size(); ++k) {
        ExtAffineElt w = rs->ext_finite(K.weyl()[k]);
        KClass c = K.inverse_pieri_chevalley(lam, w);
        CHECK(K.nil_act(L(Letter::X(lam)), c) == KClass::basis(w));
        SupportReport rep = K.support_report(lam, c);
        CHECK(rep.terms == c.terms().size());
        CHECK(rep.below_translation <= rep.terms);
      }
  }
}

TEST_CASE("Demazure action on K") {
  std::mt19937 rng(8);
  auto rs = make("A2");
  KTheory K(rs);
  for (int trial = 0; trial < 4; ++trial) {
    KClass c = random_class(rng, *rs, K.weyl());
    for (int i = 0; i <= 2; ++i) {
      KClass d = K.demazure_act(i, c);
      CHECK(K.demazure_act(i, d) == d);
    }
    auto D = [&](int i, const KClass& x) { return K.demazure_act(i, x); };
    CHECK(D(1, D(2, D(1, c))) == D(2, D(1, D(2, c))));
    CHECK(D(0, D(1, D(0, c))) == D(1, D(0, D(1, c))));
  }
  // D_1 sends [O_{s1}] to [O_e] and fixes [O_e].
  ExtAffineElt e = rs->ext_identity(), s1 = rs->ext_finite(rs->simple_reflection(1));
  CHECK(K.demazure_act(1, KClass::basis(s1)) == KClass::basis(e));
  CHECK(K.demazure_act(1, KClass::basis(e)) == KClass::basis(e));
}

TEST_CASE("overline relabeling and index checks") {
  std::mt19937 rng(2);
  auto rs = make("A2");
  KTheory K(rs);
  KClass c = random_class(rng, *rs, K.weyl());
  CHECK(K.overline(K.overline(c)) == c);
  ExtAffineElt y = rs->translation(rs->simple_root(1));
  // -w0(alpha_1) = alpha_2 in A2.
  CHECK(K.overline(KClass::basis(y)) == KClass::basis(rs->translation(rs->simple_root(2))));
  CHECK_THROWS_AS(K.inverse_pieri_chevalley(W({1, 0}), rs->translation(W({1, 0}))), ParseError);
  CHECK_THROWS_AS(K.heis_act(KClass::basis(y), HeisElt::one(HeisTag::Hp)), AssertionFailure);
}
