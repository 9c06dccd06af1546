#include "siflag/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "siflag/error.hpp"
#include "siflag/expr_io.hpp"
#include "siflag/json_io.hpp"
#include "siflag/nil_daha.hpp"

namespace siflag {

namespace {

Expr L(const Letter& l) { return Expr::letter(l); }
Expr one() { return Expr(Word{}); }
Expr minus(const Expr& a, const Expr& b) { return a + b.scaled(Poly(-1)); }

template <class F>
CheckItem run(std::string suite, std::string name, F&& f) {
  CheckItem it{std::move(suite), std::move(name), false, {}};
  auto start = std::chrono::steady_clock::now();
  try {
    it.pass = f(it.detail);
  } catch (const Error& e) {
    it.detail = e.what();
  }
  it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (std::getenv("SIFLAG_TRACE")) std::fprintf(stderr, "%s %s %.3fs\n", it.suite.c_str(), it.name.c_str(), it.seconds);
  return it;
}

// (1 - X^{alpha_i}) (T_i X^nu - X^{s_i nu} T_i) - c (X^nu - X^{s_i nu}); c = t - 1 generic, -1 at t = 0.
Expr bernstein(const RootSystem& rs, int i, const Weight& nu, const Poly& c) {
  Expr xa, xsnu;
  if (i == 0) {
    xa = L(Letter::Xd(rs.e_const())) * L(Letter::X(-rs.theta()));
    Weight s = rs.reflect_by(rs.theta(), nu);
    xsnu = L(Letter::X(s)) * L(Letter::Xd(rs.e_const() * rs.pairing_int(nu, rs.theta())));
  } else {
    xa = L(Letter::X(rs.simple_root(i)));
    xsnu = L(Letter::X(rs.reflect(i, nu)));
  }
  Expr comm = minus(L(Letter::T(i)) * L(Letter::X(nu)), xsnu * L(Letter::T(i)));
  return minus(minus(one(), xa) * comm, minus(L(Letter::X(nu)), xsnu).scaled(c));
}

// (1 - Y^{-alpha_i}) (T_i' Y^nu - Y^{s_i nu} T_i') + (Y^nu - Y^{s_i nu}), i != 0.
Expr y_bernstein(const RootSystem& rs, int i, const Weight& nu) {
  Expr ysnu = L(Letter::Y(rs.reflect(i, nu)));
  Expr comm = minus(L(Letter::Tp(i)) * L(Letter::Y(nu)), ysnu * L(Letter::Tp(i)));
  return minus(one(), L(Letter::Y(-rs.simple_root(i)))) * comm + minus(L(Letter::Y(nu)), ysnu);
}

Expr braid(Letter (*gen)(int), int i, int j, int m) {
  Word a, b;
  for (int k = 0; k < m; ++k) {
    a.push_back(gen(k % 2 ? j : i));
    b.push_back(gen(k % 2 ? i : j));
  }
  return minus(Expr(a), Expr(b));
}

bool zero(const HeisMat& m) {
  for (const auto& e : m.entries)
    if (!e.is_zero()) return false;
  return true;
}

std::string mismatch(const Heisenberg& H, const WeylGroup& W, const HeisMat& a, const HeisMat& b) {
  if (a.n != b.n || a.tag != b.tag) return "shape or tag differs";
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (!(a.at(i, j) == b.at(i, j)))
        return "(" + W.label(i) + "," + W.label(j) + "): got " + H.format(a.at(i, j)) + ", expected " +
               H.format(b.at(i, j));
  return {};
}

}  // namespace

int affine_braid_order(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  int a;
  if (i != 0 && j != 0)
    a = rs.cartan(i, j);
  else
    a = -rs.pairing_int(rs.theta(), rs.simple_root(i == 0 ? j : i));
  if (a == 0) return 2;
  if (a == -1) return 3;
  return 0;
}

std::vector<CheckItem> check_goldens(std::shared_ptr<const RootSystem> rs, std::string_view text) {
  std::vector<CheckItem> out;
  if (text.empty()) return out;
  NilDaha N(rs);
  const MatrixRep& R = N.matrix_rep();
  const WeylGroup& W = N.weyl();
  for (const auto& g : json::parse_goldens(text)) {
    out.push_back(run("golden", g.name, [&](std::string& detail) {
      Expr e = parse_expr(*rs, g.elt);
      if (g.map == "rho_prime" || g.map == "kappa_rho_prime") {
        OpMat m = R.rho_prime(e);
        if (g.map == "kappa_rho_prime") m = R.kappa(m);
        bool ok = m == json::parse_op_mat(*rs, g.expected);
        if (!ok) detail = "matrix differs";
        return ok;
      }
      if (g.map == "rho0_prime" || g.map == "rho0") {
        HeisMat m = g.map == "rho0" ? N.rho0(e) : R.rho0_prime(e);
        HeisMat x = json::parse_heis_mat(*rs, g.expected);
        detail = mismatch(N.heis(), W, m, x);
        return detail.empty();
      }
      if (g.map == "sph" || g.map == "toda") {
        HeisElt h = g.map == "sph" ? N.rho0_sph(e) : N.qtoda(e);
        HeisElt x = json::parse_heis_elt(*rs, g.expected);
        if (h == x) return true;
        detail = "got " + N.heis().format(h) + ", expected " + N.heis().format(x);
        return false;
      }
      detail = "unknown map '" + g.map + "'";
      return false;
    }));
  }
  return out;
}

std::vector<CheckItem> check_closed_forms(std::shared_ptr<const RootSystem> rs) {
  MatrixRep R(rs);
  const WeylGroup& W = R.weyl();
  const Heisenberg& H = R.heis();
  std::vector<CheckItem> out;
  for (int i = 0; i <= rs->rank(); ++i) {
    out.push_back(run("closed-form", "rho0'(T" + std::to_string(i) + "')", [&](std::string& detail) {
      HeisMat expect(HeisTag::Hp, W.size());
      for (std::size_t v = 0; v < W.size(); ++v) {
        WeylElt vinv = rs->inverse(W[v]);
        if (i != 0) {
          if (rs->is_positive_root(vinv.apply(rs->simple_root(i)))) continue;
          expect.at(v, v) = HeisElt::scalar(HeisTag::Hp, -1);
          expect.at(v, W.index_of(rs->simple_reflection(i) * W[v])) = HeisElt::one(HeisTag::Hp);
        } else {
          Weight b = vinv.apply(rs->theta());
          if (!rs->is_positive_root(b)) continue;
          expect.at(v, v) = HeisElt::scalar(HeisTag::Hp, -1);
          expect.at(v, W.index_of(rs->reflection(rs->theta()) * W[v])) =
              HeisElt::term(HeisTag::Hp, b, b, QLaurent::q_power(-1));
        }
      }
      detail = mismatch(H, W, R.rho0_prime(L(Letter::Tp(i))), expect);
      return detail.empty();
    }));
  }
  return out;
}

std::vector<CheckItem> relation_suite(std::shared_ptr<const RootSystem> rs) {
  NilDaha N(rs);
  const MatrixRep& R = N.matrix_rep();
  const Daha& D = R.daha();
  const Heisenberg& H = N.heis();
  const int n = rs->rank();
  const Poly tm1 = Poly::t(2) - Poly(1);
  std::vector<CheckItem> out;
  auto vanishes = [&](const Expr& e) { return D.evaluate(e).is_zero(); };

  for (int i = 0; i <= n; ++i) {
    std::string si = std::to_string(i);
    out.push_back(run("hecke", "(T" + si + "-t)(T" + si + "+1)", [&](std::string&) {
      return vanishes(minus(L(Letter::T(i)), one().scaled(Poly::t(2))) * (L(Letter::T(i)) + one()));
    }));
    out.push_back(run("hecke", "(T" + si + "'-t)(T" + si + "'+1)", [&](std::string&) {
      return vanishes(minus(L(Letter::Tp(i)), one().scaled(Poly::t(2))) * (L(Letter::Tp(i)) + one()));
    }));
    for (int j = i + 1; j <= n; ++j) {
      int m = affine_braid_order(*rs, i, j);
      if (m == 0) continue;
      std::string name = "braid T" + si + ",T" + std::to_string(j);
      out.push_back(run("hecke", name, [&](std::string&) { return vanishes(braid(Letter::T, i, j, m)); }));
      out.push_back(run("hecke", name + " (primed)",
                        [&](std::string&) { return vanishes(braid(Letter::Tp, i, j, m)); }));
    }
    for (int r = 1; r <= n; ++r)
      for (int s : {1, -1}) {
        Weight nu = s * rs->fundamental_weight(r);
        std::string tag = "T" + si + ", X^" + to_string(nu, n);
        out.push_back(run("bernstein", tag, [&](std::string&) { return vanishes(bernstein(*rs, i, nu, tm1)); }));
        out.push_back(run("nil", "cross relation " + tag, [&](std::string&) {
          return zero(N.rho0_factored(bernstein(*rs, i, nu, Poly(-1))));
        }));
        if (i != 0)
          out.push_back(run("nil", "cross relation T" + si + "', Y^" + to_string(nu, n), [&](std::string&) {
            return zero(R.rho0_prime_factored(y_bernstein(*rs, i, nu)));
          }));
      }
    out.push_back(run("nil", "T" + si + "(T" + si + "+1) = 0", [&](std::string&) {
      HeisMat t = N.rho0(L(Letter::T(i)));
      return zero(H.mat_add(H.mat_mul(t, t), t));
    }));
    out.push_back(run("nil", "T" + si + "'(T" + si + "'+1) = 0", [&](std::string&) {
      HeisMat t = R.rho0_prime(L(Letter::Tp(i)));
      return zero(H.mat_add(H.mat_mul(t, t), t));
    }));
  }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      Weight a = rs->fundamental_weight(r), b = rs->fundamental_weight(s);
      out.push_back(run("Y", "Y^w" + std::to_string(r) + " Y^w" + std::to_string(s) + " commute",
                        [&](std::string&) {
                          return vanishes(minus(L(Letter::Y(a)) * L(Letter::Y(b)),
                                                L(Letter::Y(b)) * L(Letter::Y(a))));
                        }));
    }
  for (int r = 1; r <= n; ++r) {
    Weight w = rs->fundamental_weight(r);
    out.push_back(run("Y", "Y^w" + std::to_string(r) + " Y^-w" + std::to_string(r) + " = 1", [&](std::string&) {
      return vanishes(minus(L(Letter::Y(w)) * L(Letter::Y(-w)), one()));
    }));
    out.push_back(run("Y", "Y^w" + std::to_string(r) + " reduced-word independence", [&](std::string&) {
      return D.elt_Y(w, DescentChoice::smallest) == D.elt_Y(w, DescentChoice::largest);
    }));
  }
  return out;
}

std::vector<CheckItem> diagram_suite(std::shared_ptr<const RootSystem> rs) {
  std::vector<CheckItem> out;
  for (auto& d : NilDaha(rs).diagram_check()) out.push_back({"diagram", d.name, d.pass, d.detail});
  return out;
}

}  // namespace siflag
