// siflag: command-line front end.
//
//   siflag verify    --type A1
//   siflag relations --type A2
//   siflag matrix    --type A1 --elt "Y[w1]" --limit
//   siflag ipc       --type A2 --lambda "1,0" --w "s1*y[1,1]"
//   siflag sph       --type A1 --elt "X[w1] + X[-w1]"
//   siflag toda      --type A1 --elt "Y[w1] + Y[-w1]"
//
// Exit codes: 0 ok, 1 parse, 2 limit, 3 assertion, 4 I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "siflag/error.hpp"
#include "siflag/expr_io.hpp"
#include "siflag/json_io.hpp"
#include "siflag/ktheory.hpp"
#include "siflag/verify.hpp"

using namespace siflag;

namespace {

struct Options {
  std::string type;
  std::string elt;
  std::string lambda;
  std::string w = "e";
  bool limit = false;
  std::string format = "text";
  std::string out;
  std::string goldens;
};

std::string quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    if (c == '\n') {
      r += "\\n";
      continue;
    }
    r += c;
  }
  return r + "\"";
}

std::string text_matrix(const WeylGroup& W, const HeisMat& m, const Heisenberg& H) {
  std::ostringstream os;
  os << "tag " << tag_name(m.tag) << ", order";
  for (std::size_t k = 0; k < W.size(); ++k) os << ' ' << W.label(k);
  os << '\n';
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (!m.at(i, j).is_zero())
        os << "(" << W.label(i) << "," << W.label(j) << ")  " << H.format(m.at(i, j)) << '\n';
  return os.str();
}

std::string text_op_matrix(const RootSystem& rs, const WeylGroup& W, const OpMat& m) {
  std::ostringstream os;
  os << "order";
  for (std::size_t k = 0; k < W.size(); ++k) os << ' ' << W.label(k);
  os << '\n';
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      const OpEntry& e = m.at(i, j);
      if (e.is_zero()) continue;
      os << "(" << W.label(i) << "," << W.label(j) << ")  ";
      bool first = true;
      for (const auto& [eta, f] : e.terms()) {
        os << (first ? "" : " + ") << "[" << f.format(rs.q_scale(), rs.rank()) << "]";
        if (!eta.is_zero()) os << "*y" << to_string(eta, rs.rank());
        first = false;
      }
      os << '\n';
    }
  return os.str();
}

std::string report(const std::vector<CheckItem>& items, const Options& o, const std::string& group) {
  std::size_t failed = 0;
  for (const auto& it : items) failed += it.pass ? 0 : 1;
  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"group\": " << quote(group) << ",\n  \"passed\": " << items.size() - failed
       << ",\n  \"failed\": " << failed << ",\n  \"checks\": [";
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto& it = items[k];
      os << (k ? "," : "") << "\n    {\"suite\": " << quote(it.suite) << ", \"name\": " << quote(it.name)
         << ", \"pass\": " << (it.pass ? "true" : "false");
      if (!it.detail.empty()) os << ", \"detail\": " << quote(it.detail);
      os << "}";
    }
    os << "\n  ]\n}\n";
  } else {
    for (const auto& it : items) {
      os << (it.pass ? "PASS " : "FAIL ") << it.suite << ": " << it.name;
      if (!it.detail.empty()) os << "  -- " << it.detail;
      os << '\n';
    }
    os << group << ": " << items.size() - failed << " passed, " << failed << " failed\n";
  }
  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw IoError("cannot open '" + o.out + "' for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw IoError("write to '" + o.out + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::shared_ptr<const RootSystem> root_system(const Options& o) {
  return std::make_shared<const RootSystem>(RootSystem::from_name(o.type));
}

int cmd_verify(const Options& o, bool relations_only) {
  auto rs = root_system(o);
  std::vector<CheckItem> items;
  auto add = [&](std::vector<CheckItem> v) { items.insert(items.end(), v.begin(), v.end()); };
  if (!relations_only) {
    std::string text = o.goldens.empty() ? std::string(json::builtin_goldens(rs->name())) : read_file(o.goldens);
    add(check_goldens(rs, text));
    add(check_closed_forms(rs));
    add(diagram_suite(rs));
  }
  add(relation_suite(rs));
  emit(o, report(items, o, rs->name()));
  for (const auto& it : items)
    if (!it.pass) return static_cast<int>(ErrorCode::assertion);
  return 0;
}

int cmd_matrix(const Options& o) {
  auto rs = root_system(o);
  NilDaha N(rs);
  const MatrixRep& R = N.matrix_rep();
  Expr e = parse_expr(*rs, o.elt);
  bool primed = e.all_primed();
  if (!primed && !e.all_plain()) throw ParseError("expression mixes primed and unprimed generators");
  if (o.limit) {
    HeisMat m = primed ? R.rho0_prime(e) : N.rho0(e);
    emit(o, o.format == "json" ? json::heis_mat(*rs, N.weyl(), m) : text_matrix(N.weyl(), m, N.heis()));
  } else {
    OpMat m = R.kappa(R.rho_prime(e));
    emit(o, o.format == "json" ? json::op_mat(*rs, N.weyl(), m) : text_op_matrix(*rs, N.weyl(), m));
  }
  return 0;
}

int cmd_ipc(const Options& o) {
  auto rs = root_system(o);
  KTheory K(rs);
  Weight lambda = parse_weight(*rs, o.lambda);
  ExtAffineElt w = parse_ext_elt(*rs, o.w);
  KClass c = K.inverse_pieri_chevalley(lambda, w);
  if (o.format == "json") {
    emit(o, json::ipc(*rs, lambda, w, c));
    return 0;
  }
  std::ostringstream os;
  os << "e^" << to_string(lambda, rs->rank()) << " . [O_" << rs->format(w) << "]\n";
  os << "v\tmu\td\n";
  for (const auto& t : K.ipc_terms(c))
    os << rs->format(t.v) << '\t' << to_string(t.mu, rs->rank()) << '\t' << t.d.format() << '\n';
  SupportReport sr = K.support_report(lambda, c);
  os << sr.terms << " terms; " << sr.below_translation << " with v below the affine part of y^lambda\n";
  emit(o, os.str());
  return 0;
}

int cmd_projection(const Options& o, bool toda) {
  auto rs = root_system(o);
  NilDaha N(rs);
  Expr e = parse_expr(*rs, o.elt);
  HeisElt h = toda ? N.qtoda(e) : N.rho0_sph(e);
  emit(o, o.format == "json" ? json::heis_elt(*rs, h) : N.heis().format(h));
  return 0;
}

void fail_report(const Options& o, int code, const std::string& kind, const std::string& msg) {
  if (o.format == "json")
    std::cerr << "{\"error\": " << quote(kind) << ", \"code\": " << code << ", \"message\": " << quote(msg)
              << "}\n";
  else
    std::cerr << "error (" << kind << "): " << msg << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nil-DAHA matrix realizations and inverse Pieri-Chevalley expansions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Root system, e.g. A1, A2, D4")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write output to FILE");
  };
  auto* verify = app.add_subcommand("verify", "Golden matrices, closed forms, diagram and relation suites");
  common(verify);
  verify->add_option("--goldens", o.goldens, "Golden JSON file (defaults to the built-in set)");
  auto* relations = app.add_subcommand("relations", "Defining and nil relation suites");
  common(relations);
  auto* matrix = app.add_subcommand("matrix", "kappa(rho'(H)), or its t -> 0 limit with --limit");
  common(matrix);
  matrix->add_option("--elt", o.elt, "Element expression")->required();
  matrix->add_flag("--limit", o.limit, "Take the t -> 0 limit (rho_0' or rho_0)");
  auto* ipc = app.add_subcommand("ipc", "Inverse Pieri-Chevalley expansion of e^lambda [O_w]");
  common(ipc);
  ipc->add_option("--lambda", o.lambda, "Weight, e.g. \"1,0\" or \"w1 - w2\"")->required();
  ipc->add_option("--w", o.w, "Element of W_aff, e.g. \"s1*y[1,1]\"");
  auto* sph = app.add_subcommand("sph", "Spherical image of a W-invariant polynomial in X");
  common(sph);
  sph->add_option("--elt", o.elt, "Element expression")->required();
  auto* toda = app.add_subcommand("toda", "q-Toda operator of a W-invariant polynomial in Y");
  common(toda);
  toda->add_option("--elt", o.elt, "Element expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorCode::parse);
  }

  try {
    if (*verify) return cmd_verify(o, false);
    if (*relations) return cmd_verify(o, true);
    if (*matrix) return cmd_matrix(o);
    if (*ipc) return cmd_ipc(o);
    if (*sph) return cmd_projection(o, false);
    if (*toda) return cmd_projection(o, true);
  } catch (const ParseError& e) {
    fail_report(o, 1, "parse", e.what());
    return 1;
  } catch (const LimitError& e) {
    fail_report(o, 2, "limit", e.what());
    return 2;
  } catch (const AssertionFailure& e) {
    fail_report(o, 3, "assertion", e.what());
    return 3;
  } catch (const IoError& e) {
    fail_report(o, 4, "io", e.what());
    return 4;
  }
  return 0;
}
