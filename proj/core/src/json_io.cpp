#include "siflag/json_io.hpp"

#include <json.hpp>

#include "siflag/error.hpp"
#include "golden_data.hpp"

namespace siflag::json {

using nlohmann::json;

namespace {

json weight_json(const Weight& w, int rank) {
  json a = json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w[i]);
  return a;
}

Weight weight_from(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) throw IoError("weight of wrong length");
  Weight w;
  for (int i = 0; i < rank; ++i) w[i] = j[i].get<int>();
  return w;
}

json order_json(const WeylGroup& W) {
  json a = json::array();
  for (std::size_t k = 0; k < W.size(); ++k) a.push_back(W.label(k));
  return a;
}

json heis_terms(const HeisElt& h, int rank) {
  json a = json::array();
  for (const auto& [key, c] : h.terms())
    for (const auto& [k, v] : c.terms())
      a.push_back({{"q", k}, {"x", weight_json(key.first, rank)}, {"y", weight_json(key.second, rank)},
                   {"c", v.get_str()}});
  return a;
}

HeisElt heis_from(const json& terms, HeisTag tag, int rank) {
  HeisElt h(tag);
  for (const auto& t : terms) {
    mpz_class c(t.at("c").get<std::string>());
    h.add_term(weight_from(t.at("x"), rank), weight_from(t.at("y"), rank),
               QLaurent::q_power(t.at("q").get<int>(), c));
  }
  return h;
}

HeisTag tag_from(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "H") return HeisTag::H;
  if (s == "H'") return HeisTag::Hp;
  throw IoError("unknown tag '" + s + "'");
}

json poly_json(const Poly& p, int rank) {
  json a = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t = {m.q, m.t, c.get_str()};
    for (int i = 0; i < rank; ++i) t.push_back(m.x[i]);
    a.push_back(std::move(t));
  }
  return a;
}

Poly poly_from(const json& j, int rank) {
  Poly p;
  for (const auto& t : j) {
    if (!t.is_array() || static_cast<int>(t.size()) != 3 + rank) throw IoError("bad polynomial term");
    Mono m{t[0].get<int>(), t[1].get<int>(), {}};
    for (int i = 0; i < rank; ++i) m.x[i] = t[3 + i].get<int>();
    p += Poly::monomial(m, parse_rational(t[2].get<std::string>()));
  }
  return p;
}

json parse_doc(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw IoError(std::string("unexpected JSON layout: ") + e.what());
  }
}

void check_group(const RootSystem& rs, const json& j) {
  if (j.contains("group") && j["group"].get<std::string>() != rs.name())
    throw IoError("document is for " + j["group"].get<std::string>() + ", expected " + rs.name());
}

}  // namespace

std::string heis_mat(const RootSystem& rs, const WeylGroup& W, const HeisMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(heis_terms(m.at(i, j), rs.rank()));
    rows.push_back(std::move(row));
  }
  json doc = {{"group", rs.name()}, {"order", order_json(W)}, {"tag", tag_name(m.tag)}, {"entries", rows}};
  return doc.dump(2);
}

std::string heis_elt(const RootSystem& rs, const HeisElt& h) {
  json doc = {{"group", rs.name()}, {"tag", tag_name(h.tag())}, {"terms", heis_terms(h, rs.rank())}};
  return doc.dump(2);
}

std::string op_mat(const RootSystem& rs, const WeylGroup& W, const OpMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) {
      json terms = json::array();
      for (const auto& [eta, f] : m.at(i, j).terms())
        terms.push_back({{"y", weight_json(eta, rs.rank())},
                         {"num", poly_json(f.numerator(), rs.rank())},
                         {"den", poly_json(f.denominator(), rs.rank())}});
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"group", rs.name()}, {"order", order_json(W)}, {"q_scale", rs.q_scale()},
              {"t_scale", 2},       {"entries", rows}};
  return doc.dump(2);
}

std::string ipc(const RootSystem& rs, const Weight& lambda, const ExtAffineElt& w, const KClass& c) {
  json terms = json::array();
  for (const auto& [key, d] : c.terms()) {
    json coeff = json::array();
    for (const auto& [k, v] : d.terms()) coeff.push_back({{"q", k}, {"c", v.get_str()}});
    terms.push_back({{"v", rs.format(key.first)},
                     {"beta", weight_json(key.first.beta, rs.rank())},
                     {"mu", weight_json(key.second, rs.rank())},
                     {"d", coeff}});
  }
  json doc = {{"group", rs.name()}, {"lambda", weight_json(lambda, rs.rank())}, {"w", rs.format(w)},
              {"terms", terms}};
  return doc.dump(2);
}

HeisMat parse_heis_mat(const RootSystem& rs, std::string_view text) {
  json j = parse_doc(text);
  return guarded([&] {
    check_group(rs, j);
    HeisTag tag = tag_from(j.at("tag"));
    const json& rows = j.at("entries");
    HeisMat m(tag, rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw IoError("matrix is not square");
      for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = heis_from(rows[r][c], tag, rs.rank());
    }
    return m;
  });
}

HeisElt parse_heis_elt(const RootSystem& rs, std::string_view text) {
  json j = parse_doc(text);
  return guarded([&] {
    check_group(rs, j);
    return heis_from(j.at("terms"), tag_from(j.at("tag")), rs.rank());
  });
}

OpMat parse_op_mat(const RootSystem& rs, std::string_view text) {
  json j = parse_doc(text);
  return guarded([&] {
    check_group(rs, j);
    if (j.at("q_scale").get<int>() != rs.q_scale() || j.at("t_scale").get<int>() != 2)
      throw IoError("scaling constants do not match");
    const json& rows = j.at("entries");
    OpMat m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows.size(); ++c)
        for (const auto& t : rows[r][c])
          m.at(r, c).add_term(weight_from(t.at("y"), rs.rank()),
                              FieldElt::fraction(poly_from(t.at("num"), rs.rank()),
                                                 poly_from(t.at("den"), rs.rank())));
    return m;
  });
}

std::vector<Golden> parse_goldens(std::string_view text) {
  json j = parse_doc(text);
  return guarded([&] {
    std::vector<Golden> out;
    for (const auto& g : j.at("goldens"))
      out.push_back({g.at("name").get<std::string>(), g.at("map").get<std::string>(),
                     g.at("elt").get<std::string>(), g.at("expected").dump()});
    return out;
  });
}

std::string_view builtin_goldens(std::string_view group) {
  if (group == "A1") return kGoldenA1;
  return {};
}

}  // namespace siflag::json
