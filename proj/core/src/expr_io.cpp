#include "siflag/expr_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "siflag/error.hpp"

namespace siflag {

namespace {

class Cursor {
 public:
  Cursor(std::string_view src, std::size_t base = 0, std::string_view full = {})
      : src_(src), base_(base), full_(full.empty() ? src : full) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip_ws();
    if (src_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  bool at_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) neg = src_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large", start);
    long v = std::stol(std::string(src_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  /// Unsigned rational "n" or "n/d".
  mpq_class rational() {
    skip_ws();
    std::size_t start = pos_;
    long n = integer();
    mpq_class r(n);
    std::size_t save = pos_;
    if (accept('/')) {
      if (!at_number()) {
        pos_ = save;
        return r;
      }
      long d = integer();
      if (d == 0) fail("zero denominator", start);
      r = mpq_class(n, d);
      r.canonicalize();
    }
    return r;
  }

  /// Text between the current '[' and its matching ']', consuming both.
  std::pair<std::string_view, std::size_t> bracket() {
    expect('[');
    std::size_t start = pos_;
    std::size_t close = src_.find(']', start);
    if (close == std::string_view::npos) fail("missing ']'", start);
    pos_ = close + 1;
    return {src_.substr(start, close - start), start};
  }

  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = {}) const {
    std::size_t p = base_ + (at ? *at : pos_);
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < p && k < full_.size(); ++k) {
      if (full_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg, p);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t base_;
  std::string_view full_;
};

Weight weight_from(const RootSystem& rs, Cursor& c, std::string_view body) {
  const int n = rs.rank();
  bool symbolic = body.find_first_of("wa") != std::string_view::npos;
  if (!symbolic) {
    std::vector<long> v;
    if (!c.at_end()) {
      v.push_back(c.integer());
      while (c.accept(',')) v.push_back(c.integer());
    }
    if (!c.at_end()) c.fail("unexpected character in weight");
    if (v.size() == 1 && v[0] == 0) v.assign(n, 0);
    if (static_cast<int>(v.size()) != n)
      c.fail("weight needs " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()), 0);
    Weight w;
    for (int i = 0; i < n; ++i) w[i] = static_cast<int>(v[i]);
    return w;
  }
  // Sum of rational multiples of w_i and a_i; the total must lie in P.
  std::vector<mpq_class> acc(n);
  bool first = true;
  while (!c.at_end()) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    mpq_class coef = 1;
    if (c.at_number()) {
      coef = c.rational();
      c.accept('*');
    }
    std::size_t at = c.pos();
    std::string id = c.identifier();
    if (id != "w" && id != "a") c.fail("expected w<i> or a<i>", at);
    long node = c.integer();
    if (node < 1 || node > n) c.fail("node " + std::to_string(node) + " out of range for " + rs.name(), at);
    coef *= sign;
    if (id == "w") {
      acc[node - 1] += coef;
    } else {
      Weight a = rs.simple_root(static_cast<int>(node));
      for (int i = 0; i < n; ++i) acc[i] += coef * a[i];
    }
  }
  if (first) c.fail("empty weight");
  Weight w;
  for (int i = 0; i < n; ++i) {
    if (acc[i].get_den() != 1) c.fail("weight is not integral", 0);
    w[i] = static_cast<int>(acc[i].get_num().get_si());
  }
  return w;
}

class ExprParser {
 public:
  ExprParser(const RootSystem& rs, std::string_view src) : rs_(rs), src_(src), c_(src) {}

  Expr parse() {
    if (c_.at_end()) c_.fail("empty expression");
    Expr e = expr();
    if (!c_.at_end()) c_.fail("unexpected character '" + std::string(1, c_.peek()) + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    for (;;) {
      if (c_.accept('+'))
        e = e + term();
      else if (c_.accept('-'))
        e = e + term().scaled(Poly(-1));
      else
        return e;
    }
  }

  Expr term() {
    bool neg = c_.accept('-');
    Expr e = factor();
    while (c_.accept('*')) e = e * factor();
    return neg ? e.scaled(Poly(-1)) : e;
  }

  Expr scalar(const Poly& p) {
    Expr e{Word{}};
    return e.scaled(p);
  }

  // Exponent after '^': signed integer or a parenthesized rational.
  mpq_class exponent() {
    if (c_.accept('(')) {
      bool neg = c_.accept('-');
      mpq_class r = c_.rational();
      c_.expect(')');
      return neg ? mpq_class(-r) : r;
    }
    return mpq_class(c_.integer());
  }

  long scaled_exponent(const mpq_class& r, long scale, const char* what) {
    mpq_class s = r * scale;
    if (s.get_den() != 1) c_.fail(std::string("exponent of ") + what + " is too fine");
    return s.get_num().get_si();
  }

  Expr factor() {
    if (c_.accept('(')) {
      Expr e = expr();
      c_.expect(')');
      return e;
    }
    if (c_.at_number()) {
      mpq_class r = c_.rational();
      return scalar(Poly::constant(r));
    }
    c_.skip_ws();
    std::size_t at = c_.pos();
    std::string id = c_.identifier();
    if (id.empty()) c_.fail("expected a generator, scalar or '('");
    if (id == "q" || id == "t") {
      mpq_class r = 1;
      if (c_.accept('^')) r = exponent();
      if (id == "q") return scalar(Poly::q(static_cast<int>(scaled_exponent(r, rs_.q_scale(), "q"))));
      return scalar(Poly::t(static_cast<int>(scaled_exponent(r, 2, "t"))));
    }
    return Expr::letter(letter(id, at));
  }

  int node_index(std::size_t at) {
    auto [body, start] = c_.bracket();
    Cursor inner(body, start, src_);
    long i = inner.integer();
    if (!inner.at_end()) inner.fail("expected a node index");
    if (i < 0 || i > rs_.rank())
      c_.fail("generator index " + std::to_string(i) + " out of range for " + rs_.name(), at);
    return static_cast<int>(i);
  }

  Weight weight_arg() {
    auto [body, start] = c_.bracket();
    Cursor inner(body, start, src_);
    return weight_from(rs_, inner, body);
  }

  int delta_arg() {
    auto [body, start] = c_.bracket();
    Cursor inner(body, start, src_);
    bool neg = inner.accept('-');
    mpq_class r = inner.rational();
    if (!inner.at_end()) inner.fail("expected a rational");
    mpq_class k = r * rs_.e_const();
    if (k.get_den() != 1)
      inner.fail("delta multiple must be a multiple of 1/" + std::to_string(rs_.e_const()), 0);
    return static_cast<int>(k.get_num().get_si()) * (neg ? -1 : 1);
  }

  Letter letter(const std::string& id, std::size_t at) {
    static const std::map<std::string, Letter (*)(int)> indexed = {
        {"T", Letter::T},   {"Tinv", Letter::Tinv}, {"Tp", Letter::Tp},
        {"Tpinv", Letter::Tpinv}, {"D", Letter::D}, {"Dp", Letter::Dp},
    };
    Letter l;
    if (auto it = indexed.find(id); it != indexed.end()) {
      l = it->second(node_index(at));
    } else if (id == "X") {
      l = Letter::X(weight_arg());
    } else if (id == "Y") {
      l = Letter::Y(weight_arg());
    } else if (id == "Xd") {
      l = Letter::Xd(delta_arg());
    } else if (id == "Yd") {
      l = Letter::Yd(delta_arg());
    } else if (id == "pi") {
      int r = node_index(at);
      auto mn = rs_.minuscule_nodes();
      if (std::find(mn.begin(), mn.end(), r) == mn.end())
        c_.fail("pi[" + std::to_string(r) + "]: node is not minuscule in " + rs_.name(), at);
      l = Letter::Pi(r);
    } else {
      c_.fail("unknown generator '" + id + "'", at);
    }
    std::size_t save = c_.pos();
    if (c_.accept('^')) {
      if (!c_.accept("-1")) c_.fail("only '^-1' is supported");
      if (l.kind != LetterKind::Y) c_.fail("'^-1' is only allowed on Y letters", save);
      l.weight = -l.weight;
    }
    return l;
  }

  const RootSystem& rs_;
  std::string_view src_;
  Cursor c_;
};

std::string delta_string(int k, int e) {
  mpq_class r(k, e);
  r.canonicalize();
  return r.get_str();
}

}  // namespace

Expr parse_expr(const RootSystem& rs, std::string_view src) {
  return normalize(ExprParser(rs, src).parse());
}

Expr normalize(const Expr& e) {
  Expr r;
  for (const auto& t : e.terms) {
    auto it = std::find_if(r.terms.begin(), r.terms.end(),
                           [&](const Term& u) { return u.word == t.word; });
    if (it == r.terms.end())
      r.terms.push_back(t);
    else
      it->coeff += t.coeff;
  }
  std::erase_if(r.terms, [](const Term& t) { return t.coeff.is_zero(); });
  return r;
}

std::string print_letter(const RootSystem& rs, const Letter& l) {
  const int n = rs.rank();
  auto idx = [&](const char* name) { return std::string(name) + "[" + std::to_string(l.index) + "]"; };
  auto wt = [&](const char* name) {
    std::string s = to_string(l.weight, n);  // "[a,b]"
    return std::string(name) + s;
  };
  switch (l.kind) {
    case LetterKind::T: return idx("T");
    case LetterKind::Tinv: return idx("Tinv");
    case LetterKind::Tp: return idx("Tp");
    case LetterKind::Tpinv: return idx("Tpinv");
    case LetterKind::D: return idx("D");
    case LetterKind::Dp: return idx("Dp");
    case LetterKind::Pi: return idx("pi");
    case LetterKind::X: return wt("X");
    case LetterKind::Y: return wt("Y");
    case LetterKind::Xd: return "Xd[" + delta_string(l.index, rs.e_const()) + "]";
    case LetterKind::Yd: return "Yd[" + delta_string(l.index, rs.e_const()) + "]";
  }
  return "?";
}

std::string print_expr(const RootSystem& rs, const Expr& e) {
  Expr ne = normalize(e);
  if (ne.terms.empty()) return "0";
  std::string out;
  for (const auto& t : ne.terms) {
    std::string word;
    for (const auto& l : t.word) word += (word.empty() ? "" : "*") + print_letter(rs, l);
    std::string coef = t.coeff.format(rs.q_scale(), rs.rank());
    bool single = t.coeff.terms().size() == 1;
    bool neg = single && t.coeff.terms().begin()->second < 0;
    if (neg) coef = coef.substr(1);
    std::string body;
    if (word.empty())
      body = single ? coef : "(" + coef + ")";
    else if (coef == "1")
      body = word;
    else
      body = (single ? coef : "(" + coef + ")") + "*" + word;
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

Weight parse_weight(const RootSystem& rs, std::string_view src) {
  Cursor c(src);
  return weight_from(rs, c, src);
}

ExtAffineElt parse_ext_elt(const RootSystem& rs, std::string_view src) {
  Cursor c(src);
  ExtAffineElt g = rs.ext_identity();
  if (c.at_end()) c.fail("empty group element");
  do {
    c.skip_ws();
    std::size_t at = c.pos();
    std::string id = c.identifier();
    if (id == "e") continue;
    if (id == "s") {
      long i = c.integer();
      if (i < 0 || i > rs.rank())
        c.fail("reflection index " + std::to_string(i) + " out of range for " + rs.name(), at);
      g = rs.ext_mul(g, rs.ext_simple_reflection(static_cast<int>(i)));
    } else if (id == "y") {
      auto [body, start] = c.bracket();
      Cursor inner(body, start, src);
      g = rs.ext_mul(g, rs.translation(weight_from(rs, inner, body)));
    } else if (id == "pi") {
      auto [body, start] = c.bracket();
      Cursor inner(body, start, src);
      long r = inner.integer();
      if (!inner.at_end()) inner.fail("expected a node index");
      auto mn = rs.minuscule_nodes();
      if (std::find(mn.begin(), mn.end(), r) == mn.end())
        c.fail("pi[" + std::to_string(r) + "]: node is not minuscule in " + rs.name(), at);
      g = rs.ext_mul(g, rs.pi_element(static_cast<int>(r)));
    } else {
      c.fail("expected e, s<i>, y[...] or pi[r]", at);
    }
  } while (c.accept('*'));
  if (!c.at_end()) c.fail("unexpected character '" + std::string(1, c.peek()) + "'");
  return g;
}

}  // namespace siflag
