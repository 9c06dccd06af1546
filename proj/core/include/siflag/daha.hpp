#pragma once

// DAHA words and their image in k(P) x| W_ext (the polynomial representation).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "siflag/field.hpp"
#include "siflag/poly.hpp"
#include "siflag/root_system.hpp"

namespace siflag {

enum class LetterKind {
  T,      // T_i
  Tinv,   // t T_i^{-1} = T_i - (t-1)
  D,      // T_i + 1
  X,      // X^nu
  Xd,     // X^{k delta / e}
  Pi,     // pi_r
  Tp,     // T_i'
  Tpinv,  // t T_i'^{-1}
  Dp,     // T_i' + 1
  Y,      // Y^nu
  Yd,     // Y^{k delta / e} = X^{-k delta / e}
};

struct Letter {
  LetterKind kind = LetterKind::T;
  int index = 0;  // node for T/Tinv/D/Tp/Tpinv/Dp/Pi; k (units of 1/e) for Xd/Yd
  Weight weight;  // nu for X/Y

  static Letter T(int i) { return {LetterKind::T, i, {}}; }
  static Letter Tinv(int i) { return {LetterKind::Tinv, i, {}}; }
  static Letter D(int i) { return {LetterKind::D, i, {}}; }
  static Letter X(const Weight& nu) { return {LetterKind::X, 0, nu}; }
  static Letter Xd(int k) { return {LetterKind::Xd, k, {}}; }
  static Letter Pi(int r) { return {LetterKind::Pi, r, {}}; }
  static Letter Tp(int i) { return {LetterKind::Tp, i, {}}; }
  static Letter Tpinv(int i) { return {LetterKind::Tpinv, i, {}}; }
  static Letter Dp(int i) { return {LetterKind::Dp, i, {}}; }
  static Letter Y(const Weight& nu) { return {LetterKind::Y, 0, nu}; }
  static Letter Yd(int k) { return {LetterKind::Yd, k, {}}; }

  bool is_primed() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Linear combination of words with coefficients in Q[q^{+-1/(2e)}, t^{+-1/2}]
/// (x-free Poly scalars).
struct Term {
  Poly coeff;
  Word word;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Expr {
  std::vector<Term> terms;

  Expr() = default;
  explicit Expr(Word w) { terms.push_back({Poly(1), std::move(w)}); }
  static Expr letter(const Letter& l) { return Expr(Word{l}); }

  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator+(Expr a, const Expr& b);
  Expr scaled(const Poly& c) const;
  bool all_plain() const;
  bool all_primed() const;
  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Element of k(P) x| W_ext: sum of f (x) g.
class DiffReflOp {
 public:
  using Map = std::map<ExtAffineElt, FieldElt>;

  DiffReflOp() = default;
  static DiffReflOp identity(const RootSystem& rs);
  static DiffReflOp term(const FieldElt& f, const ExtAffineElt& g);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExtAffineElt& g, const FieldElt& f);

  DiffReflOp& operator+=(const DiffReflOp& o);
  DiffReflOp& operator-=(const DiffReflOp& o);
  friend DiffReflOp operator+(DiffReflOp a, const DiffReflOp& b) { return a += b; }
  friend DiffReflOp operator-(DiffReflOp a, const DiffReflOp& b) { return a -= b; }
  DiffReflOp scaled(const FieldElt& c) const;
  friend bool operator==(const DiffReflOp& a, const DiffReflOp& b);

 private:
  Map terms_;
};

/// Generators and evaluation in the polynomial representation.
class Daha {
 public:
  explicit Daha(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }

  // ---- action of W_ext on k(P) ----------------------------------------
  /// Monomial map of g: x^mu -> q^{-<beta,mu>} x^{w mu}.
  Mono act(const ExtAffineElt& g, const Mono& m) const;
  FieldElt act(const ExtAffineElt& g, const FieldElt& f) const;
  Poly act(const ExtAffineElt& g, const Poly& f) const;

  DiffReflOp mul(const DiffReflOp& a, const DiffReflOp& b) const;
  /// Apply the operator to a function.
  FieldElt apply(const DiffReflOp& op, const FieldElt& f) const;

  // ---- generators --------------------------------------------------------
  /// x^{alpha_i}; for i = 0 this is q x^{-theta}.
  Poly x_alpha(int node) const;
  DiffReflOp gen_T(int node) const;
  DiffReflOp gen_Tinv(int node) const;
  DiffReflOp gen_X(const Weight& nu) const;
  /// X^{k delta / e} = q^{k/e}.
  DiffReflOp gen_Xdelta(int k) const;
  DiffReflOp gen_pi(int r) const;
  /// T_0' = X^{-alpha_0} t T_0^{-1}; T_i' = T_i otherwise.
  DiffReflOp gen_Tp(int node) const;
  DiffReflOp gen_Tpinv(int node) const;
  /// Y^nu via a reduced expression of y^nu and its epsilon signs.
  DiffReflOp elt_Y(const Weight& nu, DescentChoice choice = DescentChoice::smallest) const;
  /// Y^nu = Y^{nu_+} (Y^{nu_-})^{-1} with nu_+- the coordinatewise positive/negative parts.
  DiffReflOp elt_Y_split(const Weight& nu) const;

  DiffReflOp letter(const Letter& l) const;
  DiffReflOp evaluate(const Word& w) const;
  DiffReflOp evaluate(const Expr& e) const;

  /// Scalar Poly (no x) lifted to an operator.
  DiffReflOp scalar(const Poly& c) const;

  // ---- symmetries at the word level --------------------------------------
  /// tau_+ on plain words.
  Expr tau_plus(const Expr& e) const;
  /// The anti-isomorphism phi: plain -> primed (word reversal).
  Expr phi(const Expr& e) const;
  /// Inverse of phi: primed -> plain.
  Expr phi_inverse(const Expr& e) const;

  /// Number of 1/(2e) units in q^{k/e}.
  int q_units_per_e() const { return 2; }

 private:
  void check_node(int node) const;

  DiffReflOp compute_T(int node) const;
  DiffReflOp compute_Y(const Weight& nu, DescentChoice choice) const;

  std::shared_ptr<const RootSystem> rs_;
  int q2e_;  // 2e
  // Generator caches; Daha is not meant to be shared across threads.
  mutable std::map<int, DiffReflOp> t_cache_;
  mutable std::map<std::pair<Weight, int>, DiffReflOp> y_cache_;
};

}  // namespace siflag
