#pragma once

// Simply-laced root data, the finite Weyl group and the (extended) affine Weyl
// group acting on level-zero affine weights. Under the simply-laced
// identification alpha = alpha^vee a single lattice type serves for P and P^vee.
//
// Node numbering follows the usual Dynkin labels: finite nodes are 1..rank and
// the affine node is 0. Weight coordinate k corresponds to node k+1.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "siflag/lattice.hpp"

namespace siflag {

enum class CartanType { A, D, E };

/// Element of the finite Weyl group, stored as its matrix in fundamental-weight
/// coordinates (column j is the image of omega_j).
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(int rank);

  int rank() const { return rank_; }
  int entry(int row, int col) const {
    return m_[static_cast<std::size_t>(row * kMaxRank + col)];
  }
  Weight apply(const Weight& lambda) const;
  bool is_identity() const;
  /// Row-major entries of the leading rank x rank block.
  std::vector<int> entries() const;

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
  friend bool operator==(const WeylElt&, const WeylElt&) = default;
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;

 private:
  friend class RootSystem;
  void set(int row, int col, int v) {
    m_[static_cast<std::size_t>(row * kMaxRank + col)] = static_cast<std::int16_t>(v);
  }

  int rank_ = 0;
  std::array<std::int16_t, kMaxRank * kMaxRank> m_{};
};

/// w * y^beta in W_ext = W |x P. Elements of W_aff are those with beta in Q.
struct ExtAffineElt {
  WeylElt w;
  Weight beta;

  friend bool operator==(const ExtAffineElt&, const ExtAffineElt&) = default;
  friend auto operator<=>(const ExtAffineElt&, const ExtAffineElt&) = default;
};

/// alpha + level * delta.
struct AffineRoot {
  Weight alpha;
  int level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Reduced factorisation y^nu = pi * s_{i_1} ... s_{i_l}.
struct TranslationWord {
  ExtAffineElt pi;
  std::vector<int> word;
};

enum class DescentChoice { smallest, largest };

class RootSystem {
 public:
  static RootSystem build(CartanType kind, int rank);
  /// Accepts "A1", "A2", ..., "D4", ..., "E6", "E7", "E8" (case-insensitive letter).
  static RootSystem from_name(std::string_view name);

  CartanType kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;

  int cartan(int i, int j) const { return cartan_[idx(i - 1, j - 1)]; }
  Weight simple_root(int node) const;
  Weight fundamental_weight(int node) const { return Weight::unit(node - 1); }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const Weight& theta() const { return theta_; }
  const Weight& rho() const { return rho_; }
  const WeylElt& w0() const { return w0_; }
  /// Minimal e >= 1 with e<P,P> contained in 2Z.
  int e_const() const { return e_const_; }
  /// Scale used for stored q-exponents: one unit is q^{1/(2e)}.
  int q_scale() const { return 2 * e_const_; }
  std::vector<int> minuscule_nodes() const;

  // ---- pairings -------------------------------------------------------
  mpq_class pairing(const Weight& a, const Weight& b) const;
  /// scale * <a,b>; throws AssertionFailure if not an integer.
  long pairing_scaled(const Weight& a, const Weight& b, long scale) const;
  /// <a,b>; throws AssertionFailure if not an integer.
  int pairing_int(const Weight& a, const Weight& b) const {
    return static_cast<int>(pairing_scaled(a, b, 1));
  }
  /// Gram entry <omega_i, omega_j> for nodes i, j.
  mpq_class gram(int i, int j) const;

  /// Coordinates in the simple-root basis, if lambda lies in Q.
  std::optional<std::vector<int>> root_coords(const Weight& lambda) const;
  bool in_root_lattice(const Weight& lambda) const { return root_coords(lambda).has_value(); }
  /// <beta, rho> for beta in Q (the height for roots).
  int height(const Weight& beta) const;
  bool is_root(const Weight& lambda) const;
  bool is_positive_root(const Weight& root) const { return height(root) > 0; }
  bool is_dominant(const Weight& lambda) const;

  // ---- finite Weyl group ------------------------------------------------
  WeylElt identity() const { return WeylElt::identity(rank_); }
  WeylElt simple_reflection(int node) const;
  WeylElt reflection(const Weight& root) const;
  WeylElt from_word(const std::vector<int>& word) const;
  WeylElt inverse(const WeylElt& w) const;
  Weight reflect(int node, const Weight& lambda) const;
  Weight reflect_by(const Weight& root, const Weight& lambda) const;

  int length(const WeylElt& w) const;
  /// w s_i < w.
  bool is_right_descent(const WeylElt& w, int node) const;
  /// s_i w < w.
  bool is_left_descent(const WeylElt& w, int node) const;
  /// Lexicographically minimal reduced word.
  std::vector<int> reduced_word(const WeylElt& w) const;
  bool bruhat_le(const WeylElt& v, const WeylElt& w) const;
  /// If w is a reflection s_alpha, returns the positive root alpha.
  std::optional<Weight> reflection_root(const WeylElt& w) const;

  // ---- extended affine Weyl group --------------------------------------
  ExtAffineElt ext_identity() const { return {identity(), Weight::zero()}; }
  ExtAffineElt translation(const Weight& beta) const { return {identity(), beta}; }
  ExtAffineElt ext_finite(const WeylElt& w) const { return {w, Weight::zero()}; }
  /// s_i for i in I_aff; s_0 = s_theta y^{-theta}.
  ExtAffineElt ext_simple_reflection(int node) const;
  ExtAffineElt ext_mul(const ExtAffineElt& a, const ExtAffineElt& b) const;
  ExtAffineElt ext_inverse(const ExtAffineElt& a) const;
  ExtAffineElt ext_from_word(const std::vector<int>& affine_word) const;
  /// pi_r = y^{omega_r} u_r^{-1} for minuscule r.
  ExtAffineElt pi_element(int node) const;
  bool in_affine_weyl(const ExtAffineElt& g) const { return in_root_lattice(g.beta); }

  AffineRoot affine_simple_root(int node) const;
  /// w y^beta (mu + k delta) = w(mu) + (k - <beta,mu>) delta; <beta,mu> must be integral.
  AffineRoot affine_act(const ExtAffineElt& g, const AffineRoot& r) const;
  /// k > 0, or k = 0 and alpha > 0.
  bool is_affine_positive(const AffineRoot& r) const;
  /// alpha in R_+ (the level is ignored).
  bool is_semiinfinite_positive(const AffineRoot& r) const { return is_positive_root(r.alpha); }

  /// Coxeter length on W_ext (number of positive affine roots sent negative).
  int ext_length(const ExtAffineElt& g) const;
  bool is_ext_right_descent(const ExtAffineElt& g, int node) const;
  /// Reduced word of g: g = pi * s_{i_1} ... s_{i_l} with pi of length zero.
  TranslationWord ext_reduced_word(const ExtAffineElt& g,
                                   DescentChoice choice = DescentChoice::smallest) const;
  TranslationWord translation_word(const Weight& nu,
                                   DescentChoice choice = DescentChoice::smallest) const {
    return ext_reduced_word(translation(nu), choice);
  }
  /// +1 where pi s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) is semi-infinite negative, else -1.
  /// Throws ParseError when the expression is not reduced.
  std::vector<int> epsilon_signs(const ExtAffineElt& pi, const std::vector<int>& word) const;
  /// Usual Bruhat order on W_ext (same Pi-component, subword order on the W_aff part).
  bool ext_bruhat_le(const ExtAffineElt& v, const ExtAffineElt& w) const;

  /// l(w) + <beta, 2 rho>; requires beta in Q.
  int semiinfinite_length(const ExtAffineElt& g) const;
  /// True iff v is covered by w in the semi-infinite order: v = s_b w for a
  /// positive real affine root b with w^{-1}(b) semi-infinite negative and
  /// l_{inf/2}(v) = l_{inf/2}(w) - 1.
  bool semiinfinite_cover(const ExtAffineElt& w, const ExtAffineElt& v) const;
  /// s_i w < w in the semi-infinite order (i in I_aff).
  bool semiinfinite_descends(int node, const ExtAffineElt& w) const;

  /// Element of W_aff written like "s1*s2*y[1,-1]" ("e" for the identity).
  std::string format(const ExtAffineElt& g) const;
  std::string format(const WeylElt& w) const;

 private:
  RootSystem() = default;
  static std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * kMaxRank + j); }

  CartanType kind_ = CartanType::A;
  int rank_ = 0;
  std::array<int, kMaxRank * kMaxRank> cartan_{};
  // C^{-1} = adj_ / det_.
  std::array<long, kMaxRank * kMaxRank> adj_{};
  long det_ = 1;
  std::vector<Weight> positive_roots_;
  Weight theta_;
  Weight rho_;
  WeylElt w0_;
  int e_const_ = 1;
};

}  // namespace siflag
