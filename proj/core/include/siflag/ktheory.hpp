#pragma once

// The formal module K: free right H-module on the classes [O_w], w in W, with
// Z[q^{+-1}]-basis [O_{w~}(lambda)] for w~ in W_aff and lambda in P.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "siflag/nil_daha.hpp"

namespace siflag {

class KClass {
 public:
  using Key = std::pair<ExtAffineElt, Weight>;  // (w~, lambda)
  using Map = std::map<Key, QLaurent>;

  KClass() = default;
  /// [O_{w~}(lambda)]
  static KClass basis(const ExtAffineElt& w, const Weight& lambda = {});

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExtAffineElt& w, const Weight& lambda, const QLaurent& c);

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  KClass scaled(const QLaurent& c) const;
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  Map terms_;
};

/// One line of an expansion: d * [O_{v}(mu)] with v = w y^beta.
struct IpcTerm {
  ExtAffineElt v;
  Weight mu;
  QLaurent d;
};

struct SupportReport {
  std::size_t terms = 0;
  std::size_t below_translation = 0;  // terms with v <= y^lambda (affine part) in the Bruhat order
};

class KTheory {
 public:
  explicit KTheory(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  const NilDaha& nil() const { return nil_; }
  const WeylGroup& weyl() const { return nil_.weyl(); }

  /// Right action of H: [O_w~(l)] x^nu = [O_w~(l+nu)], [O_w~(l)] y^b = q^{<b,l>} [O_{w~ y^b}(l)].
  KClass heis_act(const KClass& c, const HeisElt& h) const;
  /// Coefficients h_w with c = sum_w [O_w] h_w, indexed like weyl().
  std::vector<HeisElt> to_free_form(const KClass& c) const;
  KClass from_free_form(const std::vector<HeisElt>& h) const;

  /// H . c through rho_0(H).
  KClass nil_act(const Expr& h, const KClass& c) const;
  /// Action of a precomputed rho_0 matrix.
  KClass matrix_act(const HeisMat& m, const KClass& c) const;
  /// D_i . c through the direct Demazure matrix.
  KClass demazure_act(int node, const KClass& c) const;

  /// e^lambda . [O_w~] = X^{-lambda} . [O_w~].
  KClass inverse_pieri_chevalley(const Weight& lambda, const ExtAffineElt& w) const;
  std::vector<IpcTerm> ipc_terms(const KClass& c) const;
  /// Empirical check of the coarse support pattern; reported, never asserted.
  SupportReport support_report(const Weight& lambda, const KClass& c) const;

  /// w y^beta -> w y^{-w0 beta} on every class.
  KClass overline(const KClass& c) const;

  std::string format(const KClass& c) const;

 private:
  void check_affine(const ExtAffineElt& w) const;

  std::shared_ptr<const RootSystem> rs_;
  NilDaha nil_;
};

}  // namespace siflag
