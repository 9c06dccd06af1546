#pragma once

// q-Heisenberg smash products Z[q^{+-1}][A] x| B with x^a y^b = q^{<a,b>} y^b x^a,
// stored in x-before-y normal order. Two instances are used:
//   H  : A = P, B = Q
//   H' : A = Q, B = P

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "siflag/poly.hpp"
#include "siflag/root_system.hpp"

namespace siflag {

enum class HeisTag { H, Hp };

const char* tag_name(HeisTag tag);

class HeisElt {
 public:
  using Key = std::pair<Weight, Weight>;  // (x-exponent, y-exponent)
  using Map = std::map<Key, QLaurent>;

  explicit HeisElt(HeisTag tag = HeisTag::H) : tag_(tag) {}
  static HeisElt scalar(HeisTag tag, const QLaurent& c);
  static HeisElt one(HeisTag tag) { return scalar(tag, 1); }
  /// c x^a y^b.
  static HeisElt term(HeisTag tag, const Weight& a, const Weight& b, const QLaurent& c = 1);

  HeisTag tag() const { return tag_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Weight& a, const Weight& b, const QLaurent& c);

  HeisElt& operator+=(const HeisElt& o);
  HeisElt& operator-=(const HeisElt& o);
  friend HeisElt operator+(HeisElt a, const HeisElt& b) { return a += b; }
  friend HeisElt operator-(HeisElt a, const HeisElt& b) { return a -= b; }
  friend HeisElt operator-(HeisElt a);
  /// Scalar multiple (q is central).
  HeisElt scaled(const QLaurent& c) const;

  friend bool operator==(const HeisElt&, const HeisElt&) = default;

 private:
  HeisTag tag_;
  Map terms_;
};

/// Square matrix of HeisElt indexed by an enumerated Weyl group.
struct HeisMat {
  HeisTag tag = HeisTag::H;
  std::size_t n = 0;
  std::vector<HeisElt> entries;

  HeisMat() = default;
  HeisMat(HeisTag t, std::size_t size)
      : tag(t), n(size), entries(size * size, HeisElt(t)) {}
  static HeisMat identity(HeisTag t, std::size_t size);

  HeisElt& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const HeisElt& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  friend bool operator==(const HeisMat&, const HeisMat&) = default;
};

/// Operations that need the pairing of the ambient root system.
class Heisenberg {
 public:
  explicit Heisenberg(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& root_system() const { return rs_; }

  /// Throws AssertionFailure on tag mismatch.
  HeisElt mul(const HeisElt& a, const HeisElt& b) const;
  /// Asserts the lattice conditions of the tag (x in A, y in B).
  void check_membership(const HeisElt& h) const;

  /// q -> q^{-1}, x^lambda -> x^{-lambda}, y fixed (tag H).
  HeisElt star(const HeisElt& h) const;
  /// Anti-isomorphism H' -> H: x^beta -> q^{<beta,beta>/2} x^{-w0 beta} y^{w0 beta}, y^mu -> x^{w0 mu}.
  HeisElt tau(const HeisElt& h) const;

  HeisMat mat_mul(const HeisMat& a, const HeisMat& b) const;
  HeisMat mat_add(const HeisMat& a, const HeisMat& b) const;
  HeisMat mat_sub(const HeisMat& a, const HeisMat& b) const;
  HeisMat mat_scale(const HeisMat& a, const QLaurent& c) const;
  /// Entrywise tau followed by transpose.
  HeisMat mat_tau(const HeisMat& m) const;
  HeisMat mat_star(const HeisMat& m) const;

  std::string format(const HeisElt& h) const;

 private:
  const RootSystem& rs_;
};

}  // namespace siflag
