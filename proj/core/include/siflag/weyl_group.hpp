#pragma once

// Enumerated finite Weyl group with the fixed row/column order used for every
// W x W matrix: by length, then lexicographically by lex-minimal reduced word.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "siflag/root_system.hpp"

namespace siflag {

class WeylGroup {
 public:
  /// Throws AssertionFailure when |W| exceeds max_size.
  explicit WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t max_size = 50000);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  std::size_t size() const { return elts_.size(); }
  const WeylElt& operator[](std::size_t k) const { return elts_[k]; }
  const std::vector<WeylElt>& elements() const { return elts_; }
  std::size_t index_of(const WeylElt& w) const;
  const std::vector<int>& word(std::size_t k) const { return words_[k]; }
  /// "e", "s1", "s1*s2", ...
  const std::string& label(std::size_t k) const { return labels_[k]; }
  std::size_t identity_index() const { return 0; }
  /// index_of(inverse(elements()[k])).
  std::size_t inverse_index(std::size_t k) const { return inv_[k]; }
  /// index_of(elements()[a] * elements()[b]).
  std::size_t mul_index(std::size_t a, std::size_t b) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElt> elts_;
  std::vector<std::vector<int>> words_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inv_;
  std::map<WeylElt, std::size_t> index_;
};

}  // namespace siflag
