#include "siflag/weyl_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "siflag/error.hpp"

namespace siflag {

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t max_size)
    : rs_(std::move(rs)) {
  const RootSystem& R = *rs_;
  std::set<WeylElt> seen{R.identity()};
  std::vector<WeylElt> frontier{R.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= R.rank(); ++i) {
        WeylElt v = w * R.simple_reflection(i);
        if (seen.insert(v).second) {
          if (seen.size() > max_size)
            throw AssertionFailure("Weyl group of " + R.name() + " is too large to enumerate");
          next.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<int>, WeylElt>> tagged;
  for (const auto& w : seen) tagged.emplace_back(R.reduced_word(w), w);
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [word, w] : tagged) {
    index_.emplace(w, elts_.size());
    elts_.push_back(w);
    labels_.push_back(R.format(w));
    words_.push_back(std::move(word));
  }
  inv_.resize(elts_.size());
  for (std::size_t k = 0; k < elts_.size(); ++k) inv_[k] = index_of(R.inverse(elts_[k]));
}

std::size_t WeylGroup::index_of(const WeylElt& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw AssertionFailure("element not in the Weyl group");
  return it->second;
}

std::size_t WeylGroup::mul_index(std::size_t a, std::size_t b) const {
  return index_of(elts_[a] * elts_[b]);
}

}  // namespace siflag
