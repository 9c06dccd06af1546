#include "siflag/lattice.hpp"

#include <stdexcept>

namespace siflag {

Weight Weight::from(const std::vector<int>& coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxRank))
    throw std::invalid_argument("weight has more than 8 coordinates");
  Weight w;
  for (std::size_t i = 0; i < coords.size(); ++i) w.c[i] = coords[i];
  return w;
}

std::string to_string(const Weight& w, int rank) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  s += ']';
  return s;
}

std::vector<int> coords(const Weight& w, int rank) {
  return {w.c.begin(), w.c.begin() + rank};
}

}  // namespace siflag
