#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace siflag {

inline constexpr int kMaxRank = 8;

/// A lattice vector in fundamental-weight coordinates: entry i is <alpha_{i+1}^vee, lambda>.
/// Coordinates beyond the rank of the ambient root system are always zero.
struct Weight {
  std::array<int, kMaxRank> c{};

  static Weight zero() { return {}; }
  static Weight unit(int index) {
    Weight w;
    w.c[static_cast<std::size_t>(index)] = 1;
    return w;
  }
  static Weight from(const std::vector<int>& coords);

  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (int v : c)
      if (v != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (int& v : c) v *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.c) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// "[c1,c2,...]" using the first `rank` coordinates.
std::string to_string(const Weight& w, int rank);
std::vector<int> coords(const Weight& w, int rank);

}  // namespace siflag
