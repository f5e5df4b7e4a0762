#include "beztate/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace beztate {

namespace {

// Visits each strictly increasing j-subset of {0, ..., size-1}.
template <class Fn>
void for_each_combination(int size, int j, Fn&& fn) {
  if (j < 0 || j > size) return;
  std::vector<int> pos(static_cast<std::size_t>(j));
  for (int k = 0; k < j; ++k) pos[static_cast<std::size_t>(k)] = k;
  while (true) {
    fn(pos);
    int k = j - 1;
    while (k >= 0 && pos[static_cast<std::size_t>(k)] == size - j + k) --k;
    if (k < 0) return;
    ++pos[static_cast<std::size_t>(k)];
    for (int r = k + 1; r < j; ++r) pos[static_cast<std::size_t>(r)] = pos[static_cast<std::size_t>(r - 1)] + 1;
  }
}

}  // namespace

std::vector<WedgeIndex> wedge_basis(int N, int i) {
  std::vector<WedgeIndex> out;
  for_each_combination(N, i, [&](const std::vector<int>& pos) { out.push_back(WedgeIndex{pos}); });
  return out;
}

std::vector<SignedPair> split(const WedgeIndex& omega, int j) {
  const int size = static_cast<int>(omega.size());
  if (j < 0 || j > size) throw std::invalid_argument("split: j outside [0, |omega|]");
  std::vector<SignedPair> out;
  for_each_combination(size, j, [&](const std::vector<int>& pos) {
    SignedPair sp{{}, {}, 1};
    std::vector<bool> in_left(static_cast<std::size_t>(size), false);
    for (int p : pos) in_left[static_cast<std::size_t>(p)] = true;
    // omega is sorted, so a > b across the split means position(a) > position(b).
    int inversions = 0;
    int right_seen = 0;
    for (int p = 0; p < size; ++p) {
      const int value = omega.indices[static_cast<std::size_t>(p)];
      if (in_left[static_cast<std::size_t>(p)]) {
        sp.left.indices.push_back(value);
        inversions += right_seen;
      } else {
        sp.right.indices.push_back(value);
        ++right_seen;
      }
    }
    sp.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(sp));
  });
  return out;
}

std::optional<std::pair<WedgeIndex, int>> normalize_wedge(const std::vector<int>& indices) {
  std::vector<int> v = indices;
  int sign = 1;
  // Insertion sort; each adjacent swap flips the sign.
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t k = i; k > 0 && v[k - 1] >= v[k]; --k) {
      if (v[k - 1] == v[k]) return std::nullopt;
      std::swap(v[k - 1], v[k]);
      sign = -sign;
    }
  return std::make_pair(WedgeIndex{std::move(v)}, sign);
}

WedgeBasis::WedgeBasis(int N, int i) : N_(N), i_(i), wedges_(wedge_basis(N, i)) {
  for (std::size_t k = 0; k < wedges_.size(); ++k) index_.emplace(wedges_[k], k);
}

std::size_t WedgeBasis::index_of(const WedgeIndex& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument("wedge not in basis");
  return it->second;
}

}  // namespace beztate
