#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace beztate {

/// Basis element e_{i_1} ^ ... ^ e_{i_k} of an exterior power, with
/// i_1 < ... < i_k indexing an ordered basis of W (or of a subspace U).
struct WedgeIndex {
  std::vector<int> indices;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }

  friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
  friend auto operator<=>(const WedgeIndex&, const WedgeIndex&) = default;
};

/// One term of the (j, i-j) decomposition of a wedge:
/// omega = sign * left ^ right.
struct SignedPair {
  WedgeIndex left;
  WedgeIndex right;
  int sign;
};

/// All C(N, i) wedges of size i in lexicographic order; empty when i is
/// outside [0, N].
std::vector<WedgeIndex> wedge_basis(int N, int i);

/// Every way of writing omega as sign * left ^ right with |left| = j.
/// The sign is (-1)^{#{(a, b) in left x right : a > b}}.
std::vector<SignedPair> split(const WedgeIndex& omega, int j);

/// Sorts an unordered index tuple into a wedge, returning the sign of the
/// sorting permutation, or nullopt when an index repeats.
std::optional<std::pair<WedgeIndex, int>> normalize_wedge(const std::vector<int>& indices);

/// Lexicographic wedge basis of a fixed exterior power with index lookup.
class WedgeBasis {
 public:
  WedgeBasis(int N, int i);

  int ambient_dim() const { return N_; }
  int power() const { return i_; }
  std::size_t size() const { return wedges_.size(); }
  const WedgeIndex& operator[](std::size_t k) const { return wedges_[k]; }
  const std::vector<WedgeIndex>& wedges() const { return wedges_; }
  std::size_t index_of(const WedgeIndex& w) const;

 private:
  int N_;
  int i_;
  std::vector<WedgeIndex> wedges_;
  std::map<WedgeIndex, std::size_t> index_;
};

}  // namespace beztate
