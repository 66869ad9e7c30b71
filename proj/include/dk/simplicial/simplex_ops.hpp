#pragma once

#include <utility>
#include <vector>

namespace dk::simplicial {

/// Order-preserving map [m] -> [n], stored as its list of values.
struct MonotoneMap {
  std::vector<int> values;
  int codomain = 0;

  int domain() const { return static_cast<int>(values.size()) - 1; }
  bool is_identity() const;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// delta^i : [n-1] -> [n], skipping i.
MonotoneMap coface(int n, int i);
/// sigma^j : [n+1] -> [n], hitting j twice.
MonotoneMap codegeneracy(int n, int j);
/// (f o g)(t) = f(g(t)).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);
/// All monotone maps [m] -> [n], lexicographic by values.
std::vector<MonotoneMap> enumerate_monotone(int m, int n);

/// Monotone surjection [n] ->> [k], encoded by the sorted positions t with
/// s(t) = s(t+1). The operator it induces on a simplicial object is
/// s_{j_r} ... s_{j_1} for repeats j_1 < ... < j_r.
struct Surjection {
  int source = 0;
  int target = 0;
  std::vector<int> repeats;

  static Surjection identity(int n) { return {n, n, {}}; }
  /// Throws PreconditionError if the map is not surjective.
  static Surjection from_map(const MonotoneMap& m);
  MonotoneMap to_map() const;
  bool is_identity() const { return repeats.empty(); }

  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend auto operator<=>(const Surjection&, const Surjection&) = default;
};

/// All surjections [n] ->> [k], ordered lexicographically by repeat list.
std::vector<Surjection> enumerate_surjections(int n, int k);

/// Epi-mono factorization m = inclusion o surjection; the second component is
/// the image of m (the inclusion [j] -> [n]).
std::pair<Surjection, std::vector<int>> epi_mono(const MonotoneMap& m);

/// (p,q)-shuffle: {0..p+q-1} split into an ascending p-set and q-set. The
/// sign is the parity of the permutation listing the p-set then the q-set.
struct Shuffle {
  int p = 0;
  int q = 0;
  std::vector<int> first;
  std::vector<int> second;
  int sign = 1;
};

std::vector<Shuffle> enumerate_shuffles(int p, int q);

long binomial(int n, int k);

}  // namespace dk::simplicial
