#include "dk/simplicial/simplex_ops.hpp"

#include <functional>

#include "dk/error.hpp"

namespace dk::simplicial {

bool MonotoneMap::is_identity() const {
  if (domain() != codomain) return false;
  for (int t = 0; t <= codomain; ++t)
    if (values[static_cast<std::size_t>(t)] != t) return false;
  return true;
}

MonotoneMap coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw PreconditionError("coface index out of range");
  MonotoneMap m{{}, n};
  for (int t = 0; t < n; ++t) m.values.push_back(t < i ? t : t + 1);
  return m;
}

MonotoneMap codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw PreconditionError("codegeneracy index out of range");
  MonotoneMap m{{}, n};
  for (int t = 0; t <= n + 1; ++t) m.values.push_back(t <= j ? t : t - 1);
  return m;
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.codomain != f.domain()) throw PreconditionError("monotone maps not composable");
  MonotoneMap h{{}, f.codomain};
  for (int v : g.values) h.values.push_back(f.values[static_cast<std::size_t>(v)]);
  return h;
}

std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  MonotoneMap cur{{}, n};
  std::function<void(int)> rec = [&](int lo) {
    if (cur.domain() == m) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.values.push_back(v);
      rec(v);
      cur.values.pop_back();
    }
  };
  if (m >= 0 && n >= 0) rec(0);
  return out;
}

Surjection Surjection::from_map(const MonotoneMap& m) {
  Surjection s{m.domain(), m.codomain, {}};
  if (m.values.empty() || m.values.front() != 0 || m.values.back() != m.codomain)
    throw PreconditionError("monotone map is not surjective");
  for (int t = 0; t < m.domain(); ++t) {
    int a = m.values[static_cast<std::size_t>(t)];
    int b = m.values[static_cast<std::size_t>(t + 1)];
    if (b == a) s.repeats.push_back(t);
    else if (b != a + 1) throw PreconditionError("monotone map is not surjective");
  }
  return s;
}

MonotoneMap Surjection::to_map() const {
  MonotoneMap m{{0}, target};
  std::size_t r = 0;
  for (int t = 0; t < source; ++t) {
    bool repeat = r < repeats.size() && repeats[r] == t;
    if (repeat) ++r;
    m.values.push_back(m.values.back() + (repeat ? 0 : 1));
  }
  return m;
}

std::vector<Surjection> enumerate_surjections(int n, int k) {
  std::vector<Surjection> out;
  if (k < 0 || k > n) return out;
  int r = n - k;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(pick.size()) == r) {
      out.push_back({n, k, pick});
      return;
    }
    for (int t = lo; t < n; ++t) {
      pick.push_back(t);
      rec(t + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::pair<Surjection, std::vector<int>> epi_mono(const MonotoneMap& m) {
  std::vector<int> image;
  MonotoneMap epi{{}, 0};
  for (int v : m.values) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi.values.push_back(static_cast<int>(image.size()) - 1);
  }
  epi.codomain = static_cast<int>(image.size()) - 1;
  return {Surjection::from_map(epi), image};
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
  if (p < 0 || q < 0) throw PreconditionError("shuffle sizes must be non-negative");
  std::vector<Shuffle> out;
  int n = p + q;
  std::vector<int> second;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(second.size()) == q) {
      Shuffle sh{p, q, {}, second, 1};
      std::size_t r = 0;
      for (int t = 0; t < n; ++t) {
        if (r < second.size() && second[r] == t) ++r;
        else sh.first.push_back(t);
      }
      int inversions = 0;
      for (int a : sh.first)
        for (int b : sh.second)
          if (b < a) ++inversions;
      sh.sign = inversions % 2 == 0 ? 1 : -1;
      out.push_back(std::move(sh));
      return;
    }
    for (int t = lo; t < n; ++t) {
      second.push_back(t);
      rec(t + 1);
      second.pop_back();
    }
  };
  rec(0);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dk::simplicial
