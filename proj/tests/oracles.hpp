#pragma once

// Brute-force oracles and random generators shared by the tests. Nothing here
// calls into the Schreier-Sims engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "primcycle/group.hpp"
#include "primcycle/perm.hpp"

namespace oracle {

using primcycle::GroupSpec;
using primcycle::Permutation;
using primcycle::Point;

/// Every element of <gens>, or nullopt once more than `cap` are found.
inline std::optional<std::set<Permutation>> closure(const GroupSpec &g, std::size_t cap = 20000) {
  std::set<Permutation> seen{Permutation(g.degree)};
  std::vector<Permutation> frontier{Permutation(g.degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &x : frontier)
      for (const auto &s : g.generators) {
        Permutation y = primcycle::compose(s, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Parity by counting inversions.
inline bool is_even(const Permutation &p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      inv += p[static_cast<Point>(i)] > p[static_cast<Point>(j)];
  return inv % 2 == 0;
}

/// Orbit of `start` under the elementwise action on tuples.
inline std::size_t tuple_orbit_size(const GroupSpec &g, const std::vector<Point> &start) {
  std::set<std::vector<Point>> seen{start};
  std::vector<std::vector<Point>> stack{start};
  while (!stack.empty()) {
    auto t = stack.back();
    stack.pop_back();
    for (const auto &s : g.generators) {
      auto u = t;
      for (auto &x : u)
        x = s[x];
      if (seen.insert(u).second)
        stack.push_back(std::move(u));
    }
  }
  return seen.size();
}

/// Largest t <= t_max such that G is transitive on ordered t-tuples of
/// distinct points.
inline unsigned transitivity(const GroupSpec &g, unsigned t_max) {
  unsigned t = 0;
  std::uint64_t tuples = 1;
  std::vector<Point> start;
  while (t < t_max && t < g.degree) {
    tuples *= g.degree - t;
    start.push_back(static_cast<Point>(t));
    if (tuple_orbit_size(g, start) != tuples)
      break;
    ++t;
  }
  return t;
}

inline bool is_transitive(const GroupSpec &g) {
  return g.degree <= 1 || tuple_orbit_size(g, {0}) == g.degree;
}

/// Transitive and no set partition other than the two trivial ones is
/// preserved by every generator. Exponential; meant for n <= 8.
inline bool is_primitive(const GroupSpec &g) {
  const std::size_t n = g.degree;
  if (!oracle::is_transitive(g))
    return false;
  if (n <= 2)
    return true;
  // Restricted growth strings enumerate set partitions.
  std::vector<std::size_t> label(n, 0);
  auto preserved = [&](std::size_t blocks) {
    for (const auto &s : g.generators) {
      std::vector<std::size_t> image(blocks, n);
      for (Point x = 0; x < n; ++x) {
        auto &slot = image[label[x]];
        if (slot == n)
          slot = label[s[x]];
        else if (slot != label[s[x]])
          return false;
      }
    }
    return true;
  };
  while (true) {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    if (blocks > 1 && blocks < n && preserved(blocks))
      return false;
    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0)
      return true;
  }
}

/// Orbits by union-find over generator images.
inline std::vector<std::vector<Point>> orbits(const GroupSpec &g) {
  std::vector<Point> parent(g.degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &s : g.generators)
    for (Point x = 0; x < g.degree; ++x)
      parent[find(x)] = find(s[x]);
  std::vector<std::vector<Point>> out;
  std::vector<int> index(g.degree, -1);
  for (Point x = 0; x < g.degree; ++x) {
    Point r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(index[r])].push_back(x);
  }
  return out;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64 &rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

/// Random permutation preserving the partition of {0..n-1} into consecutive
/// blocks of size m (n divisible by m).
inline Permutation random_block_permutation(std::size_t n, std::size_t m, std::mt19937_64 &rng) {
  const std::size_t b = n / m;
  std::vector<std::size_t> block_perm(b);
  std::iota(block_perm.begin(), block_perm.end(), std::size_t{0});
  std::shuffle(block_perm.begin(), block_perm.end(), rng);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < b; ++i) {
    std::vector<Point> inner(m);
    std::iota(inner.begin(), inner.end(), Point{0});
    std::shuffle(inner.begin(), inner.end(), rng);
    for (std::size_t j = 0; j < m; ++j)
      images[i * m + j] = static_cast<Point>(block_perm[i] * m + inner[j]);
  }
  return Permutation(std::move(images));
}

/// A random permutation raised to a random divisor of its order.
inline Permutation random_small_order(std::size_t n, std::mt19937_64 &rng) {
  Permutation p = random_permutation(n, rng);
  std::uint64_t o = p.order();
  std::uint64_t div = 1;
  for (std::uint64_t d = 2; d <= o; ++d)
    if (o % d == 0 && rng() % 2) {
      div = d;
      break;
    }
  return p.pow(static_cast<std::int64_t>(div));
}

/// A random group of degree 2..max_degree drawn from a mix of shapes:
/// unrestricted random generators, block-preserving generators, and
/// generators of reduced order. Its closure may still be large.
inline GroupSpec random_group(std::mt19937_64 &rng, std::size_t max_degree) {
  std::size_t n = 2 + rng() % (max_degree - 1);
  std::size_t gens = 1 + rng() % 3;
  GroupSpec g;
  g.degree = n;
  const unsigned shape = rng() % 3;
  std::vector<std::size_t> block_sizes;
  for (std::size_t m = 2; m < n; ++m)
    if (n % m == 0)
      block_sizes.push_back(m);
  for (std::size_t i = 0; i < gens; ++i) {
    if (shape == 1 && !block_sizes.empty())
      g.generators.push_back(
          random_block_permutation(n, block_sizes[rng() % block_sizes.size()], rng));
    else if (shape == 2)
      g.generators.push_back(random_small_order(n, rng));
    else
      g.generators.push_back(random_permutation(n, rng));
  }
  return g;
}

} // namespace oracle
