#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "primcycle/arith.hpp"
#include "primcycle/group.hpp"

namespace primcycle {

GroupSpec stabilizer(const GroupSpec &group, const std::vector<Point> &points) {
  std::vector<Point> seen;
  for (Point x : points) {
    if (x >= group.degree)
      throw std::invalid_argument("stabilizer: point out of range");
    if (std::find(seen.begin(), seen.end(), x) != seen.end())
      throw std::invalid_argument("stabilizer: repeated point");
    seen.push_back(x);
  }
  if (points.empty())
    return group;
  SgsOptions opts;
  opts.base_prefix = points;
  auto sgs = build_sgs(group, opts);
  GroupSpec out;
  out.degree = group.degree;
  out.generators = sgs.stabilizer_generators(points.size());
  if (group.label)
    out.label = *group.label + "_stab";
  return out;
}

std::vector<Point> orbit(const GroupSpec &group, Point x) {
  std::vector<Point> result{x};
  std::vector<bool> seen(group.degree, false);
  seen[x] = true;
  for (std::size_t i = 0; i < result.size(); ++i)
    for (const auto &g : group.generators) {
      Point y = g[result[i]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  return result;
}

std::vector<std::vector<Point>> orbits(const GroupSpec &group) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(group.degree, false);
  for (Point x = 0; x < group.degree; ++x) {
    if (seen[x])
      continue;
    auto o = orbit(group, x);
    for (Point y : o)
      seen[y] = true;
    std::sort(o.begin(), o.end());
    result.push_back(std::move(o));
  }
  return result;
}

bool is_transitive(const GroupSpec &group) {
  return group.degree <= 1 || orbit(group, 0).size() == group.degree;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Point{0});
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller root. Returns false if already joined.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Atkinson's merging procedure. Returns the number of classes.
std::size_t merge_blocks(const GroupSpec &group, UnionFind &uf, Point alpha, Point beta) {
  std::vector<std::pair<Point, Point>> queue;
  std::size_t classes = group.degree;
  if (uf.unite(alpha, beta)) {
    --classes;
    queue.emplace_back(alpha, beta);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [a, b] = queue[i];
    for (const auto &g : group.generators) {
      Point ga = g[a], gb = g[b];
      if (uf.unite(ga, gb)) {
        --classes;
        if (classes == 1)
          return 1;
        queue.emplace_back(ga, gb);
      }
    }
  }
  return classes;
}

} // namespace

BlockSystem minimal_blocks(const GroupSpec &group, Point alpha, Point beta) {
  if (alpha == beta || alpha >= group.degree || beta >= group.degree)
    throw std::invalid_argument("minimal_blocks: need two distinct points in range");
  if (!is_transitive(group))
    throw std::invalid_argument("minimal_blocks: group is intransitive");
  UnionFind uf(group.degree);
  merge_blocks(group, uf, alpha, beta);
  std::vector<std::vector<Point>> by_root(group.degree);
  for (Point x = 0; x < group.degree; ++x)
    by_root[uf.find(x)].push_back(x);
  BlockSystem bs;
  for (auto &b : by_root)
    if (!b.empty())
      bs.blocks.push_back(std::move(b));
  return bs;
}

std::optional<BlockSystem> find_nontrivial_blocks(const GroupSpec &group) {
  for (Point beta = 1; beta < group.degree; ++beta) {
    auto bs = minimal_blocks(group, 0, beta);
    if (!bs.trivial())
      return bs;
  }
  return std::nullopt;
}

bool is_primitive(const GroupSpec &group) {
  if (!is_transitive(group))
    return false;
  for (Point beta = 1; beta < group.degree; ++beta) {
    UnionFind uf(group.degree);
    if (merge_blocks(group, uf, 0, beta) != 1)
      return false;
  }
  return true;
}

bool contains_alternating(const GroupSpec &group) {
  const std::size_t n = group.degree;
  if (n <= 2)
    return true;
  if (!is_transitive(group))
    return false;
  if (auto nf = factorial(static_cast<unsigned>(n))) {
    SgsOptions opts;
    opts.stop_at_order = *nf / 2;
    auto sgs = build_sgs(group, opts);
    return sgs.order_lower_bound() >= *nf / 2;
  }
  auto sgs = build_sgs(group);
  for (Point i = 2; i < n; ++i)
    if (!sgs.contains(Permutation::from_cycles(n, {{0, 1, i}})))
      return false;
  return true;
}

unsigned transitivity_degree(const GroupSpec &group) {
  const std::size_t n = group.degree;
  if (!is_transitive(group))
    return 0;
  if (contains_alternating(group)) {
    bool has_odd = std::any_of(group.generators.begin(), group.generators.end(),
                               [](const Permutation &g) { return !g.is_even(); });
    return static_cast<unsigned>(has_odd || n <= 1 ? n : n - 2);
  }
  // t-transitive iff the stabilizer of 0..i-1 is transitive on the remaining
  // points for every i < t. Six or more is impossible here.
  const std::size_t prefix = std::min<std::size_t>(n, 7);
  std::vector<Point> base(prefix);
  std::iota(base.begin(), base.end(), Point{0});
  SgsOptions opts;
  opts.base_prefix = base;
  auto sgs = build_sgs(group, opts);
  unsigned t = 0;
  for (std::size_t i = 0; i < prefix; ++i) {
    if (sgs.levels()[i].orbit.size() != n - i)
      break;
    ++t;
  }
  if (t >= 6)
    throw std::logic_error("group not containing A_n reported " + std::to_string(t) +
                           "-transitive");
  return t;
}

const char *to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::found:
    return "found";
  case SearchStatus::certified_absent:
    return "certified_absent";
  case SearchStatus::inconclusive:
    return "inconclusive";
  }
  return "?";
}

CycleSearchResult find_cycle_with_fixed(const StrongGeneratingSet &sgs, std::size_t k,
                                        const SearchConfig &config) {
  const std::size_t n = sgs.degree();
  CycleSearchResult r;
  if (n < 2 || k > n - 2) {
    r.status = SearchStatus::certified_absent;
    r.exhaustive = true;
    return r;
  }
  const SingleCycle want{n - k, k};
  auto test = [&](const Permutation &g) {
    ++r.examined;
    if (g.moved_count() != want.length)
      return false;
    auto sc = as_single_cycle(g);
    return sc && *sc == want;
  };
  std::uint64_t order = 0;
  try {
    order = sgs.order();
  } catch (const std::overflow_error &) {
    order = 0;
  }
  if (order != 0 && order <= config.exhaustive_cap) {
    r.exhaustive = true;
    sgs.for_each_element([&](const Permutation &g) {
      if (test(g)) {
        r.witness = g;
        return false;
      }
      return true;
    });
    r.status = r.witness ? SearchStatus::found : SearchStatus::certified_absent;
    return r;
  }
  std::mt19937_64 rng(config.seed);
  for (std::uint64_t i = 0; i < config.sample_budget; ++i) {
    Permutation g = sgs.random_element(rng);
    if (test(g)) {
      r.witness = g;
      r.status = SearchStatus::found;
      return r;
    }
  }
  r.status = SearchStatus::inconclusive;
  return r;
}

CycleSearchResult find_cycle_with_fixed(const GroupSpec &group, std::size_t k,
                                        const SearchConfig &config) {
  return find_cycle_with_fixed(build_sgs(group), k, config);
}

CycleCensus cycle_census(const StrongGeneratingSet &sgs, const SearchConfig &config) {
  const std::size_t n = sgs.degree();
  CycleCensus c;
  c.by_fixed.resize(n >= 2 ? n - 1 : 0);
  if (n < 2) {
    c.exhaustive = true;
    return c;
  }
  auto record = [&](const Permutation &g) {
    ++c.examined;
    if (auto sc = as_single_cycle(g); sc && !c.by_fixed[sc->fixed])
      c.by_fixed[sc->fixed] = g;
  };
  std::uint64_t order = 0;
  try {
    order = sgs.order();
  } catch (const std::overflow_error &) {
    order = 0;
  }
  if (order != 0 && order <= config.exhaustive_cap) {
    c.exhaustive = true;
    sgs.for_each_element([&](const Permutation &g) {
      record(g);
      return true;
    });
    return c;
  }
  std::mt19937_64 rng(config.seed);
  for (std::uint64_t i = 0; i < config.sample_budget; ++i)
    record(sgs.random_element(rng));
  return c;
}

} // namespace primcycle
