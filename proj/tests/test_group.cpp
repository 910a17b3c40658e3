#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "primcycle/families.hpp"
#include "primcycle/group.hpp"

using namespace primcycle;

namespace {

GroupSpec symmetric(std::size_t n) {
  std::vector<Point> shift(n);
  for (Point i = 0; i < n; ++i)
    shift[i] = static_cast<Point>((i + 1) % n);
  return GroupSpec(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation(shift)});
}

GroupSpec alternating(std::size_t n) {
  GroupSpec g;
  g.degree = n;
  for (Point i = 2; i < n; ++i)
    g.generators.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return g;
}

GroupSpec cyclic(std::size_t n) {
  std::vector<Point> shift(n);
  for (Point i = 0; i < n; ++i)
    shift[i] = static_cast<Point>((i + 1) % n);
  return GroupSpec(n, {Permutation(shift)});
}

GroupSpec spec(std::size_t n, std::initializer_list<const char *> gens) {
  GroupSpec g;
  g.degree = n;
  for (auto s : gens)
    g.generators.push_back(parse_cycles(s, n));
  return g;
}

} // namespace

TEST_SUITE("group") {

TEST_CASE("build_sgs orders") {
  CHECK(build_sgs(spec(3, {"(1 2)", "(1 2 3)"})).order() == 6);
  CHECK(build_sgs(GroupSpec(5, {})).order() == 1);
  CHECK(build_sgs(symmetric(8)).order() == 40320);
  CHECK(build_sgs(alternating(9)).order() == 181440);

  // t -> t+1, t -> 3t on Z_7: closure size and p(p-1) both give 42.
  std::vector<Point> add(7), mul(7);
  for (Point t = 0; t < 7; ++t) {
    add[t] = (t + 1) % 7;
    mul[t] = (3 * t) % 7;
  }
  GroupSpec agl(7, {Permutation(add), Permutation(mul)});
  CHECK(build_sgs(agl).order() == 42);
  CHECK(oracle::closure(agl)->size() == 42);

  CHECK(build_sgs(psl2_pgl2(7, LineGroup::PGL2).spec).order() == 336);
}

TEST_CASE("M12 order is independent of the base ordering") {
  auto m12 = sporadic("M12").spec;
  CHECK(build_sgs(m12).order() == 95040);
  for (std::vector<Point> prefix : {std::vector<Point>{11, 10, 9}, std::vector<Point>{5, 0, 7, 3}}) {
    SgsOptions opt;
    opt.base_prefix = prefix;
    auto s = build_sgs(m12, opt);
    CHECK(s.base().front() == prefix.front());
    std::uint64_t product = 1;
    for (const auto &level : s.levels())
      product *= level.orbit.size();
    CHECK(product == 95040);
  }
}

TEST_CASE("SGS structure invariants") {
  auto g = projective_line_gamma(3, 2, LineGroup::PGammaL2).spec;
  auto s = build_sgs(g);
  std::uint64_t product = 1;
  for (const auto &level : s.levels()) {
    product *= level.orbit.size();
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      CHECK(level.transversal[i][level.base] == level.orbit[i]);
      CHECK(compose(level.inverse_transversal[i], level.transversal[i]).is_identity());
    }
  }
  CHECK(product == s.order());
  // Only the identity fixes every base point.
  std::size_t fixing_base = 0;
  s.for_each_element([&](const Permutation &x) {
    bool fixes = true;
    for (Point b : s.base())
      fixes &= x[b] == b;
    fixing_base += fixes;
    return true;
  });
  CHECK(fixing_base == 1);
}

TEST_CASE("stop_at_order truncates") {
  SgsOptions opt;
  opt.stop_at_order = 1000;
  auto s = build_sgs(symmetric(10), opt);
  CHECK_FALSE(s.complete());
  CHECK(s.order_lower_bound() >= 1000);
  CHECK_THROWS_AS(s.order(), std::logic_error);
}

TEST_CASE("contains") {
  auto a6 = build_sgs(alternating(6));
  CHECK(a6.contains(Permutation(6)));
  for (const auto &g : alternating(6).generators)
    CHECK(a6.contains(g));
  CHECK_FALSE(a6.contains(parse_cycles("(1 2)", 6)));
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_permutation(6, rng);
    CHECK(a6.contains(p) == oracle::is_even(p));
  }
  CHECK_THROWS_AS(a6.contains(Permutation(5)), std::invalid_argument);
}

TEST_CASE("stabilizer") {
  auto s4 = symmetric(4);
  CHECK(build_sgs(stabilizer(s4, {})).order() == 24);
  CHECK(build_sgs(stabilizer(s4, {2})).order() == 6);
  auto gamma = projective_line_gamma(3, 2, LineGroup::PGammaL2).spec;
  // 0 has index 0 and infinity has index q.
  CHECK(build_sgs(stabilizer(gamma, {0, 9})).order() == 16);
}

TEST_CASE("orbits") {
  CHECK(orbits(GroupSpec(4, {})).size() == 4);
  CHECK(orbits(cyclic(9)).size() == 1);
  auto sigma = projective_line_gamma(3, 2, LineGroup::PSigmaL2).spec;
  auto st = stabilizer(sigma, {0, 9});
  std::vector<std::size_t> sizes;
  for (const auto &o : orbits(st))
    sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 4, 4});
}

TEST_CASE("minimal_blocks") {
  auto s5 = symmetric(5);
  CHECK(minimal_blocks(s5, 0, 3).blocks.size() == 1);
  auto wr = wreath_imprimitive(2, 2).spec;
  auto b = minimal_blocks(wr, 0, 1);
  CHECK(b.blocks == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  auto c4 = cyclic(4);
  CHECK(minimal_blocks(c4, 0, 2).blocks == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  // Block property checked directly against the generators.
  for (const auto &g : c4.generators)
    for (const auto &block : minimal_blocks(c4, 0, 2).blocks) {
      std::vector<Point> image;
      for (Point x : block)
        image.push_back(g[x]);
      std::sort(image.begin(), image.end());
      CHECK((image == std::vector<Point>{0, 2} || image == std::vector<Point>{1, 3}));
    }
  CHECK_THROWS_AS(minimal_blocks(c4, 1, 1), std::invalid_argument);
}

TEST_CASE("is_primitive and transitivity_degree") {
  CHECK(is_primitive(symmetric(5)));
  CHECK_FALSE(is_primitive(wreath_imprimitive(2, 2).spec));
  CHECK(is_primitive(cyclic(13)));
  CHECK_FALSE(is_primitive(cyclic(12)));
  CHECK(transitivity_degree(symmetric(7)) == 7);
  CHECK(transitivity_degree(alternating(4)) == 2);
  CHECK(oracle::transitivity(alternating(4), 4) == 2);
  auto pgl5 = psl2_pgl2(5, LineGroup::PGL2).spec;
  CHECK(transitivity_degree(pgl5) == 3);
  CHECK(oracle::transitivity(pgl5, 4) == 3);
  CHECK(transitivity_degree(alternating(9)) == 7);
  CHECK(transitivity_degree(sporadic("M24").spec) == 5);
}

TEST_CASE("contains_alternating") {
  CHECK(contains_alternating(symmetric(6)));
  CHECK(contains_alternating(alternating(7)));
  CHECK_FALSE(contains_alternating(sporadic("M12").spec));
  CHECK(contains_alternating(symmetric(25)));
  CHECK(contains_alternating(alternating(23)));
  CHECK_FALSE(contains_alternating(sporadic("M24").spec));
}

TEST_CASE("find_cycle_with_fixed") {
  auto c11 = cyclic(11);
  auto r = find_cycle_with_fixed(c11, 0);
  CHECK(r.status == SearchStatus::found);
  CHECK(as_single_cycle(*r.witness) == SingleCycle{11, 0});

  auto m11 = sporadic("M11@11").spec;
  CHECK(find_cycle_with_fixed(m11, 0).status == SearchStatus::found);

  auto m22 = sporadic("M22").spec;
  auto none = find_cycle_with_fixed(m22, 2);
  CHECK(none.status == SearchStatus::certified_absent);
  CHECK(none.examined == 443520);

  SearchConfig sampled;
  sampled.exhaustive_cap = 100;
  sampled.sample_budget = 50;
  auto s = find_cycle_with_fixed(m22, 2, sampled);
  CHECK(s.status == SearchStatus::inconclusive);
  CHECK_FALSE(s.exhaustive);
}

TEST_CASE("engine agrees with brute-force oracles on random groups") {
  std::mt19937_64 rng(0xC0FFEE);
  int checked = 0, attempts = 0;
  while (checked < 250 && attempts < 5000) {
    ++attempts;
    auto g = oracle::random_group(rng, 10);
    auto elements = oracle::closure(g, 20000);
    if (!elements)
      continue;
    ++checked;
    CAPTURE(g.degree);
    auto s = build_sgs(g);
    REQUIRE(s.order() == elements->size());

    // Enumeration produces each element exactly once.
    std::set<Permutation> listed;
    s.for_each_element([&](const Permutation &x) {
      listed.insert(x);
      return true;
    });
    CHECK(listed == *elements);

    // Membership on members and on random permutations.
    for (int i = 0; i < 20; ++i) {
      auto p = oracle::random_permutation(g.degree, rng);
      CHECK(s.contains(p) == (elements->count(p) > 0));
      CHECK(elements->count(s.random_element(rng)) == 1);
    }

    CHECK(orbits(g) == oracle::orbits(g));
    CHECK(is_transitive(g) == oracle::is_transitive(g));
    if (g.degree <= 8)
      CHECK(is_primitive(g) == oracle::is_primitive(g));
    if (is_transitive(g)) {
      const unsigned t = transitivity_degree(g);
      CHECK(std::min(t, 4u) == oracle::transitivity(g, 4));
    }

    // Cycle census against a scan of the closure.
    auto census = cycle_census(s);
    CHECK(census.exhaustive);
    for (std::size_t k = 0; k + 2 <= g.degree; ++k) {
      bool brute = std::any_of(elements->begin(), elements->end(), [&](const Permutation &x) {
        auto sc = as_single_cycle(x);
        return sc && sc->fixed == k;
      });
      CHECK(static_cast<bool>(census.by_fixed[k]) == brute);
      if (census.by_fixed[k])
        CHECK(elements->count(*census.by_fixed[k]) == 1);
    }
  }
  CHECK(checked == 250);
}

TEST_CASE("primitivity agrees with the partition oracle on every transitive subgroup shape") {
  // Groups generated by a transitive element plus a random one, all n <= 8.
  std::mt19937_64 rng(77);
  int primitive = 0, imprimitive = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + rng() % 6;
    GroupSpec g = cyclic(n);
    if (rng() % 2)
      g.generators.push_back(oracle::random_small_order(n, rng));
    bool p = is_primitive(g);
    CHECK(p == oracle::is_primitive(g));
    (p ? primitive : imprimitive)++;
  }
  CHECK(primitive > 20);
  CHECK(imprimitive > 20);
}

} // TEST_SUITE
