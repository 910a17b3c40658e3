#include "primcycle/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "primcycle/arith.hpp"

namespace primcycle {

std::uint64_t FieldDim::q() const { return checked_pow(p, e); }

DegreeEquations solve_degree_equations(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("degree must be at least 2");
  DegreeEquations r;
  r.n = n;
  r.prime = is_prime(n);

  for (std::uint64_t q = 2; q + 1 <= n; ++q) {
    auto pp = as_prime_power(q);
    if (!pp)
      continue;
    std::uint64_t sum = 1 + q, power = q;
    for (std::uint32_t d = 2; sum <= n; ++d) {
      if (sum == n)
        r.projective.push_back({static_cast<std::uint32_t>(pp->p), pp->e, d});
      power *= q;
      sum += power;
    }
  }

  if (auto pp = as_prime_power(n))
    for (std::uint32_t d = 1; d <= pp->e; ++d)
      if (pp->e % d == 0)
        r.affine.push_back({static_cast<std::uint32_t>(pp->p), pp->e / d, d});

  if (n >= 3)
    if (auto pp = as_prime_power(n - 1)) {
      r.line = FieldDim{static_cast<std::uint32_t>(pp->p), pp->e, 2};
      r.line_prime_at_least_5 = pp->e == 1 && pp->p >= 5;
    }
  return r;
}

CaseList classify(std::size_t n, std::size_t k) {
  if (n < 2)
    throw std::invalid_argument("degree must be at least 2");
  if (k > n - 2)
    throw std::invalid_argument("fixed-point count must lie in 0..n-2");
  CaseList out;
  out.n = n;
  out.k = k;
  out.unconditional = {"A_" + std::to_string(n), "S_" + std::to_string(n)};
  auto eq = solve_degree_equations(n);
  auto add = [&](FamilyDescriptor d, std::string note = {}) {
    out.cases.push_back({std::move(d), std::move(note)});
  };

  switch (k) {
  case 0:
    if (eq.prime)
      add({CaseTag::c1a, static_cast<std::uint32_t>(n), 1, 1, n, 0, "", 0, 0});
    for (const auto &s : eq.projective)
      add({CaseTag::c1b, s.p, s.e, s.d, n, 0, "", 0, 0},
          s.d == 2 ? "same groups as case 3 at k = 2 (q = " + std::to_string(s.q()) + ")"
                   : "");
    if (n == 11) {
      add(sporadic_descriptor("L2_11@11"));
      add(sporadic_descriptor("M11@11"));
    }
    if (n == 23)
      add(sporadic_descriptor("M23"));
    break;
  case 1:
    for (const auto &s : eq.affine)
      add({CaseTag::c2a, s.p, s.e, s.d, n, 0, "", 0, 0});
    if (eq.line_prime_at_least_5) {
      const auto p = eq.line->p;
      add({CaseTag::c2b, p, 1, 2, n, 0, "L2", 0, 0});
      add({CaseTag::c2b, p, 1, 2, n, 0, "PGL2", 0, 0});
    }
    if (n == 12) {
      add(sporadic_descriptor("M11@12"));
      add(sporadic_descriptor("M12"));
    }
    if (n == 24)
      add(sporadic_descriptor("M24"));
    break;
  case 2:
    if (eq.line)
      add({CaseTag::c3, eq.line->p, eq.line->e, 2, n, 0, "", 0, 0},
          "same groups as case 1b with d = 2 at k = 0");
    break;
  default:
    break;
  }
  return out;
}

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::contains_alternating:
    return "contains_alternating";
  case Verdict::matched:
    return "matched";
  case Verdict::inconsistent_with_theorem:
    return "inconsistent_with_theorem";
  case Verdict::inapplicable:
    return "inapplicable";
  }
  return "?";
}

const char *to_string(Inapplicable r) {
  switch (r) {
  case Inapplicable::none:
    return "none";
  case Inapplicable::trivial_degree:
    return "trivial_degree";
  case Inapplicable::intransitive:
    return "intransitive";
  case Inapplicable::imprimitive:
    return "imprimitive";
  case Inapplicable::no_cycle:
    return "no_cycle";
  case Inapplicable::cycle_unverified:
    return "cycle_unverified";
  }
  return "?";
}

namespace {

std::vector<Point> cycle_sequence(const Permutation &c) {
  std::vector<Point> seq;
  Point start = c.smallest_moved_point().value();
  Point x = start;
  do {
    seq.push_back(x);
    x = c[x];
  } while (x != start);
  return seq;
}

std::vector<Point> fixed_points(const Permutation &c) {
  std::vector<Point> out;
  for (Point x = 0; x < c.degree(); ++x)
    if (c[x] == x)
      out.push_back(x);
  return out;
}

std::vector<Permutation> single_cycles(const StrongGeneratingSet &sgs, std::size_t k) {
  const std::size_t len = sgs.degree() - k;
  std::vector<Permutation> out;
  sgs.for_each_element([&](const Permutation &y) {
    if (y.moved_count() == len && as_single_cycle(y))
      out.push_back(y);
    return true;
  });
  return out;
}

// Searches sigma with sigma c sigma^-1 among `targets` and sigma G sigma^-1
// inside H.
bool conjugate_via_cycles(const GroupSpec &g, const Permutation &c,
                          const StrongGeneratingSet &h, const std::vector<Permutation> &targets) {
  const std::size_t n = g.degree;
  const auto cs = cycle_sequence(c);
  const auto fc = fixed_points(c);
  const std::size_t len = cs.size();
  std::vector<Point> images(n);
  for (const auto &y : targets) {
    const auto ys = cycle_sequence(y);
    auto fy = fixed_points(y);
    for (std::size_t j = 0; j < len; ++j) {
      std::sort(fy.begin(), fy.end());
      do {
        for (std::size_t i = 0; i < len; ++i)
          images[cs[i]] = ys[(i + j) % len];
        for (std::size_t i = 0; i < fc.size(); ++i)
          images[fc[i]] = fy[i];
        Permutation sigma(images);
        bool ok = std::all_of(g.generators.begin(), g.generators.end(),
                              [&](const Permutation &x) { return h.contains(conjugate(x, sigma)); });
        if (ok)
          return true;
      } while (std::next_permutation(fy.begin(), fy.end()));
    }
  }
  return false;
}

std::optional<std::uint64_t> try_order(const StrongGeneratingSet &sgs) {
  try {
    return sgs.order();
  } catch (const std::overflow_error &) {
    return std::nullopt;
  }
}

} // namespace

bool conjugate_in_symmetric(const GroupSpec &g, const Permutation &c, const GroupSpec &h) {
  if (g.degree != h.degree || c.degree() != g.degree)
    return false;
  auto sc = as_single_cycle(c);
  if (!sc)
    throw std::invalid_argument("conjugate_in_symmetric: c is not a single cycle");
  auto gs = build_sgs(g);
  auto hs = build_sgs(h);
  if (!gs.contains(c))
    throw std::invalid_argument("conjugate_in_symmetric: c is not in G");
  if (try_order(gs) != try_order(hs))
    return false;
  return conjugate_via_cycles(g, c, hs, single_cycles(hs, sc->fixed));
}

struct Identifier::Candidate {
  ConstructedGroup group;
  StrongGeneratingSet sgs;
  std::uint64_t order = 0;
  unsigned transitivity = 0;
  std::map<std::size_t, std::vector<Permutation>> cycles;

  const std::vector<Permutation> &cycles_with_fixed(std::size_t k) {
    auto it = cycles.find(k);
    if (it == cycles.end())
      it = cycles.emplace(k, single_cycles(sgs, k)).first;
    return it->second;
  }
};

Identifier::Identifier(IdentifyOptions options) : options_(std::move(options)) {}
Identifier::~Identifier() = default;
Identifier::Identifier(Identifier &&) noexcept = default;
Identifier &Identifier::operator=(Identifier &&) noexcept = default;

Identifier::Candidate &Identifier::candidate(const FamilyDescriptor &d) {
  for (auto &[key, c] : cache_)
    if (key == d)
      return *c;
  auto c = std::make_unique<Candidate>();
  c->group = instantiate(d);
  c->sgs = build_sgs(c->group.spec);
  c->order = c->sgs.order();
  c->transitivity = transitivity_degree(c->group.spec);
  cache_.emplace_back(d, std::move(c));
  return *cache_.back().second;
}

Identification Identifier::identify(const GroupSpec &group) {
  group.validate();
  Identification id;
  const std::size_t n = group.degree;
  id.degree = n;
  if (n < 2) {
    id.reason = Inapplicable::trivial_degree;
    id.detail = "degree below 2";
    return id;
  }
  if (!is_transitive(group)) {
    id.reason = Inapplicable::intransitive;
    id.detail = std::to_string(orbits(group).size()) + " orbits";
    return id;
  }
  if (auto blocks = find_nontrivial_blocks(group)) {
    id.reason = Inapplicable::imprimitive;
    id.detail = "block system with " + std::to_string(blocks->blocks.size()) + " blocks of size " +
                std::to_string(blocks->block_size());
    return id;
  }
  id.primitive = true;
  id.transitivity = transitivity_degree(group);

  if (contains_alternating(group)) {
    id.verdict = Verdict::contains_alternating;
    if (auto f = factorial(static_cast<unsigned>(n))) {
      bool odd = std::any_of(group.generators.begin(), group.generators.end(),
                             [](const Permutation &g) { return !g.is_even(); });
      id.order = odd ? *f : *f / 2;
    }
    return id;
  }

  auto sgs = build_sgs(group);
  id.order = try_order(sgs);
  auto census = cycle_census(sgs, options_.search);
  id.cycle_scan_exhaustive = census.exhaustive;
  for (std::size_t k = 0; k < census.by_fixed.size(); ++k)
    if (census.by_fixed[k])
      id.cycle_fixed_counts.push_back(k);
  if (id.cycle_fixed_counts.empty()) {
    id.reason = census.exhaustive ? Inapplicable::no_cycle : Inapplicable::cycle_unverified;
    id.detail = census.exhaustive ? "no single-cycle element"
                                  : "no single-cycle element among " +
                                        std::to_string(census.examined) + " sampled elements";
    return id;
  }
  id.k = id.cycle_fixed_counts.front();
  id.witness = census.by_fixed[*id.k];

  for (std::size_t k : id.cycle_fixed_counts)
    if (k >= 3) {
      id.verdict = Verdict::inconsistent_with_theorem;
      id.detail = "primitive group without A_" + std::to_string(n) + " contains an " +
                  std::to_string(n - k) + "-cycle fixing " + std::to_string(k) + " points";
      return id;
    }

  const bool confirm = n <= options_.conjugacy_max_degree;
  if (confirm)
    id.conjugacy_confirmed = true;
  for (std::size_t k : id.cycle_fixed_counts) {
    bool matched_k = false;
    for (const auto &entry : classify(n, k).cases)
      for (const auto &member : sandwich_members(entry.descriptor)) {
        std::uint64_t expected;
        try {
          expected = expected_order(member);
        } catch (const std::overflow_error &) {
          continue;
        }
        if (!id.order || expected != *id.order)
          continue;
        Candidate &cand = candidate(member);
        if (cand.transitivity != id.transitivity)
          continue;
        if (confirm && !conjugate_via_cycles(group, *census.by_fixed[k], cand.sgs,
                                             cand.cycles_with_fixed(k)))
          continue;
        matched_k = true;
        if (std::find(id.matches.begin(), id.matches.end(), member) == id.matches.end())
          id.matches.push_back(member);
      }
    if (!matched_k) {
      id.verdict = Verdict::inconsistent_with_theorem;
      id.detail = "contains an " + std::to_string(n - k) + "-cycle fixing " + std::to_string(k) +
                  " points but matches no listed group";
      return id;
    }
  }
  id.verdict = Verdict::matched;
  return id;
}

Identification identify(const GroupSpec &group, const IdentifyOptions &options) {
  Identifier identifier(options);
  return identifier.identify(group);
}

} // namespace primcycle
