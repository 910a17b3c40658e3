#include "primcycle/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "primcycle/arith.hpp"
#include "primcycle/io.hpp"

namespace primcycle {

const char *to_string(CheckVerdict v) {
  switch (v) {
  case CheckVerdict::pass:
    return "pass";
  case CheckVerdict::fail:
    return "fail";
  case CheckVerdict::inconclusive:
    return "inconclusive";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["verdict"] = primcycle::to_string(verdict);
  j["witness"] = witness;
  j["seconds"] = seconds ? nlohmann::ordered_json(*seconds) : nlohmann::ordered_json(nullptr);
  return j;
}

CheckVerdict aggregate(const std::vector<CheckReport> &reports) {
  CheckVerdict v = CheckVerdict::pass;
  for (const auto &r : reports) {
    if (r.verdict == CheckVerdict::fail)
      return CheckVerdict::fail;
    if (r.verdict == CheckVerdict::inconclusive)
      v = CheckVerdict::inconclusive;
  }
  return v;
}

SearchConfig VerifierConfig::search() const {
  SearchConfig s;
  s.exhaustive_cap = exhaustive_cap;
  s.sample_budget = sample_budget;
  s.seed = seed;
  return s;
}

Deadline::Deadline(double seconds) {
  if (seconds > 0)
    end_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(seconds));
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

namespace {

CheckReport make_report(std::string check, Json params) {
  CheckReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  return r;
}

CheckReport out_of_time(CheckReport r) {
  r.verdict = CheckVerdict::inconclusive;
  r.witness["reason"] = "time budget exhausted";
  return r;
}

std::string label(const FamilyDescriptor &d) { return to_string(d.tag) + " " + d.group_name(); }

constexpr std::size_t kMaxListed = 20;

void note_failure(CheckReport &r, Json item) {
  r.verdict = CheckVerdict::fail;
  auto &list = r.witness["counterexamples"];
  if (!list.is_array())
    list = Json::array();
  if (list.size() < kMaxListed)
    list.push_back(std::move(item));
}

} // namespace

std::vector<SweepEntry> construction_sweep(std::size_t n_max, const VerifierConfig &config,
                                           const Deadline &deadline) {
  std::vector<SweepEntry> out;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t k = 0; k <= std::min<std::size_t>(2, n - 2); ++k)
      for (const auto &entry : classify(n, k).cases)
        for (const auto &member : sandwich_members(entry.descriptor)) {
          if (deadline.expired())
            return out;
          SweepEntry s;
          s.descriptor = member;
          s.k = k;
          try {
            auto it = config.sporadic_overrides.find(member.name);
            if (!member.name.empty() && it != config.sporadic_overrides.end() &&
                (member.tag == CaseTag::c1c || member.tag == CaseTag::c2c))
              s.group = sporadic_from_data(member.name, it->second);
            else
              s.group = instantiate(member);
          } catch (const std::exception &e) {
            s.error = e.what();
          }
          out.push_back(std::move(s));
        }
  return out;
}

CheckReport forward_check(const std::vector<SweepEntry> &sweep, std::size_t n_max,
                          const Deadline &deadline) {
  CheckReport r = make_report("forward_check", {{"n_max", n_max}});
  if (n_max < 5)
    throw std::invalid_argument("forward_check: n_max must be at least 5");
  Json by_design = Json::array();
  std::size_t checked = 0;
  for (const auto &s : sweep) {
    if (deadline.expired())
      return out_of_time(std::move(r));
    Json where = {{"n", s.descriptor.n}, {"k", s.k}, {"group", label(s.descriptor)}};
    if (!s.group) {
      where["problem"] = "construction failed: " + s.error;
      note_failure(r, std::move(where));
      continue;
    }
    ++checked;
    const auto &g = *s.group;
    std::vector<std::string> problems;
    if (!is_primitive(g.spec))
      problems.push_back("not primitive");
    if (contains_alternating(g.spec))
      by_design.push_back({{"n", s.descriptor.n}, {"k", s.k}, {"group", label(s.descriptor)}});
    auto sgs = build_sgs(g.spec);
    if (!g.witness_cycle) {
      problems.push_back("no witness cycle");
    } else {
      auto sc = as_single_cycle(*g.witness_cycle);
      if (!sc || sc->fixed != s.k)
        problems.push_back("witness " + print_cycles(*g.witness_cycle) + " is not an " +
                           std::to_string(s.descriptor.n - s.k) + "-cycle");
      if (!sgs.contains(*g.witness_cycle))
        problems.push_back("witness not in the group");
    }
    const unsigned t = transitivity_degree(g.spec);
    if (t < s.k + 1)
      problems.push_back("transitivity " + std::to_string(t) + " < k + 1");
    const bool proper_affine_line =
        s.descriptor.tag == CaseTag::c1a && s.descriptor.param < s.descriptor.p - 1;
    if (!proper_affine_line && t < 2)
      problems.push_back("not 2-transitive");
    if (!problems.empty()) {
      where["problems"] = problems;
      where["generators"] = to_json(to_spec_file(g))["generators"];
      note_failure(r, std::move(where));
    }
  }
  r.witness["groups_checked"] = checked;
  r.witness["containing_alternating_by_design"] = std::move(by_design);
  return r;
}

CheckReport forward_check(std::size_t n_max, const VerifierConfig &config,
                          const Deadline &deadline) {
  if (n_max < 5)
    throw std::invalid_argument("forward_check: n_max must be at least 5");
  auto sweep = construction_sweep(n_max, config, deadline);
  if (deadline.expired())
    return out_of_time(make_report("forward_check", {{"n_max", n_max}}));
  return forward_check(sweep, n_max, deadline);
}

CheckReport jordan_transitivity_check(const std::vector<CycleBearingGroup> &groups) {
  CheckReport r = make_report("jordan_transitivity_check", {{"groups", groups.size()}});
  std::map<std::size_t, unsigned> min_by_k;
  std::size_t prime_length = 0;
  for (const auto &g : groups) {
    if (!is_primitive(g.group))
      throw std::invalid_argument("jordan_transitivity_check: imprimitive group " +
                                  g.group.label.value_or("?"));
    auto sc = as_single_cycle(g.cycle);
    if (!sc || !build_sgs(g.group).contains(g.cycle))
      throw std::invalid_argument("jordan_transitivity_check: cycle is not a single cycle in " +
                                  g.group.label.value_or("?"));
    const unsigned t = transitivity_degree(g.group);
    if (is_prime(sc->length))
      ++prime_length;
    auto [it, fresh] = min_by_k.emplace(sc->fixed, t);
    if (!fresh)
      it->second = std::min(it->second, t);
    if (t < sc->fixed + 1)
      note_failure(r, {{"group", g.group.label.value_or("?")},
                       {"cycle", print_cycles(g.cycle)},
                       {"k", sc->fixed},
                       {"transitivity", t}});
  }
  Json mins = Json::object();
  for (auto [k, t] : min_by_k)
    mins[std::to_string(k)] = t;
  r.witness["min_transitivity_by_k"] = std::move(mins);
  r.witness["prime_length_cycles"] = prime_length;
  return r;
}

namespace {

std::vector<Point> unrank(std::uint64_t rank, std::size_t n) {
  std::vector<Point> pool(n), out;
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i)
    fact[i] = fact[i - 1] * i;
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t idx = rank / fact[i];
    rank %= fact[i];
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

struct ConverseTally {
  std::uint64_t representatives = 0;
  std::uint64_t primitive = 0;
  std::uint64_t alternating = 0;
  std::uint64_t proper = 0;
  std::map<std::string, std::uint64_t> identified;
  std::optional<std::uint64_t> fail_rank;
  Json fail_item;
  bool out_of_time = false;
};

} // namespace

CheckReport converse_search(std::size_t n, std::size_t k, const VerifierConfig &config,
                            const Deadline &deadline) {
  if (n > config.converse_bound)
    throw std::invalid_argument("converse_search: degree " + std::to_string(n) +
                                " exceeds the exhaustive bound " +
                                std::to_string(config.converse_bound));
  if (n < 2 || k > n - 2)
    throw std::invalid_argument("converse_search: need n >= 2 and 0 <= k <= n - 2");
  CheckReport r = make_report("converse_search", {{"n", n}, {"k", k}});
  const std::size_t len = n - k;
  std::vector<Point> cyc(len);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  const Permutation c = Permutation::from_cycles(n, {cyc});

  // Centralizer of c in S_n: <c> x Sym(fixed points).
  std::vector<std::vector<Point>> cent, cent_inv;
  {
    std::vector<Point> fixed(k);
    std::iota(fixed.begin(), fixed.end(), static_cast<Point>(len));
    for (std::size_t j = 0; j < len; ++j) {
      auto perm = fixed;
      do {
        std::vector<Point> z(n);
        for (std::size_t i = 0; i < len; ++i)
          z[i] = static_cast<Point>((i + j) % len);
        for (std::size_t i = 0; i < k; ++i)
          z[len + i] = perm[i];
        std::vector<Point> zi(n);
        for (std::size_t i = 0; i < n; ++i)
          zi[z[i]] = static_cast<Point>(i);
        cent.push_back(std::move(z));
        cent_inv.push_back(std::move(zi));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  std::set<std::string> allowed;
  for (const auto &entry : classify(n, k).cases)
    for (const auto &m : sandwich_members(entry.descriptor))
      allowed.insert(label(m));

  const std::uint64_t total = *factorial(static_cast<unsigned>(n));
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<ConverseTally> tallies(jobs);
  IdentifyOptions iopts;
  iopts.search = config.search();

  auto worker = [&](unsigned id) {
    ConverseTally &t = tallies[id];
    Identifier identifier(iopts);
    const std::uint64_t lo = total * id / jobs, hi = total * (id + 1) / jobs;
    std::vector<Point> g = unrank(lo, n);
    for (std::uint64_t rank = lo; rank < hi; ++rank, std::next_permutation(g.begin(), g.end())) {
      if ((rank & 0xfff) == 0 && deadline.expired()) {
        t.out_of_time = true;
        return;
      }
      // g represents its centralizer orbit iff it is lexicographically least.
      bool rep = true;
      for (std::size_t zi = 1; zi < cent.size() && rep; ++zi) {
        const auto &z = cent[zi];
        const auto &zinv = cent_inv[zi];
        for (std::size_t i = 0; i < n; ++i) {
          Point h = z[g[zinv[i]]];
          if (h != g[i]) {
            rep = g[i] < h;
            break;
          }
        }
      }
      if (!rep)
        continue;
      ++t.representatives;
      GroupSpec h(n, {c, Permutation(g)});
      if (!is_primitive(h))
        continue;
      ++t.primitive;
      if (contains_alternating(h)) {
        ++t.alternating;
        continue;
      }
      ++t.proper;
      auto idn = identifier.identify(h);
      std::vector<std::string> names;
      bool in_list = false;
      for (const auto &m : idn.matches) {
        names.push_back(label(m));
        in_list = in_list || allowed.count(label(m));
      }
      if (idn.verdict != Verdict::matched || !in_list) {
        if (!t.fail_rank) {
          t.fail_rank = rank;
          t.fail_item = {{"g", print_cycles(Permutation(g))},
                         {"verdict", to_string(idn.verdict)},
                         {"detail", idn.detail},
                         {"order", idn.order ? Json(*idn.order) : Json(nullptr)},
                         {"matches", names}};
        }
        continue;
      }
      std::string key;
      for (const auto &s : names)
        key += (key.empty() ? "" : " = ") + s;
      ++t.identified[key];
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < jobs; ++i)
      threads.emplace_back(worker, i);
    for (auto &th : threads)
      th.join();
  }

  ConverseTally sum;
  for (auto &t : tallies) {
    sum.representatives += t.representatives;
    sum.primitive += t.primitive;
    sum.alternating += t.alternating;
    sum.proper += t.proper;
    for (auto &[key, count] : t.identified)
      sum.identified[key] += count;
    if (t.fail_rank && (!sum.fail_rank || *t.fail_rank < *sum.fail_rank)) {
      sum.fail_rank = t.fail_rank;
      sum.fail_item = t.fail_item;
    }
    sum.out_of_time = sum.out_of_time || t.out_of_time;
  }
  r.witness["cycle"] = print_cycles(c);
  r.witness["scope"] = "groups <c, g> for g over centralizer-conjugacy representatives of S_n";
  r.witness["representatives"] = sum.representatives;
  r.witness["primitive"] = sum.primitive;
  r.witness["containing_alternating"] = sum.alternating;
  r.witness["proper_primitive"] = sum.proper;
  Json ids = Json::object();
  for (auto &[key, count] : sum.identified)
    ids[key] = count;
  r.witness["identified"] = std::move(ids);
  if (sum.fail_rank)
    note_failure(r, sum.fail_item);
  else if (sum.out_of_time)
    return out_of_time(std::move(r));
  return r;
}

namespace {

// Elements of the pointwise stabilizer of `points` that are single cycles
// of length n - points.size().
std::vector<Permutation> stabilizer_cycles(const GroupSpec &g, const std::vector<Point> &points,
                                           std::uint64_t &stab_order) {
  SgsOptions opts;
  opts.base_prefix = points;
  auto sgs = build_sgs(g, opts);
  stab_order = sgs.stabilizer_order(points.size());
  const std::size_t len = g.degree - points.size();
  std::vector<Permutation> out;
  sgs.for_each_element(
      [&](const Permutation &x) {
        if (x.moved_count() == len && as_single_cycle(x))
          out.push_back(x);
        return true;
      },
      points.size());
  return out;
}

} // namespace

CheckReport gamma_cycle_check(std::uint32_t p, std::uint32_t e) {
  CheckReport r = make_report("gamma_cycle_check", {{"p", p}, {"e", e}});
  const std::uint32_t q = static_cast<std::uint32_t>(checked_pow(p, e));
  r.params["q"] = q;
  const std::vector<Point> ends{0, q};

  auto gamma = projective_line_gamma(p, e, LineGroup::PGammaL2);
  auto pgl = build_sgs(projective_line_gamma(p, e, LineGroup::PGL2).spec);
  std::uint64_t stab_order = 0;
  auto cycles = stabilizer_cycles(gamma.spec, ends, stab_order);
  r.witness["stabilizer_order"] = stab_order;
  if (stab_order != std::uint64_t{q - 1} * e)
    note_failure(r, {{"problem", "stabilizer of 0 and inf has order " +
                                     std::to_string(stab_order)}});
  std::size_t in_pgl = 0;
  for (const auto &x : cycles) {
    if (pgl.contains(x))
      ++in_pgl;
    else
      note_failure(r, {{"cycle_outside_PGL2", print_cycles(x)}});
  }
  r.witness["cycles_in_stabilizer"] = cycles.size();
  r.witness["cycles_in_PGL2"] = in_pgl;

  if (p != 2) {
    auto scan = [&](LineGroup which, const char *key) {
      auto grp = projective_line_gamma(p, e, which);
      if (transitivity_degree(grp.spec) < 2) {
        note_failure(r, {{"problem", std::string(key) + " is not 2-transitive"}});
        return;
      }
      std::uint64_t order = 0;
      auto found = stabilizer_cycles(grp.spec, ends, order);
      r.witness[key] = {{"stabilizer_order", order}, {"cycles", found.size()}};
      if (!found.empty())
        note_failure(r, {{"group", key}, {"cycle", print_cycles(found.front())}});
    };
    scan(LineGroup::PSigmaL2, "PSigmaL2");
    if (e % 2 == 0)
      scan(LineGroup::M2, "M2");
  }
  return r;
}

CheckReport semilinear_order_identity_check(std::uint32_t p, std::uint32_t e, std::uint32_t f,
                                            FieldElement a) {
  if (f == 0 || e % f != 0)
    throw std::invalid_argument("semilinear_order_identity_check: f must divide e");
  if (a.is_zero())
    throw std::invalid_argument("semilinear_order_identity_check: a must be nonzero");
  CheckReport r = make_report("semilinear_order_identity_check",
                              {{"p", p}, {"e", e}, {"f", f}, {"a", a.code()}});
  auto field = make_field(p, e);
  const std::uint32_t d = e / f;
  const std::uint64_t q = field.size();
  std::uint64_t exponent = 0, pf = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    exponent += pf;
    pf *= checked_pow(p, f);
  }
  const FieldElement multiplier = field.pow(a, exponent);
  for (std::uint32_t code = 0; code < q; ++code) {
    FieldElement t(code), x = t;
    for (std::uint32_t i = 0; i < d; ++i)
      x = field.mul(a, field.frobenius(x, f));
    if (x != field.mul(multiplier, t)) {
      note_failure(r, {{"t", field.to_string(t)}, {"g^d(t)", field.to_string(x)}});
      break;
    }
  }
  const std::uint64_t order = field.multiplicative_order(multiplier);
  r.witness["d"] = d;
  r.witness["exponent"] = exponent;
  r.witness["multiplier"] = field.to_string(multiplier);
  r.witness["order"] = order;
  if ((q - 1) % exponent == 0) {
    r.witness["order_bound"] = (q - 1) / exponent;
    if (((q - 1) / exponent) % order != 0)
      note_failure(r, {{"problem", "order does not divide the bound"}});
  } else {
    r.witness["order_bound"] = nullptr;
  }
  return r;
}

CheckReport residue_orbit_check(std::uint32_t p, std::uint32_t e) {
  if (p == 2)
    throw std::invalid_argument("residue_orbit_check: q must be odd");
  CheckReport r = make_report("residue_orbit_check", {{"p", p}, {"e", e}});
  auto field = make_field(p, e);
  const std::uint32_t q = field.size();
  r.params["q"] = q;
  auto g = projective_line_gamma(p, e, LineGroup::PSigmaL2);
  auto stab = stabilizer(g.spec, {0, q});
  std::vector<std::vector<Point>> found;
  for (auto &o : orbits(stab))
    if (o.front() != 0 && o.front() != q)
      found.push_back(o);
  std::vector<Point> squares, others;
  for (std::uint32_t x = 1; x < q; ++x)
    (field.is_square(FieldElement(x)) ? squares : others).push_back(x);
  std::vector<std::vector<Point>> expected{squares, others};
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  auto show = [&](const std::vector<std::vector<Point>> &parts) {
    Json j = Json::array();
    for (const auto &part : parts) {
      Json s = Json::array();
      for (Point x : part)
        s.push_back(field.to_string(FieldElement(x)));
      j.push_back(std::move(s));
    }
    return j;
  };
  r.witness["orbits"] = show(found);
  if (found != expected)
    note_failure(r, {{"expected", show(expected)}});
  return r;
}

CheckReport mathieu_elimination_check(const std::string &name, std::size_t k) {
  static const std::set<std::string> names{"M11@11", "M11@12", "M12",   "M22",
                                           "AutM22", "M23",    "M24"};
  if (!names.count(name))
    throw std::invalid_argument("mathieu_elimination_check: unknown group '" + name + "'");
  auto g = sporadic(name);
  const unsigned t = transitivity_degree(g.spec);
  if (k < 2 || k > t)
    throw std::invalid_argument("mathieu_elimination_check: k must lie in 2.." +
                                std::to_string(t) + " for " + name);
  CheckReport r = make_report("mathieu_elimination_check", {{"group", name}, {"k", k}});
  std::vector<Point> points(k);
  std::iota(points.begin(), points.end(), Point{0});
  std::uint64_t order = 0;
  auto cycles = stabilizer_cycles(g.spec, points, order);
  r.witness["transitivity"] = t;
  r.witness["stabilizer_order"] = order;
  r.witness["cycles"] = cycles.size();
  if (!cycles.empty())
    note_failure(r, {{"cycle", print_cycles(cycles.front())}});
  return r;
}

CheckReport agl2_elimination_check(std::uint32_t d_max) {
  if (d_max < 3 || d_max > 60)
    throw std::invalid_argument("agl2_elimination_check: d_max must lie in 3..60");
  CheckReport r = make_report("agl2_elimination_check", {{"d_max", d_max}});
  Json rows = Json::array();
  for (std::uint32_t d = 3; d <= d_max; ++d) {
    const std::uint64_t value = (std::uint64_t{1} << d) - 1;
    auto factors = factorize(value);
    std::string shown;
    for (auto [prime, exp] : factors)
      shown += (shown.empty() ? "" : "*") + std::to_string(prime) +
               (exp > 1 ? "^" + std::to_string(exp) : "");
    Json row = {{"d", d}, {"value", value}, {"factors", shown}};
    const bool prime_power = factors.size() == 1;
    row["prime_power"] = prime_power;
    if (prime_power) {
      auto [prime, m] = factors.front();
      // p^m = -1 mod 4 forces m odd; then (p^m + 1)/(p + 1) is an odd factor
      // of 2^d, so it must be 1.
      row["mod4"] = value % 4;
      row["exponent_odd"] = m % 2 == 1;
      const std::uint64_t odd_factor = (value + 1) / (prime + 1);
      row["odd_factor"] = odd_factor;
      if (value % 4 != 3 || m % 2 == 0 || odd_factor != 1 || m != 1)
        note_failure(r, row);
    }
    const std::uint64_t index = value - 1; // 2^d - 2
    row["index_divides_d"] = d % index == 0;
    if (d % index == 0)
      note_failure(r, row);
    rows.push_back(std::move(row));
  }
  r.witness["rows"] = std::move(rows);
  return r;
}

CheckReport wreath_comment_check(std::uint32_t m, std::uint32_t blocks) {
  if (std::size_t{m} * blocks > 24)
    throw std::invalid_argument("wreath_comment_check: degree above 24");
  CheckReport r = make_report("wreath_comment_check", {{"m", m}, {"blocks", blocks}});
  auto g = wreath_imprimitive(m, blocks);
  const std::size_t n = g.spec.degree;
  auto sgs = build_sgs(g.spec);
  if (is_primitive(g.spec))
    note_failure(r, {{"problem", "group is primitive"}});

  std::set<std::size_t> ks;
  for (std::size_t k = m; k + 2 * m <= n; k += m)
    ks.insert(k);
  for (std::size_t k = n - m; k + 2 <= n; ++k)
    ks.insert(k);

  Json found = Json::object();
  for (std::size_t k : ks) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    if (k % m == 0 && k + 2 * m <= n) {
      // A cycle through the first r = blocks - k/m blocks, shifting block
      // i to block i + 1 and the last block back to the first with a twist.
      const std::size_t r_blocks = blocks - k / m;
      for (std::size_t b = 0; b < r_blocks; ++b)
        for (std::size_t t = 0; t < m; ++t)
          images[b * m + t] = static_cast<Point>(
              b + 1 < r_blocks ? (b + 1) * m + t : (t + 1) % m);
    } else {
      const std::size_t len = n - k;
      for (std::size_t i = 0; i < len; ++i)
        images[i] = static_cast<Point>((i + 1) % len);
    }
    Permutation x(std::move(images));
    auto sc = as_single_cycle(x);
    const bool ok = sc && sc->fixed == k && sgs.contains(x);
    found[std::to_string(k)] = print_cycles(x);
    if (!ok)
      note_failure(r, {{"k", k}, {"element", print_cycles(x)}});
  }
  r.witness["cycles"] = std::move(found);
  return r;
}

CheckReport coprime_comment_check(std::size_t trials, std::uint64_t seed) {
  CheckReport r = make_report("coprime_comment_check", {{"trials", trials}, {"seed", seed}});
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  // Cycles on consecutive points, relabelled by a random permutation.
  // Returns the permutation and the support of the first cycle.
  auto plant = [&](const std::vector<std::size_t> &lengths) {
    const std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    std::vector<Point> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Point{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::vector<Point>> cycles;
    std::size_t at = 0;
    for (std::size_t len : lengths) {
      std::vector<Point> cyc;
      for (std::size_t i = 0; i < len; ++i)
        cyc.push_back(relabel[at + i]);
      at += len;
      if (len > 1)
        cycles.push_back(cyc);
    }
    std::vector<Point> support(relabel.begin(), relabel.begin() + lengths.front());
    std::sort(support.begin(), support.end());
    return std::make_pair(Permutation::from_cycles(n, cycles), support);
  };

  auto check_positive = [&](const std::vector<std::size_t> &lengths) {
    auto [p, support] = plant(lengths);
    auto power = coprime_cycle_power(p);
    std::vector<Point> moved;
    if (power)
      for (Point x = 0; x < power->degree(); ++x)
        if ((*power)[x] != x)
          moved.push_back(x);
    auto sc = power ? as_single_cycle(*power) : std::nullopt;
    if (!sc || sc->length != lengths.front() || moved != support)
      note_failure(r, {{"planted", lengths}, {"permutation", print_cycles(p)}});
  };
  auto check_negative = [&](const std::vector<std::size_t> &lengths) {
    auto [p, support] = plant(lengths);
    if (auto power = coprime_cycle_power(p))
      note_failure(r, {{"planted", lengths},
                       {"permutation", print_cycles(p)},
                       {"unexpected", print_cycles(*power)}});
  };

  check_positive({5, 2, 2});
  check_positive({7, 3, 6});
  check_negative({2, 2});
  std::size_t positives = 2, negatives = 1;
  for (std::size_t i = 0; i < trials; ++i) {
    std::vector<std::size_t> lengths;
    if (i % 2 == 0) {
      const std::size_t len = uniform(2, 11);
      lengths.push_back(len);
      std::vector<std::size_t> allowed;
      for (std::size_t l = 1; l < len; ++l)
        if (std::gcd(l, len) == 1)
          allowed.push_back(l);
      for (std::size_t j = uniform(0, 4); j > 0; --j)
        lengths.push_back(allowed[uniform(0, allowed.size() - 1)]);
      check_positive(lengths);
      ++positives;
    } else {
      // every length even and at least two cycles: no coprime cycle
      for (std::size_t j = uniform(2, 4); j > 0; --j)
        lengths.push_back(2 * uniform(1, 4));
      check_negative(lengths);
      ++negatives;
    }
  }
  r.witness["planted"] = positives;
  r.witness["without_coprime_cycle"] = negatives;
  return r;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"forward", "converse", "gamma", "residues",
                                              "mathieu", "agl2",     "comments", "all"};
  return names;
}

namespace {

struct FieldSize {
  std::uint32_t p, e;
};

class SuiteRunner {
public:
  SuiteRunner(const VerifierConfig &config)
      : config_(config), deadline_(config.time_budget_seconds) {}

  void run(const std::string &check, Json params, const std::function<CheckReport()> &fn) {
    if (deadline_.expired()) {
      reports_.push_back(out_of_time(make_report(check, std::move(params))));
      return;
    }
    auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = fn();
    } catch (const std::exception &e) {
      r = make_report(check, std::move(params));
      note_failure(r, {{"error", e.what()}});
    }
    if (config_.timing)
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports_.push_back(std::move(r));
  }

  void forward() {
    const std::size_t n_max = config_.forward_max_degree;
    std::vector<SweepEntry> sweep;
    run("forward_check", {{"n_max", n_max}}, [&] {
      sweep = construction_sweep(n_max, config_, deadline_);
      if (deadline_.expired())
        return out_of_time(make_report("forward_check", {{"n_max", n_max}}));
      return forward_check(sweep, n_max, deadline_);
    });
    run("jordan_transitivity_check", {{"groups", 0}}, [&] {
      std::vector<CycleBearingGroup> groups;
      for (const auto &s : sweep)
        if (s.group && s.group->witness_cycle && is_primitive(s.group->spec))
          groups.push_back({s.group->spec, *s.group->witness_cycle});
      auto r = jordan_transitivity_check(groups);
      r.params["n_max"] = n_max;
      return r;
    });
  }

  void converse() {
    for (std::size_t n = 2; n <= config_.converse_max_degree; ++n)
      for (std::size_t k = 0; k + 2 <= n; ++k)
        run("converse_search", {{"n", n}, {"k", k}},
            [&] { return converse_search(n, k, config_, deadline_); });
  }

  void gamma() {
    static const FieldSize sizes[] = {{3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4},
                                      {2, 2}, {2, 3}, {2, 4}};
    for (auto [p, e] : sizes)
      run("gamma_cycle_check", {{"p", p}, {"e", e}}, [&] { return gamma_cycle_check(p, e); });
    for (auto [p, e] : sizes) {
      auto field = make_field(p, e);
      const FieldElement w = field.primitive_element();
      for (std::uint32_t f = 1; f <= e; ++f) {
        if (e % f)
          continue;
        for (FieldElement a : {w, field.mul(w, w)})
          run("semilinear_order_identity_check",
              {{"p", p}, {"e", e}, {"f", f}, {"a", a.code()}},
              [&] { return semilinear_order_identity_check(p, e, f, a); });
      }
    }
  }

  void residues() {
    static const FieldSize sizes[] = {{5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}};
    for (auto [p, e] : sizes)
      run("residue_orbit_check", {{"p", p}, {"e", e}}, [&] { return residue_orbit_check(p, e); });
  }

  void mathieu() {
    static const std::pair<const char *, std::size_t> cases[] = {
        {"M11@11", 2}, {"M11@11", 3}, {"M11@12", 2}, {"M12", 2}, {"M12", 3},
        {"M12", 4},    {"M22", 2},    {"AutM22", 2}, {"M23", 2}, {"M23", 3},
        {"M24", 2},    {"M24", 3},    {"M24", 4}};
    for (auto [name, k] : cases)
      run("mathieu_elimination_check", {{"group", name}, {"k", k}},
          [&] { return mathieu_elimination_check(name, k); });
  }

  void agl2() {
    run("agl2_elimination_check", {{"d_max", 40}}, [] { return agl2_elimination_check(40); });
  }

  void comments() {
    for (std::uint32_t m = 2; m <= 12; ++m)
      for (std::uint32_t b = 2; m * b <= 24; ++b)
        run("wreath_comment_check", {{"m", m}, {"blocks", b}},
            [&] { return wreath_comment_check(m, b); });
    run("coprime_comment_check", {{"trials", 1000}, {"seed", config_.seed}},
        [&] { return coprime_comment_check(1000, config_.seed); });
  }

  std::vector<CheckReport> take() { return std::move(reports_); }

private:
  const VerifierConfig &config_;
  Deadline deadline_;
  std::vector<CheckReport> reports_;
};

} // namespace

std::vector<CheckReport> run_suite(const std::string &suite, const VerifierConfig &config) {
  SuiteRunner runner(config);
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (all || suite == "forward")
    runner.forward();
  if (all || suite == "converse")
    runner.converse();
  if (all || suite == "gamma")
    runner.gamma();
  if (all || suite == "residues")
    runner.residues();
  if (all || suite == "mathieu")
    runner.mathieu();
  if (all || suite == "agl2")
    runner.agl2();
  if (all || suite == "comments")
    runner.comments();
  return runner.take();
}

} // namespace primcycle
