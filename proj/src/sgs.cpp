#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "primcycle/arith.hpp"
#include "primcycle/group.hpp"

namespace primcycle {

namespace {

using Images = std::vector<Point>;

// out = a o b
void compose_into(Images &out, std::span<const Point> a, std::span<const Point> b) {
  out.resize(b.size());
  for (std::size_t x = 0; x < b.size(); ++x)
    out[x] = a[b[x]];
}

bool is_identity(std::span<const Point> p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x)
      return false;
  return true;
}

Point smallest_moved(std::span<const Point> p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x)
      return static_cast<Point>(x);
  throw std::logic_error("identity has no moved point");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    return std::numeric_limits<std::uint64_t>::max();
  return r;
}

} // namespace

GroupSpec::GroupSpec(std::size_t n, std::vector<Permutation> gens,
                     std::optional<std::string> name)
    : degree(n), generators(std::move(gens)), label(std::move(name)) {
  validate();
}

void GroupSpec::validate() const {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) +
                                  " in a group of degree " + std::to_string(degree));
}

namespace {

class SchreierSims {
public:
  using Level = StrongGeneratingSet::Level;

  SchreierSims(std::size_t n, std::vector<Level> &levels, std::uint64_t stop_at)
      : n_(n), levels_(levels), stop_at_(stop_at) {}

  void add_level(Point base) {
    Level l;
    l.base = base;
    l.orbit = {base};
    l.position.assign(n_, -1);
    l.position[base] = 0;
    l.transversal.emplace_back(n_);
    l.inverse_transversal.emplace_back(n_);
    l.tested.push_back(0);
    levels_.push_back(std::move(l));
  }

  // Returns false when the order bound was reached.
  bool run(const std::vector<Permutation> &gens) {
    for (const auto &g : gens) {
      if (g.is_identity())
        continue;
      auto [residue, stop] = sift(g.images(), 0);
      if (is_identity(residue))
        continue;
      if (stop == levels_.size())
        add_level(smallest_moved(residue));
      Permutation r(std::move(residue));
      for (std::size_t l = 0; l <= stop; ++l)
        levels_[l].generators.push_back(r);
    }
    if (levels_.empty())
      return true;

    std::size_t i = levels_.size() - 1;
    while (true) {
      if (bound_reached())
        return false;
      std::optional<std::size_t> jump = process_level(i);
      if (bound_reached())
        return false;
      if (jump) {
        i = *jump;
        continue;
      }
      if (i == 0)
        return true;
      --i;
    }
  }

  std::pair<Images, std::size_t> sift(std::span<const Point> p, std::size_t from) const {
    Images h(p.begin(), p.end()), tmp;
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level &lev = levels_[l];
      Point beta = h[lev.base];
      std::int32_t pos = lev.position[beta];
      if (pos < 0)
        return {std::move(h), l};
      compose_into(tmp, lev.inverse_transversal[pos].images(), h);
      std::swap(h, tmp);
    }
    return {std::move(h), levels_.size()};
  }

private:
  bool bound_reached() const {
    if (stop_at_ == 0)
      return false;
    std::uint64_t b = 1;
    for (const auto &l : levels_)
      b = saturating_mul(b, l.orbit.size());
    return b >= stop_at_;
  }

  // Tests untested Schreier generators at level i. Returns the level to
  // resume at when a new strong generator was added.
  std::optional<std::size_t> process_level(std::size_t i) {
    Images schreier, tmp;
    for (std::size_t a = 0; a < levels_[i].orbit.size(); ++a) {
      while (levels_[i].tested[a] < levels_[i].generators.size()) {
        Level &lev = levels_[i];
        const std::size_t t = lev.tested[a]++;
        const Permutation &s = lev.generators[t];
        const Point beta = lev.orbit[a];
        const Point gamma = s[beta];
        if (lev.position[gamma] < 0) {
          Images u;
          compose_into(u, s.images(), lev.transversal[a].images());
          Permutation up(std::move(u));
          lev.position[gamma] = static_cast<std::int32_t>(lev.orbit.size());
          lev.orbit.push_back(gamma);
          lev.inverse_transversal.push_back(inverse(up));
          lev.transversal.push_back(std::move(up));
          lev.tested.push_back(0);
          if (stop_at_ && bound_reached())
            return std::nullopt;
          continue;
        }
        // u_gamma^-1 s u_beta fixes the base point of this level.
        compose_into(tmp, s.images(), lev.transversal[a].images());
        compose_into(schreier, lev.inverse_transversal[lev.position[gamma]].images(), tmp);
        if (is_identity(schreier))
          continue;
        auto [residue, stop] = sift(schreier, i + 1);
        if (is_identity(residue))
          continue;
        if (stop == levels_.size())
          add_level(smallest_moved(residue));
        Permutation r(std::move(residue));
        for (std::size_t l = i + 1; l <= stop; ++l)
          levels_[l].generators.push_back(r);
        return stop;
      }
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<Level> &levels_;
  std::uint64_t stop_at_;
};

} // namespace

StrongGeneratingSet StrongGeneratingSet::build(const GroupSpec &group,
                                               const SgsOptions &options) {
  group.validate();
  StrongGeneratingSet s;
  s.degree_ = group.degree;
  SchreierSims ss(group.degree, s.levels_, options.stop_at_order);
  for (Point b : options.base_prefix) {
    if (b >= group.degree)
      throw std::invalid_argument("base point out of range");
    for (const auto &l : s.levels_)
      if (l.base == b)
        throw std::invalid_argument("repeated base point");
    ss.add_level(b);
  }
  s.complete_ = ss.run(group.generators);
  return s;
}

std::vector<Point> StrongGeneratingSet::base() const {
  std::vector<Point> b;
  for (const auto &l : levels_)
    b.push_back(l.base);
  return b;
}

std::uint64_t StrongGeneratingSet::order() const {
  if (!complete_)
    throw std::logic_error("order of a truncated stabilizer chain");
  std::uint64_t r = 1;
  for (const auto &l : levels_)
    r = checked_mul(r, l.orbit.size());
  return r;
}

std::uint64_t StrongGeneratingSet::order_lower_bound() const noexcept {
  std::uint64_t r = 1;
  for (const auto &l : levels_)
    r = saturating_mul(r, l.orbit.size());
  return r;
}

std::pair<Permutation, std::size_t> StrongGeneratingSet::sift(const Permutation &p,
                                                              std::size_t from_level) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("sift: degree mismatch");
  Images h(p.images().begin(), p.images().end()), tmp;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level &lev = levels_[l];
    std::int32_t pos = lev.position[h[lev.base]];
    if (pos < 0)
      return {Permutation(std::move(h)), l};
    compose_into(tmp, lev.inverse_transversal[pos].images(), h);
    std::swap(h, tmp);
  }
  return {Permutation(std::move(h)), levels_.size()};
}

bool StrongGeneratingSet::contains(const Permutation &p) const {
  if (!complete_)
    throw std::logic_error("membership in a truncated stabilizer chain");
  auto [residue, stop] = sift(p);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StrongGeneratingSet::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size())
    return {};
  return levels_[level].generators;
}

std::uint64_t StrongGeneratingSet::stabilizer_order(std::size_t level) const {
  std::uint64_t r = 1;
  for (std::size_t l = level; l < levels_.size(); ++l)
    r = checked_mul(r, levels_[l].orbit.size());
  return r;
}

void StrongGeneratingSet::for_each_element(
    const std::function<bool(const Permutation &)> &visit, std::size_t from_level) const {
  const std::size_t depth = levels_.size();
  if (from_level >= depth) {
    visit(Permutation(degree_));
    return;
  }
  // prefix[l] = product of the chosen transversal elements above level l
  std::vector<Images> prefix(depth - from_level + 1);
  prefix[0].resize(degree_);
  std::iota(prefix[0].begin(), prefix[0].end(), Point{0});
  std::vector<std::size_t> choice(depth - from_level, 0);
  const std::size_t span = depth - from_level;

  std::size_t d = 0;
  while (true) {
    const Level &lev = levels_[from_level + d];
    compose_into(prefix[d + 1], prefix[d], lev.transversal[choice[d]].images());
    if (d + 1 < span) {
      ++d;
      choice[d] = 0;
      continue;
    }
    if (!visit(Permutation(prefix[span])))
      return;
    // advance odometer
    while (true) {
      if (++choice[d] < levels_[from_level + d].orbit.size())
        break;
      if (d == 0)
        return;
      --d;
    }
  }
}

Permutation StrongGeneratingSet::random_element(std::mt19937_64 &rng,
                                                std::size_t from_level) const {
  Images acc(degree_), tmp;
  std::iota(acc.begin(), acc.end(), Point{0});
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level &lev = levels_[l];
    std::uniform_int_distribution<std::size_t> pick(0, lev.orbit.size() - 1);
    compose_into(tmp, acc, lev.transversal[pick(rng)].images());
    std::swap(acc, tmp);
  }
  return Permutation(std::move(acc));
}

std::vector<Permutation> StrongGeneratingSet::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto &l : levels_)
    for (const auto &g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

} // namespace primcycle
