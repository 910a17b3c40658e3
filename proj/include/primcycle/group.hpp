#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "primcycle/perm.hpp"

namespace primcycle {

/// A permutation group given by generators. An empty generator list is the
/// trivial group.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::string> label;

  GroupSpec() = default;
  GroupSpec(std::size_t n, std::vector<Permutation> gens,
            std::optional<std::string> name = std::nullopt);

  /// Throws std::invalid_argument unless every generator has degree `degree`.
  void validate() const;
};

struct SgsOptions {
  /// Points forced to the front of the base, in order.
  std::vector<Point> base_prefix;
  /// Stop as soon as the product of basic orbit lengths (a lower bound on the
  /// group order) reaches this value. 0 disables. A truncated build answers
  /// only order_lower_bound().
  std::uint64_t stop_at_order = 0;
};

/// Base and strong generating set from deterministic Schreier-Sims. New base
/// points are the smallest point moved by the generator that needs them.
/// Transversal elements map the base point of their level to the orbit point.
class StrongGeneratingSet {
public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position; // point -> index in orbit or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::vector<std::size_t> tested; // Schreier generators checked per orbit point
  };

  static StrongGeneratingSet build(const GroupSpec &group, const SgsOptions &options = {});

  std::size_t degree() const noexcept { return degree_; }
  bool complete() const noexcept { return complete_; }
  const std::vector<Level> &levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Exact order; std::overflow_error beyond 64 bits, std::logic_error for a
  /// truncated build.
  std::uint64_t order() const;
  /// Product of basic orbit lengths, saturating at UINT64_MAX.
  std::uint64_t order_lower_bound() const noexcept;

  /// Sifts from `from_level`; returns the residue and the level it stopped at
  /// (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation &p,
                                           std::size_t from_level = 0) const;

  /// Membership by sifting. Throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation &p) const;

  /// Generators of the subgroup fixing the base points of levels < level.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;
  std::uint64_t stabilizer_order(std::size_t level) const;

  /// Depth-first enumeration of the elements of the stabilizer of the first
  /// `from_level` base points, as products of transversal elements.
  /// The visitor returns false to stop early.
  void for_each_element(const std::function<bool(const Permutation &)> &visit,
                        std::size_t from_level = 0) const;

  /// Uniformly random element of the stabilizer of the first `from_level`
  /// base points.
  Permutation random_element(std::mt19937_64 &rng, std::size_t from_level = 0) const;

  std::vector<Permutation> strong_generators() const;

private:
  std::size_t degree_ = 0;
  bool complete_ = true;
  std::vector<Level> levels_;
};

inline StrongGeneratingSet build_sgs(const GroupSpec &group,
                                     const SgsOptions &options = {}) {
  return StrongGeneratingSet::build(group, options);
}

/// Pointwise stabilizer of the listed points, as generators.
GroupSpec stabilizer(const GroupSpec &group, const std::vector<Point> &points);

/// Orbit of a point under the generators, in discovery order.
std::vector<Point> orbit(const GroupSpec &group, Point x);

/// Orbit partition; each orbit sorted, orbits ordered by least point.
std::vector<std::vector<Point>> orbits(const GroupSpec &group);

bool is_transitive(const GroupSpec &group);

/// Partition of the points into blocks; blocks sorted by least point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const noexcept { return blocks.empty() ? 0 : blocks[0].size(); }
  bool trivial() const noexcept { return blocks.size() <= 1 || block_size() == 1; }
};

/// Finest block system with alpha and beta in one block. Throws
/// std::invalid_argument when the group is intransitive or alpha == beta.
BlockSystem minimal_blocks(const GroupSpec &group, Point alpha, Point beta);

/// Some nontrivial block system, if any.
std::optional<BlockSystem> find_nontrivial_blocks(const GroupSpec &group);

bool is_primitive(const GroupSpec &group);

/// Largest t with the group t-transitive (0 when intransitive). For groups
/// not containing A_n a result of 6 or more raises std::logic_error, since no
/// such finite group exists.
unsigned transitivity_degree(const GroupSpec &group);

/// True iff the group contains A_n on its n points. Uses the order bound
/// n!/2 while n! fits in 64 bits, and membership of the 3-cycles (1 2 i)
/// otherwise.
bool contains_alternating(const GroupSpec &group);

enum class SearchStatus { found, certified_absent, inconclusive };

const char *to_string(SearchStatus s);

struct SearchConfig {
  /// Groups up to this order are scanned exhaustively.
  std::uint64_t exhaustive_cap = 1'000'000;
  /// Random elements drawn above the cap.
  std::uint64_t sample_budget = 200'000;
  std::uint64_t seed = 0x5eedULL;
};

struct CycleSearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Permutation> witness;
  std::uint64_t examined = 0;
  bool exhaustive = false;
};

/// An element that is an (n-k)-cycle fixing k points. Exhaustive scans use
/// the depth-first transversal order, so the witness is reproducible.
CycleSearchResult find_cycle_with_fixed(const GroupSpec &group, std::size_t k,
                                        const SearchConfig &config = {});
CycleSearchResult find_cycle_with_fixed(const StrongGeneratingSet &sgs, std::size_t k,
                                        const SearchConfig &config = {});

/// One pass over the group recording, for every k, the first element that is
/// an (n-k)-cycle with k fixed points.
struct CycleCensus {
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::vector<std::optional<Permutation>> by_fixed; // index k, size n - 1
};

CycleCensus cycle_census(const StrongGeneratingSet &sgs, const SearchConfig &config = {});

} // namespace primcycle
