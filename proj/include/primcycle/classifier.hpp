#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primcycle/families.hpp"
#include "primcycle/group.hpp"

namespace primcycle {

/// A field size q = p^e together with a dimension d.
struct FieldDim {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t d = 0;
  std::uint64_t q() const;
  bool operator==(const FieldDim &) const = default;
};

/// Prime-power solutions of the degree formulas at n.
struct DegreeEquations {
  std::size_t n = 0;
  bool prime = false;                      // n = p
  std::vector<FieldDim> projective;        // n = (q^d - 1)/(q - 1), d >= 2
  std::vector<FieldDim> affine;            // n = q^d, d >= 1
  std::optional<FieldDim> line;            // n = q + 1 (d = 2)
  bool line_prime_at_least_5 = false;      // n = p + 1, p >= 5 prime
};

/// Throws std::invalid_argument for n < 2.
DegreeEquations solve_degree_equations(std::size_t n);

struct CaseEntry {
  FamilyDescriptor descriptor;
  std::string note;
};

/// Groups of degree n not containing A_n that contain an (n-k)-cycle with k
/// fixed points, as family descriptors (sandwiches unexpanded). A_n and S_n
/// are listed separately in every answer.
struct CaseList {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<CaseEntry> cases;
  std::vector<std::string> unconditional; // "A_n", "S_n" with n substituted
};

/// Throws std::invalid_argument unless n >= 2 and k <= n - 2.
CaseList classify(std::size_t n, std::size_t k);

enum class Verdict { contains_alternating, matched, inconsistent_with_theorem, inapplicable };
enum class Inapplicable { none, trivial_degree, intransitive, imprimitive, no_cycle, cycle_unverified };

const char *to_string(Verdict v);
const char *to_string(Inapplicable r);

struct Identification {
  Verdict verdict = Verdict::inapplicable;
  Inapplicable reason = Inapplicable::none;
  std::size_t degree = 0;
  std::optional<std::uint64_t> order; // absent when it exceeds 64 bits
  unsigned transitivity = 0;
  bool primitive = false;
  /// Smallest fixed-point count k seen on a single-cycle element, with that
  /// element, and whether the scan behind it was exhaustive.
  std::optional<std::size_t> k;
  std::optional<Permutation> witness;
  bool cycle_scan_exhaustive = false;
  /// Every k <= n - 2 realized by some scanned single-cycle element.
  std::vector<std::size_t> cycle_fixed_counts;
  std::vector<FamilyDescriptor> matches;
  /// Set when the conjugacy search ran (degree within the configured limit).
  std::optional<bool> conjugacy_confirmed;
  std::string detail;
};

struct IdentifyOptions {
  SearchConfig search;
  std::size_t conjugacy_max_degree = 16;
};

/// Identifies groups against the case lists. Candidate groups are built once
/// and cached; an instance is not safe for concurrent use.
class Identifier {
public:
  explicit Identifier(IdentifyOptions options = {});
  ~Identifier();
  Identifier(Identifier &&) noexcept;
  Identifier &operator=(Identifier &&) noexcept;

  Identification identify(const GroupSpec &group);

private:
  struct Candidate;
  Candidate &candidate(const FamilyDescriptor &d);

  IdentifyOptions options_;
  std::vector<std::pair<FamilyDescriptor, std::unique_ptr<Candidate>>> cache_;
};

Identification identify(const GroupSpec &group, const IdentifyOptions &options = {});

/// True iff some sigma in S_n has sigma G sigma^-1 = H. `c` must be an
/// (n-k)-cycle in G; the search runs over the (n-k)-cycles of H.
bool conjugate_in_symmetric(const GroupSpec &g, const Permutation &c, const GroupSpec &h);

} // namespace primcycle
