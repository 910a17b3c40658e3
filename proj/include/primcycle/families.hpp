#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primcycle/field.hpp"
#include "primcycle/group.hpp"

namespace primcycle {

/// Cases of the classification of primitive groups containing a cycle:
/// 1x have an n-cycle (k = 0), 2x an (n-1)-cycle (k = 1), 3 an (n-2)-cycle
/// (k = 2). `aux` marks groups used only by the verification checks.
enum class CaseTag { c1a, c1b, c1c, c2a, c2b, c2c, c3, aux };

std::string to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view s);

/// Fixed-point count of the witness cycle for a case; nullopt for aux.
std::optional<std::size_t> case_fixed_points(CaseTag tag);

/// One case of the table, or one concrete group inside it.
///
/// `param` selects the group inside a sandwich and is 0 for the whole
/// sandwich:
///   1a       m = |G : C_p|, a divisor of p - 1
///   1b 2a 3  Frobenius step s dividing e; the group is the bottom group
///            extended by the field automorphism t -> t^(p^s) (s = e: none)
/// `name` identifies sporadic groups (1c, 2c, aux), the 2b choice "L2" or
/// "PGL2", and aux groups ("L2", "PSigmaL2", "M2", "wreath").
struct FamilyDescriptor {
  CaseTag tag = CaseTag::aux;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t d = 0;
  std::size_t n = 0;
  std::uint32_t param = 0;
  std::string name;
  std::uint32_t block_size = 0; // wreath only
  std::uint32_t blocks = 0;     // wreath only

  std::uint64_t q() const;
  bool is_sandwich() const noexcept;
  /// Readable group name, e.g. "PGammaL_2(9)" or "C_11:C_5".
  std::string group_name() const;
  /// Short variant tag, e.g. "m=5", "s=1", "M11@12".
  std::string variant() const;

  bool operator==(const FamilyDescriptor &) const = default;
};

struct ConstructedGroup {
  GroupSpec spec;
  FamilyDescriptor descriptor;
  /// An (n-k)-cycle in the group with the case's k.
  std::optional<Permutation> witness_cycle;
};

/// Raised when embedded or supplied generator data fails its load-time check.
class DataVerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// <t -> t+1, t -> g^((p-1)/m) t> on Z_p, g the least primitive root.
ConstructedGroup affine_line(std::uint32_t p, std::uint32_t m);

/// PGL_d(q) extended by t -> t^(p^s), acting on the (q^d-1)/(q-1) points of
/// projective space. Points are vectors with last nonzero coordinate 1,
/// ordered lexicographically (first coordinate most significant).
ConstructedGroup projective(std::uint32_t d, std::uint32_t p, std::uint32_t e,
                            std::uint32_t frobenius_step);

/// AGL_d(q) extended by t -> t^(p^s), acting on GF(q)^d in lexicographic
/// order.
ConstructedGroup affine_space(std::uint32_t d, std::uint32_t p, std::uint32_t e,
                              std::uint32_t frobenius_step);

enum class LineGroup { L2, PGL2, PSigmaL2, M2, PGammaL2, intermediate };

/// L_2(p) or PGL_2(p) on the projective line, p >= 5 prime.
ConstructedGroup psl2_pgl2(std::uint32_t p, LineGroup which);

/// Groups between L_2(q) and PGammaL_2(q) on GF(q) u {inf}; the point t has
/// index code(t) and inf has index q. `intermediate` is <PGL_2(q),
/// t -> t^(p^s)> with s = frobenius_step.
ConstructedGroup projective_line_gamma(std::uint32_t p, std::uint32_t e, LineGroup which,
                                       std::uint32_t frobenius_step = 0);

/// Names accepted by sporadic().
const std::vector<std::string> &sporadic_names();

struct GeneratorFile {
  std::size_t degree = 0;
  std::uint64_t expected_order = 0;
  unsigned expected_transitivity = 0;
  std::vector<Permutation> generators;
};

/// Parses the generator file format:
///   degree <n>
///   expect order=<O> transitivity=<t>
///   <one permutation per line, 1-based cycle notation>
/// Blank lines and lines starting with '#' are ignored. Throws
/// std::invalid_argument naming the offending line.
GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const GeneratorFile &file);

std::string_view embedded_sporadic_data(std::string_view name);

/// Descriptor of a sporadic group without building it.
FamilyDescriptor sporadic_descriptor(std::string_view name);

/// Builds and verifies a sporadic group from the embedded data.
ConstructedGroup sporadic(std::string_view name);
/// Same, from caller-supplied data (used to exercise the verification path).
ConstructedGroup sporadic_from_data(std::string_view name, std::string_view data);

/// S_m wr S_blocks on m*blocks points; block i is {i*m, ..., i*m+m-1}.
ConstructedGroup wreath_imprimitive(std::uint32_t m, std::uint32_t blocks);

/// Closed-form group order for a concrete descriptor (not a sandwich).
std::uint64_t expected_order(const FamilyDescriptor &d);

/// Concrete groups in a sandwich descriptor, bottom first; a concrete
/// descriptor yields itself.
std::vector<FamilyDescriptor> sandwich_members(const FamilyDescriptor &d);

ConstructedGroup instantiate(const FamilyDescriptor &d);

} // namespace primcycle
