#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primcycle {

/// Points are 0-based internally; all text I/O uses 1-based points.
using Point = std::uint32_t;

/// Thrown by parse_cycles. `position` is the 0-based character offset of the
/// offending token in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at column " + std::to_string(position + 1)),
        message_(what), position_(position) {}

  /// The message without the position suffix.
  const std::string &message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string message_;
  std::size_t position_;
};

/// A bijection on {0, ..., n-1} stored as its image table. The degree is
/// explicit and never inferred from the moved points.
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::size_t moved_count() const noexcept;
  std::optional<Point> smallest_moved_point() const noexcept;

  /// p^e for any integer e (negative exponents use the inverse).
  Permutation pow(std::int64_t e) const;

  /// Least common multiple of the cycle lengths. Throws std::overflow_error if
  /// it does not fit in 64 bits.
  std::uint64_t order() const;

  bool is_even() const;

  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<Point> images_;
};

/// compose(p, q) maps x to p(q(x)): the right factor is applied first.
/// This order is used everywhere in the library.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

Permutation inverse(const Permutation &p);

/// g p g^-1
Permutation conjugate(const Permutation &p, const Permutation &g);

/// Cycle lengths (fixed points count as 1), sorted in decreasing order.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> lengths);

  const std::vector<std::size_t> &lengths() const noexcept { return lengths_; }
  std::size_t degree() const noexcept;
  std::size_t fixed_points() const noexcept;

  bool operator==(const CycleType &) const = default;
  auto operator<=>(const CycleType &) const = default;

  std::string to_string() const;

private:
  std::vector<std::size_t> lengths_;
};

CycleType cycle_type(const Permutation &p);

/// Canonical cycles: each starts at its least point, cycles sorted by least
/// point. Fixed points are omitted unless `include_fixed` is set.
std::vector<std::vector<Point>> cycles(const Permutation &p,
                                       bool include_fixed = false);

struct SingleCycle {
  std::size_t length;
  std::size_t fixed;
  bool operator==(const SingleCycle &) const = default;
};

/// (n-k, k) when p is one (n-k)-cycle with n-k >= 2 plus k fixed points.
std::optional<SingleCycle> as_single_cycle(const Permutation &p);

/// When p has a cycle whose length L >= 2 is coprime to every other cycle
/// length, returns p^m (m = lcm of the other lengths), which is that L-cycle
/// alone. With several candidates the longest one is used.
std::optional<Permutation> coprime_cycle_power(const Permutation &p);

/// Parses 1-based disjoint cycle notation such as "(1 2 3)(5 6)". Points may
/// be separated by whitespace or commas. "" and "()" give the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical 1-based cycle notation; the identity prints as "()".
std::string print_cycles(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace primcycle
