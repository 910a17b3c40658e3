#include "primcycle/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "primcycle/arith.hpp"

namespace primcycle {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[c[i]])
        throw std::invalid_argument("cycles are not disjoint");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::moved_count() const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    c += images_[i] != i;
  return c;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return std::nullopt;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse(*this) : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  // Walk each cycle once: x maps to the element k steps further along.
  std::vector<Point> out(degree());
  std::vector<bool> done(degree(), false);
  std::vector<Point> cyc;
  for (Point start = 0; start < degree(); ++start) {
    if (done[start])
      continue;
    cyc.clear();
    for (Point x = start; !done[x]; x = base.images_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    std::size_t shift = k % cyc.size();
    for (std::size_t i = 0; i < cyc.size(); ++i)
      out[cyc[i]] = cyc[(i + shift) % cyc.size()];
  }
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  const CycleType type = cycle_type(*this);
  for (auto len : type.lengths())
    r = checked_lcm(r, len);
  return r;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  const CycleType type = cycle_type(*this);
  for (auto len : type.lengths())
    transpositions += len - 1;
  return transpositions % 2 == 0;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = p[q[static_cast<Point>(x)]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[p[static_cast<Point>(x)]] = static_cast<Point>(x);
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // (g p g^-1)(g(x)) = g(p(x))
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    images[g[x]] = g[p[x]];
  return Permutation(std::move(images));
}

CycleType::CycleType(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

std::size_t CycleType::degree() const noexcept {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::size_t{0});
}

std::size_t CycleType::fixed_points() const noexcept {
  return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), 1u));
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lengths_.size(); ++i)
    os << (i ? "," : "") << lengths_[i];
  os << '}';
  return os.str();
}

CycleType cycle_type(const Permutation &p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start])
      continue;
    std::size_t len = 0;
    for (Point x = start; !done[x]; x = p[x]) {
      done[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::vector<std::vector<Point>> cycles(const Permutation &p, bool include_fixed) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start])
      continue;
    std::vector<Point> c;
    for (Point x = start; !done[x]; x = p[x]) {
      done[x] = true;
      c.push_back(x);
    }
    if (c.size() > 1 || include_fixed)
      result.push_back(std::move(c));
  }
  return result;
}

std::optional<SingleCycle> as_single_cycle(const Permutation &p) {
  auto start = p.smallest_moved_point();
  if (!start)
    return std::nullopt;
  std::size_t len = 0;
  Point x = *start;
  do {
    x = p[x];
    ++len;
  } while (x != *start);
  if (len != p.moved_count())
    return std::nullopt;
  return SingleCycle{len, p.degree() - len};
}

std::optional<Permutation> coprime_cycle_power(const Permutation &p) {
  const CycleType type = cycle_type(p);
  const auto &lengths = type.lengths();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::size_t len = lengths[i];
    if (len < 2)
      break; // sorted descending; only fixed points remain
    std::uint64_t others = 1;
    bool coprime = true;
    for (std::size_t j = 0; j < lengths.size() && coprime; ++j) {
      if (j == i)
        continue;
      coprime = std::gcd(len, lengths[j]) == 1;
      others = std::lcm<std::uint64_t>(others, lengths[j]);
    }
    if (coprime)
      return p.pow(static_cast<std::int64_t>(others));
  }
  return std::nullopt;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError(std::string("expected '(' but found '") + text[i] + "'", i);
    ++i;
    std::vector<Point> cyc;
    bool closed = false;
    while (true) {
      skip_ws();
      if (i >= text.size())
        break;
      if (text[i] == ')') {
        ++i;
        closed = true;
        break;
      }
      if (text[i] == ',') {
        if (cyc.empty())
          throw ParseError("unexpected ','", i);
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected a point after ','", i);
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      std::size_t tok = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > degree + 1)
          value = degree + 1; // saturate; reported as out of range below
        ++i;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::string(text.substr(tok, i - tok)) +
                             " out of range 1.." + std::to_string(degree),
                         tok);
      Point x = static_cast<Point>(value - 1);
      if (used[x])
        throw ParseError("repeated point " + std::to_string(value), tok);
      used[x] = true;
      cyc.push_back(x);
    }
    if (!closed)
      throw ParseError("unterminated cycle: missing ')'", i);
    for (std::size_t j = 0; j < cyc.size(); ++j)
      images[cyc[j]] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::string print_cycles(const Permutation &p) {
  auto cs = cycles(p);
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace primcycle
