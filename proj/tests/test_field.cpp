#include <doctest.h>

#include <array>
#include <set>

#include "primcycle/arith.hpp"
#include "primcycle/field.hpp"

using namespace primcycle;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// All (p, e) with p^e <= bound.
std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields(std::uint32_t bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (!trial_division_prime(p))
      continue;
    std::uint64_t q = p;
    for (std::uint32_t e = 1; q <= bound; ++e, q *= p)
      out.emplace_back(p, e);
  }
  return out;
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("arithmetic helpers against trial division") {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    CHECK(is_prime(n) == trial_division_prime(n));
    if (n < 2)
      continue;
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(trial_division_prime(p));
      prod *= checked_pow(p, e);
    }
    CHECK(prod == n);
    auto pp = as_prime_power(n);
    auto f = factorize(n);
    CHECK(static_cast<bool>(pp) == (f.size() == 1));
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0)
        divs.push_back(d);
    if (n < 500)
      CHECK(divisors(n) == divs);
  }
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_FALSE(factorial(21));
  CHECK_THROWS_AS(checked_mul(1ULL << 40, 1ULL << 40), std::overflow_error);
}

TEST_CASE("make_field") {
  auto f2 = make_field(2, 1);
  CHECK(f2.size() == 2);
  CHECK(std::vector<std::uint32_t>(f2.modulus().begin(), f2.modulus().end()) ==
        std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);

  SUBCASE("GF(9) uses the smallest irreducible monic quadratic") {
    // Monic quadratics x^2 + b x + c ordered by (b, c) as base-3 digits, constant first.
    std::vector<std::uint32_t> smallest;
    for (std::uint32_t code = 0; code < 9 && smallest.empty(); ++code) {
      std::uint32_t c = code % 3, b = code / 3;
      bool root = false;
      for (std::uint32_t x = 0; x < 3; ++x)
        root |= (x * x + b * x + c) % 3 == 0;
      if (!root)
        smallest = {c, b, 1};
    }
    auto f9 = make_field(3, 2);
    CHECK(std::vector<std::uint32_t>(f9.modulus().begin(), f9.modulus().end()) == smallest);
  }
}

TEST_CASE("field axioms and Fermat for every q <= 64") {
  for (auto [p, e] : small_fields(64)) {
    CAPTURE(p);
    CAPTURE(e);
    auto f = make_field(p, e);
    const std::uint32_t q = f.size();
    CHECK(q == checked_pow(p, e));
    for (std::uint32_t a = 0; a < q; ++a) {
      auto x = f.element(a);
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.mul(x, f.one()) == x);
      CHECK(f.frobenius(x, 0) == x);
      CHECK(f.frobenius(x, e) == x);
      if (!x.is_zero()) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.pow(x, q - 1) == f.one());
        CHECK(f.exp(f.log(x)) == x);
      }
      for (std::uint32_t b = 0; b < q; b += 1 + q / 8) {
        auto y = f.element(b);
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(f.add(x, y), y) == x);
        // Frobenius is a ring homomorphism.
        CHECK(f.frobenius(f.mul(x, y), 1) == f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
        CHECK(f.frobenius(f.add(x, y), 1) == f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
        for (std::uint32_t c = 0; c < q; c += 1 + q / 4) {
          auto z = f.element(c);
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        }
      }
    }
    CHECK(is_irreducible_mod_p(f.modulus(), p));
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  }
}

TEST_CASE("primitive_element is the least element of full order") {
  CHECK(make_field(2, 1).primitive_element() == make_field(2, 1).one());
  CHECK(make_field(7, 1).primitive_element().code() == 3);
  for (auto [p, e] : small_fields(128)) {
    auto f = make_field(p, e);
    const std::uint32_t q = f.size();
    std::optional<std::uint32_t> least;
    for (std::uint32_t a = 1; a < q && !least; ++a) {
      // Brute-force order by repeated multiplication.
      auto x = f.element(a), acc = x;
      std::uint32_t ord = 1;
      while (acc != f.one()) {
        acc = f.mul(acc, x);
        ++ord;
      }
      CHECK(f.multiplicative_order(x) == ord);
      if (ord == q - 1)
        least = a;
    }
    CAPTURE(q);
    CHECK(f.primitive_element().code() == least.value());
  }
}

TEST_CASE("frobenius orders") {
  auto f9 = make_field(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a)
    CHECK(f9.frobenius(f9.frobenius(f9.element(a), 1), 1) == f9.element(a));
  auto f8 = make_field(2, 3);
  // x -> x^2 has order exactly 3 on GF(8).
  bool moved_by_square = false, moved_by_fourth = false;
  for (std::uint32_t a = 0; a < 8; ++a) {
    auto x = f8.element(a);
    moved_by_square |= f8.frobenius(x, 1) != x;
    moved_by_fourth |= f8.frobenius(x, 2) != x;
    CHECK(f8.frobenius(x, 3) == x);
  }
  CHECK(moved_by_square);
  CHECK(moved_by_fourth);
}

TEST_CASE("is_square against squaring everything") {
  auto f7 = make_field(7, 1);
  std::set<std::uint32_t> squares7;
  for (std::uint32_t a = 1; a < 7; ++a)
    if (f7.is_square(f7.element(a)))
      squares7.insert(a);
  CHECK(squares7 == std::set<std::uint32_t>{1, 2, 4});

  for (auto [p, e] : small_fields(81)) {
    if (p == 2)
      continue;
    auto f = make_field(p, e);
    std::set<std::uint32_t> sq;
    for (std::uint32_t a = 1; a < f.size(); ++a)
      sq.insert(f.mul(f.element(a), f.element(a)).code());
    for (std::uint32_t a = 1; a < f.size(); ++a)
      CHECK(f.is_square(f.element(a)) == (sq.count(a) > 0));
    CHECK(f.is_square(f.one()));
    CHECK_FALSE(f.is_square(f.primitive_element()));
  }
  CHECK_THROWS_AS(make_field(2, 2).is_square(make_field(2, 2).one()), std::domain_error);
}

TEST_CASE("singer_matrix acts regularly on nonzero vectors") {
  auto f = make_field(5, 1);
  auto s1 = singer_matrix(f, 1);
  CHECK(s1(0, 0) == f.primitive_element());

  for (auto [p, e, d] : std::vector<std::array<std::uint32_t, 3>>{
           {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {2, 1, 4}, {3, 1, 3}, {5, 1, 2}, {2, 3, 2}}) {
    auto field = make_field(p, e);
    auto m = singer_matrix(field, d);
    const std::uint64_t q = field.size();
    const std::uint64_t nonzero = checked_pow(q, d) - 1;
    // Order by enumerating powers.
    auto acc = m;
    std::uint64_t ord = 1;
    while (!acc.is_identity()) {
      acc = acc * m;
      ++ord;
    }
    CHECK(ord == nonzero);
    CHECK(matrix_order_dividing(m, nonzero) == nonzero);
    // The orbit of e_0 covers every nonzero vector.
    std::vector<FieldElement> v(d, field.zero());
    v[0] = field.one();
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t i = 0; i < nonzero; ++i) {
      std::vector<std::uint32_t> codes;
      for (auto x : v)
        codes.push_back(x.code());
      seen.insert(codes);
      v = m.apply(v);
    }
    CHECK(seen.size() == nonzero);
  }
  CHECK(gl_order(2, 3) == 168);
  CHECK(gl_order(3, 2) == 48);
}

} // TEST_SUITE
