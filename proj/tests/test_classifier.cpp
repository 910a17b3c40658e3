#include <doctest.h>

#include "primcycle/arith.hpp"
#include "primcycle/classifier.hpp"

using namespace primcycle;

namespace {

std::vector<std::string> tags_and_names(const CaseList &list) {
  std::vector<std::string> out;
  for (const auto &c : list.cases)
    out.push_back(to_string(c.descriptor.tag) + ":" + c.descriptor.group_name());
  return out;
}

GroupSpec from_strings(std::size_t n, std::initializer_list<const char *> gens) {
  GroupSpec g;
  g.degree = n;
  for (auto s : gens)
    g.generators.push_back(parse_cycles(s, n));
  return g;
}

} // namespace

TEST_SUITE("classifier") {

TEST_CASE("solve_degree_equations against brute enumeration") {
  auto e31 = solve_degree_equations(31);
  CHECK(e31.prime);
  CHECK(e31.projective == std::vector<FieldDim>{{2, 1, 5}, {5, 1, 3}});
  auto e7 = solve_degree_equations(7);
  CHECK(e7.prime);
  CHECK(e7.projective == std::vector<FieldDim>{{2, 1, 3}});
  auto e6 = solve_degree_equations(6);
  // q + 1 = 6 is the d = 2 projective line over GF(5).
  CHECK(e6.projective == std::vector<FieldDim>{{5, 1, 2}});
  CHECK(e6.affine.empty());
  REQUIRE(e6.line);
  CHECK(e6.line->q() == 5);
  CHECK(e6.line_prime_at_least_5);

  for (std::size_t n = 2; n <= 300; ++n) {
    CAPTURE(n);
    auto eq = solve_degree_equations(n);
    std::vector<FieldDim> proj, aff;
    for (std::uint64_t q = 2; q <= n; ++q) {
      auto pp = as_prime_power(q);
      if (!pp)
        continue;
      std::uint64_t power = 1;
      for (std::uint32_t d = 1; power * q <= n * q; ++d) {
        power *= q;
        if (power == n)
          aff.push_back({static_cast<std::uint32_t>(pp->p), pp->e, d});
        if (d >= 2 && (power - 1) / (q - 1) == n)
          proj.push_back({static_cast<std::uint32_t>(pp->p), pp->e, d});
        if (power > n * q)
          break;
      }
    }
    auto by_qd = [](const FieldDim &a, const FieldDim &b) {
      return std::pair(a.q(), a.d) < std::pair(b.q(), b.d);
    };
    std::sort(proj.begin(), proj.end(), by_qd);
    auto got_proj = eq.projective, got_aff = eq.affine;
    std::sort(got_proj.begin(), got_proj.end(), by_qd);
    std::sort(got_aff.begin(), got_aff.end(), by_qd);
    std::sort(aff.begin(), aff.end(), by_qd);
    CHECK(got_proj == proj);
    CHECK(got_aff == aff);
    CHECK(static_cast<bool>(eq.line) == static_cast<bool>(as_prime_power(n - 1)));
  }
  CHECK_THROWS_AS(solve_degree_equations(1), std::invalid_argument);
}

TEST_CASE("classify") {
  CHECK(tags_and_names(classify(23, 0)) ==
        std::vector<std::string>{"1a:C_23..AGL_1(23)", "1c:M_23"});
  auto ten = classify(10, 2);
  REQUIRE(ten.cases.size() == 1);
  CHECK(ten.cases[0].descriptor.tag == CaseTag::c3);
  CHECK(ten.cases[0].descriptor.q() == 9);
  CHECK(ten.cases[0].descriptor.is_sandwich());
  CHECK(classify(9, 5).cases.empty());
  CHECK(classify(9, 5).unconditional == std::vector<std::string>{"A_9", "S_9"});

  auto eleven = classify(11, 0);
  REQUIRE(eleven.cases.size() == 3);
  CHECK(eleven.cases[0].descriptor.tag == CaseTag::c1a);
  CHECK(eleven.cases[1].descriptor.name == "L2_11@11");
  CHECK(eleven.cases[2].descriptor.name == "M11@11");

  auto eight = classify(8, 1);
  std::vector<std::string> eight_expected{"2a", "2a", "2b", "2b"};
  std::vector<std::string> eight_tags;
  for (const auto &c : eight.cases)
    eight_tags.push_back(to_string(c.descriptor.tag));
  CHECK(eight_tags == eight_expected);
  CHECK(eight.cases[0].descriptor.q() == 8);
  CHECK(eight.cases[0].descriptor.d == 1);
  CHECK(eight.cases[1].descriptor.q() == 2);
  CHECK(eight.cases[1].descriptor.d == 3);
  CHECK(eight.cases[2].descriptor.name == "L2");
  CHECK(eight.cases[3].descriptor.name == "PGL2");

  for (std::size_t n = 5; n <= 40; ++n)
    for (std::size_t k = 3; k + 2 <= n; ++k)
      CHECK(classify(n, k).cases.empty());
  CHECK(classify(13, 2).cases.empty());
  CHECK_THROWS_AS(classify(9, 8), std::invalid_argument);
  CHECK_THROWS_AS(classify(1, 0), std::invalid_argument);

  // Overlap between 1b with d = 2 and case 3 is annotated on both sides.
  CHECK(classify(10, 0).cases.back().note.find("case 3") != std::string::npos);
  CHECK(classify(10, 2).cases.front().note.find("1b") != std::string::npos);
}

TEST_CASE("classify is consistent with the fixed-point count of every case") {
  for (std::size_t n = 2; n <= 60; ++n)
    for (std::size_t k = 0; k + 2 <= n && k <= 2; ++k)
      for (const auto &c : classify(n, k).cases) {
        CHECK(c.descriptor.n == n);
        CHECK(case_fixed_points(c.descriptor.tag) == k);
      }
}

TEST_CASE("identify") {
  SUBCASE("imprimitive") {
    auto id = identify(wreath_imprimitive(2, 2).spec);
    CHECK(id.verdict == Verdict::inapplicable);
    CHECK(id.reason == Inapplicable::imprimitive);
  }
  SUBCASE("intransitive") {
    auto id = identify(from_strings(5, {"(1 2 3)"}));
    CHECK(id.reason == Inapplicable::intransitive);
  }
  SUBCASE("PGL_2(7) on 8 points") {
    auto id = identify(psl2_pgl2(7, LineGroup::PGL2).spec);
    CHECK(id.verdict == Verdict::matched);
    CHECK(id.order == 336u);
    // Cycles of length 8, 7 and 6: cases 1b, 2b and 3 all describe it.
    CHECK(id.k == 0u);
    CHECK(id.cycle_fixed_counts == std::vector<std::size_t>{0, 1, 2});
    auto has = [&](CaseTag tag) {
      return std::any_of(id.matches.begin(), id.matches.end(),
                         [&](const FamilyDescriptor &d) { return d.tag == tag; });
    };
    CHECK(has(CaseTag::c1b));
    CHECK(has(CaseTag::c2b));
    CHECK(has(CaseTag::c3));
    CHECK(id.conjugacy_confirmed == true);
  }
  SUBCASE("A_9 from 3-cycles") {
    GroupSpec a9;
    a9.degree = 9;
    for (Point i = 2; i < 9; ++i)
      a9.generators.push_back(Permutation::from_cycles(9, {{0, 1, i}}));
    auto id = identify(a9);
    CHECK(id.verdict == Verdict::contains_alternating);
    CHECK(id.order == 181440u);
  }
  SUBCASE("M11 on 12 points") {
    auto id = identify(sporadic("M11@12").spec);
    CHECK(id.verdict == Verdict::matched);
    CHECK(id.k == 1u);
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == CaseTag::c2c);
  }
  SUBCASE("prime cycle is the bottom of 1a") {
    auto id = identify(from_strings(13, {"(1 2 3 4 5 6 7 8 9 10 11 12 13)"}));
    CHECK(id.verdict == Verdict::matched);
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == CaseTag::c1a);
    CHECK(id.matches[0].param == 1);
  }
  SUBCASE("AGammaL_1(8) and L_2(7) both have order 168 on 8 points") {
    auto a = identify(affine_space(1, 2, 3, 1).spec);
    auto l = identify(psl2_pgl2(7, LineGroup::L2).spec);
    REQUIRE(a.verdict == Verdict::matched);
    REQUIRE(l.verdict == Verdict::matched);
    CHECK(a.matches[0].tag == CaseTag::c2a);
    CHECK(l.matches[0].tag == CaseTag::c2b);
  }
  SUBCASE("PGammaL_2(9) matches at k = 0 and k = 2") {
    auto id = identify(projective_line_gamma(3, 2, LineGroup::PGammaL2).spec);
    CHECK(id.verdict == Verdict::matched);
    CHECK(id.cycle_fixed_counts == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("a conjugated copy is still recognized") {
    auto g = sporadic("M12").spec;
    auto sigma = parse_cycles("(1 7 3)(2 12)(5 9 11 4)", 12);
    for (auto &x : g.generators)
      x = conjugate(x, sigma);
    auto id = identify(g);
    CHECK(id.verdict == Verdict::matched);
    CHECK(id.matches.at(0).name == "M12");
  }
  SUBCASE("primitive group without a single-cycle element") {
    auto none = identify(sporadic("M22").spec);
    CHECK(none.verdict == Verdict::inapplicable);
    CHECK(none.reason == Inapplicable::no_cycle);
  }
}

TEST_CASE("conjugate_in_symmetric") {
  auto l7 = psl2_pgl2(7, LineGroup::L2);
  auto a8 = affine_space(1, 2, 3, 1);
  CHECK(conjugate_in_symmetric(l7.spec, *l7.witness_cycle, l7.spec));
  CHECK_FALSE(conjugate_in_symmetric(l7.spec, *l7.witness_cycle, a8.spec));
  auto moved = l7.spec;
  auto sigma = parse_cycles("(1 5 2)(3 8)", 8);
  for (auto &x : moved.generators)
    x = conjugate(x, sigma);
  CHECK(conjugate_in_symmetric(moved, conjugate(*l7.witness_cycle, sigma), l7.spec));
  CHECK_THROWS_AS(conjugate_in_symmetric(l7.spec, parse_cycles("(1 2)(3 4)", 8), l7.spec),
                  std::invalid_argument);
}

} // TEST_SUITE
