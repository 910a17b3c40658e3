#include "primcycle/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "primcycle/arith.hpp"
#include "sporadic_table.hpp"

namespace primcycle {

std::string to_string(CaseTag tag) {
  switch (tag) {
  case CaseTag::c1a:
    return "1a";
  case CaseTag::c1b:
    return "1b";
  case CaseTag::c1c:
    return "1c";
  case CaseTag::c2a:
    return "2a";
  case CaseTag::c2b:
    return "2b";
  case CaseTag::c2c:
    return "2c";
  case CaseTag::c3:
    return "3";
  case CaseTag::aux:
    return "aux";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_string(std::string_view s) {
  for (CaseTag t : {CaseTag::c1a, CaseTag::c1b, CaseTag::c1c, CaseTag::c2a, CaseTag::c2b,
                    CaseTag::c2c, CaseTag::c3, CaseTag::aux})
    if (to_string(t) == s)
      return t;
  return std::nullopt;
}

std::optional<std::size_t> case_fixed_points(CaseTag tag) {
  switch (tag) {
  case CaseTag::c1a:
  case CaseTag::c1b:
  case CaseTag::c1c:
    return 0;
  case CaseTag::c2a:
  case CaseTag::c2b:
  case CaseTag::c2c:
    return 1;
  case CaseTag::c3:
    return 2;
  case CaseTag::aux:
    return std::nullopt;
  }
  return std::nullopt;
}

std::uint64_t FamilyDescriptor::q() const {
  return p == 0 ? 0 : checked_pow(p, e == 0 ? 1 : e);
}

bool FamilyDescriptor::is_sandwich() const noexcept {
  switch (tag) {
  case CaseTag::c1a:
  case CaseTag::c1b:
  case CaseTag::c2a:
  case CaseTag::c3:
    return param == 0;
  default:
    return false;
  }
}

namespace {

std::string ext_name(const std::string &bottom, const std::string &top, std::uint32_t e,
                     std::uint32_t s, const std::string &suffix) {
  if (s == 0)
    return bottom + suffix + ".." + top + suffix;
  if (s == e)
    return bottom + suffix;
  if (s == 1)
    return top + suffix;
  return bottom + suffix + ":C_" + std::to_string(e / s);
}

} // namespace

std::string FamilyDescriptor::group_name() const {
  const std::string qs = p ? std::to_string(q()) : "";
  const std::string ds = std::to_string(d);
  switch (tag) {
  case CaseTag::c1a: {
    const std::string ps = std::to_string(p);
    if (param == 0)
      return "C_" + ps + "..AGL_1(" + ps + ")";
    if (param == 1)
      return "C_" + ps;
    if (param == p - 1)
      return "AGL_1(" + ps + ")";
    return "C_" + ps + ":C_" + std::to_string(param);
  }
  case CaseTag::c1b:
    return ext_name("PGL", "PGammaL", e, param, "_" + ds + "(" + qs + ")");
  case CaseTag::c2a:
    return ext_name("AGL", "AGammaL", e, param, "_" + ds + "(" + qs + ")");
  case CaseTag::c3:
    return ext_name("PGL", "PGammaL", e, param, "_2(" + qs + ")");
  case CaseTag::c2b:
    return (name == "L2" ? "L_2(" : "PGL_2(") + std::to_string(p) + ")";
  case CaseTag::c1c:
  case CaseTag::c2c:
  case CaseTag::aux:
    if (name == "L2_11@11")
      return "L_2(11)";
    if (name == "M11@11" || name == "M11@12")
      return "M_11";
    if (name == "AutM22")
      return "Aut(M_22)";
    if (name.size() == 3 && name[0] == 'M')
      return "M_" + name.substr(1);
    if (name == "L2")
      return "L_2(" + qs + ")";
    if (name == "PSigmaL2")
      return "PSigmaL_2(" + qs + ")";
    if (name == "M2")
      return "M_2(" + qs + ")";
    if (name == "wreath")
      return "S_" + std::to_string(block_size) + " wr S_" + std::to_string(blocks);
    return name;
  }
  return name;
}

std::string FamilyDescriptor::variant() const {
  switch (tag) {
  case CaseTag::c1a:
    return param ? "m=" + std::to_string(param) : "sandwich";
  case CaseTag::c1b:
  case CaseTag::c2a:
  case CaseTag::c3:
    return param ? "s=" + std::to_string(param) : "sandwich";
  default:
    if (name == "wreath")
      return "wreath(" + std::to_string(block_size) + "," + std::to_string(blocks) + ")";
    return name;
  }
}

namespace {

// Vectors of GF(q)^d indexed lexicographically, first coordinate most
// significant.
struct VectorSpace {
  FiniteField field;
  std::size_t dim;
  std::uint64_t q;
  std::uint64_t size;

  VectorSpace(FiniteField f, std::size_t d)
      : field(std::move(f)), dim(d), q(field.size()),
        size(checked_pow(field.size(), static_cast<unsigned>(d))) {}

  std::vector<FieldElement> decode(std::uint64_t idx) const {
    std::vector<FieldElement> v(dim);
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = FieldElement(static_cast<std::uint32_t>(idx % q));
      idx /= q;
    }
    return v;
  }

  std::uint64_t encode(const std::vector<FieldElement> &v) const {
    std::uint64_t idx = 0;
    for (auto x : v)
      idx = idx * q + x.code();
    return idx;
  }

  std::vector<FieldElement> frobenius(std::vector<FieldElement> v, std::uint32_t f) const {
    for (auto &x : v)
      x = field.frobenius(x, f);
    return v;
  }
};

// Generators of GL_d(q): a diagonal scalar twist, one transvection and the
// cyclic coordinate permutation. Checked against |GL_d(q)| by callers.
std::vector<Matrix> gl_generators(const FiniteField &f, std::size_t d) {
  std::vector<Matrix> gens;
  Matrix diag = Matrix::identity(f, d);
  diag(0, 0) = f.primitive_element();
  if (!diag.is_identity())
    gens.push_back(diag);
  if (d >= 2) {
    Matrix t = Matrix::identity(f, d);
    t(0, 1) = f.one();
    gens.push_back(t);
    Matrix cyc(f, d);
    for (std::size_t i = 0; i < d; ++i)
      cyc((i + 1) % d, i) = f.one();
    gens.push_back(cyc);
  }
  return gens;
}

std::uint32_t checked_step(std::uint32_t e, std::uint32_t s) {
  if (s == 0)
    s = e;
  if (e % s != 0)
    throw std::invalid_argument("Frobenius step " + std::to_string(s) +
                                " does not divide e = " + std::to_string(e));
  return s;
}

void check_order(const ConstructedGroup &g) {
  const std::uint64_t want = expected_order(g.descriptor);
  const std::uint64_t got = build_sgs(g.spec).order();
  if (want != got)
    throw std::logic_error("constructed " + g.descriptor.group_name() + " has order " +
                           std::to_string(got) + ", expected " + std::to_string(want));
}

struct Mobius {
  FieldElement a, b, c, d;
  std::uint32_t frob = 0;
};

// t -> (a t^(p^f) + b) / (c t^(p^f) + d) on GF(q) u {inf}, inf = index q.
Permutation mobius_action(const FiniteField &f, const Mobius &m) {
  const std::uint32_t q = f.size();
  std::vector<Point> images(q + 1);
  for (std::uint32_t t = 0; t <= q; ++t) {
    if (t == q) {
      images[t] = m.c.is_zero() ? q : f.div(m.a, m.c).code();
      continue;
    }
    FieldElement s = f.frobenius(FieldElement(t), m.frob);
    FieldElement den = f.add(f.mul(m.c, s), m.d);
    if (den.is_zero()) {
      images[t] = q;
      continue;
    }
    images[t] = f.div(f.add(f.mul(m.a, s), m.b), den).code();
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> line_generators(const FiniteField &f, bool pgl) {
  const FieldElement one = f.one(), zero = f.zero();
  const FieldElement w = f.primitive_element();
  const bool odd = f.characteristic() != 2;
  std::vector<Permutation> gens;
  gens.push_back(mobius_action(f, {one, one, zero, one}));
  // squares for L_2 (all elements are squares when q is even)
  FieldElement sq = odd ? f.mul(w, w) : w;
  if (sq != one)
    gens.push_back(mobius_action(f, {sq, zero, zero, one}));
  gens.push_back(mobius_action(f, {zero, f.neg(one), one, zero}));
  if (pgl && odd)
    gens.push_back(mobius_action(f, {w, zero, zero, one}));
  return gens;
}

} // namespace

ConstructedGroup affine_line(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p))
    throw std::invalid_argument("affine_line: " + std::to_string(p) + " is not prime");
  if (m == 0 || (p - 1) % m != 0)
    throw std::invalid_argument("affine_line: " + std::to_string(m) +
                                " does not divide p - 1 = " + std::to_string(p - 1));
  FiniteField f = make_field(p, 1);
  FieldElement a = f.pow(f.primitive_element(), (p - 1) / m);
  std::vector<Point> shift(p), scale(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    shift[t] = (t + 1) % p;
    scale[t] = f.mul(a, FieldElement(t)).code();
  }
  ConstructedGroup g;
  g.descriptor.tag = CaseTag::c1a;
  g.descriptor.p = p;
  g.descriptor.e = 1;
  g.descriptor.d = 1;
  g.descriptor.n = p;
  g.descriptor.param = m;
  Permutation translation(std::move(shift));
  std::vector<Permutation> gens{translation};
  if (m > 1)
    gens.emplace_back(std::move(scale));
  g.spec = GroupSpec(p, std::move(gens), g.descriptor.group_name());
  g.witness_cycle = translation;
  check_order(g);
  return g;
}

ConstructedGroup projective(std::uint32_t d, std::uint32_t p, std::uint32_t e,
                            std::uint32_t frobenius_step) {
  if (d < 2)
    throw std::invalid_argument("projective: dimension must be at least 2");
  const std::uint32_t s = checked_step(e, frobenius_step);
  VectorSpace vs(make_field(p, e), d);
  const FiniteField &f = vs.field;

  // Normalized representatives: last nonzero coordinate equal to 1.
  std::vector<std::int64_t> index(vs.size, -1);
  std::vector<std::uint64_t> points;
  for (std::uint64_t i = 1; i < vs.size; ++i) {
    auto v = vs.decode(i);
    auto last = std::find_if(v.rbegin(), v.rend(), [](FieldElement x) { return !x.is_zero(); });
    if (*last == f.one()) {
      index[i] = static_cast<std::int64_t>(points.size());
      points.push_back(i);
    }
  }
  const std::size_t n = points.size();

  auto act = [&](const Matrix &m, std::uint32_t frob) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = m.apply(vs.frobenius(vs.decode(points[i]), frob));
      auto last = std::find_if(v.rbegin(), v.rend(), [](FieldElement x) { return !x.is_zero(); });
      FieldElement scale = f.inv(*last);
      for (auto &x : v)
        x = f.mul(x, scale);
      images[i] = static_cast<Point>(index[vs.encode(v)]);
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (const auto &m : gl_generators(f, d))
    gens.push_back(act(m, 0));
  if (s != e)
    gens.push_back(act(Matrix::identity(f, d), s));

  ConstructedGroup g;
  g.descriptor = {CaseTag::c1b, p, e, d, n, s, "", 0, 0};
  g.spec = GroupSpec(n, std::move(gens), g.descriptor.group_name());
  g.witness_cycle = act(singer_matrix(f, d), 0);
  check_order(g);
  return g;
}

ConstructedGroup affine_space(std::uint32_t d, std::uint32_t p, std::uint32_t e,
                              std::uint32_t frobenius_step) {
  if (d < 1)
    throw std::invalid_argument("affine_space: dimension must be at least 1");
  const std::uint32_t s = checked_step(e, frobenius_step);
  VectorSpace vs(make_field(p, e), d);
  const FiniteField &f = vs.field;
  const std::size_t n = static_cast<std::size_t>(vs.size);

  auto act = [&](const Matrix &m, std::uint32_t frob) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i)
      images[i] = static_cast<Point>(vs.encode(m.apply(vs.frobenius(vs.decode(i), frob))));
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = vs.decode(i);
      v[0] = f.add(v[0], f.one());
      images[i] = static_cast<Point>(vs.encode(v));
    }
    gens.emplace_back(std::move(images));
  }
  for (const auto &m : gl_generators(f, d))
    gens.push_back(act(m, 0));
  if (s != e)
    gens.push_back(act(Matrix::identity(f, d), s));

  ConstructedGroup g;
  g.descriptor = {CaseTag::c2a, p, e, d, n, s, "", 0, 0};
  g.spec = GroupSpec(n, std::move(gens), g.descriptor.group_name());
  g.witness_cycle = act(singer_matrix(f, d), 0);
  check_order(g);
  return g;
}

ConstructedGroup psl2_pgl2(std::uint32_t p, LineGroup which) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("psl2_pgl2: need a prime p >= 5, got " + std::to_string(p));
  if (which != LineGroup::L2 && which != LineGroup::PGL2)
    throw std::invalid_argument("psl2_pgl2: choose L2 or PGL2");
  FiniteField f = make_field(p, 1);
  ConstructedGroup g;
  g.descriptor = {CaseTag::c2b, p, 1, 2, p + 1, 0, which == LineGroup::L2 ? "L2" : "PGL2", 0, 0};
  g.spec = GroupSpec(p + 1, line_generators(f, which == LineGroup::PGL2),
                     g.descriptor.group_name());
  g.witness_cycle = mobius_action(f, {f.one(), f.one(), f.zero(), f.one()});
  check_order(g);
  return g;
}

ConstructedGroup projective_line_gamma(std::uint32_t p, std::uint32_t e, LineGroup which,
                                       std::uint32_t frobenius_step) {
  FiniteField f = make_field(p, e);
  const std::uint32_t q = f.size();
  const bool odd = p != 2;
  const FieldElement w = f.primitive_element();

  ConstructedGroup g;
  FamilyDescriptor &desc = g.descriptor;
  desc.p = p;
  desc.e = e;
  desc.d = 2;
  desc.n = q + 1;

  std::vector<Permutation> gens;
  switch (which) {
  case LineGroup::L2:
    desc.tag = CaseTag::aux;
    desc.name = "L2";
    gens = line_generators(f, false);
    break;
  case LineGroup::PSigmaL2:
    desc.tag = CaseTag::aux;
    desc.name = "PSigmaL2";
    gens = line_generators(f, false);
    if (e > 1)
      gens.push_back(mobius_action(f, {f.one(), f.zero(), f.zero(), f.one(), 1}));
    break;
  case LineGroup::M2:
    if (!odd || e % 2 != 0)
      throw std::invalid_argument("M_2(q) needs q odd and e even");
    desc.tag = CaseTag::aux;
    desc.name = "M2";
    gens = line_generators(f, false);
    gens.push_back(mobius_action(f, {w, f.zero(), f.zero(), f.one(), e / 2}));
    break;
  case LineGroup::PGL2:
  case LineGroup::PGammaL2:
  case LineGroup::intermediate: {
    std::uint32_t s = which == LineGroup::PGL2      ? e
                      : which == LineGroup::PGammaL2 ? 1
                                                     : checked_step(e, frobenius_step);
    desc.tag = CaseTag::c3;
    desc.param = s;
    gens = line_generators(f, true);
    if (s != e)
      gens.push_back(mobius_action(f, {f.one(), f.zero(), f.zero(), f.one(), s}));
    g.witness_cycle = mobius_action(f, {w, f.zero(), f.zero(), f.one()});
    break;
  }
  }
  g.spec = GroupSpec(q + 1, std::move(gens), desc.group_name());
  check_order(g);
  return g;
}

ConstructedGroup wreath_imprimitive(std::uint32_t m, std::uint32_t blocks) {
  if (m < 2 || blocks < 2)
    throw std::invalid_argument("wreath_imprimitive: need m >= 2 and blocks >= 2");
  const std::size_t n = std::size_t{m} * blocks;
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (m > 2) {
    std::vector<Point> c(m);
    for (Point i = 0; i < m; ++i)
      c[i] = i;
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  auto block_map = [&](auto target) {
    std::vector<Point> images(n);
    for (Point b = 0; b < blocks; ++b)
      for (Point j = 0; j < m; ++j)
        images[b * m + j] = static_cast<Point>(target(b) * m + j);
    return Permutation(std::move(images));
  };
  gens.push_back(block_map([](Point b) { return b == 0 ? 1 : b == 1 ? 0 : b; }));
  if (blocks > 2)
    gens.push_back(block_map([&](Point b) { return (b + 1) % blocks; }));
  ConstructedGroup g;
  g.descriptor.tag = CaseTag::aux;
  g.descriptor.name = "wreath";
  g.descriptor.n = n;
  g.descriptor.block_size = m;
  g.descriptor.blocks = blocks;
  g.spec = GroupSpec(n, std::move(gens), g.descriptor.group_name());
  // |S_m wr S_b| = m!^b b!, compared as prime exponents since it outgrows 64 bits.
  std::map<std::uint64_t, std::uint64_t> want, got;
  auto add_factorial = [&](std::uint32_t k, std::uint64_t times) {
    for (std::uint32_t i = 2; i <= k; ++i)
      for (auto [prime, exp] : factorize(i))
        want[prime] += std::uint64_t{exp} * times;
  };
  add_factorial(m, blocks);
  add_factorial(blocks, 1);
  for (const auto &level : build_sgs(g.spec).levels())
    for (auto [prime, exp] : factorize(level.orbit.size()))
      got[prime] += exp;
  if (want != got)
    throw std::logic_error("constructed " + g.descriptor.group_name() + " has the wrong order");
  return g;
}

std::uint64_t expected_order(const FamilyDescriptor &d) {
  if (d.is_sandwich())
    throw std::invalid_argument("expected_order: descriptor is a whole sandwich");
  const std::uint64_t q = d.q();
  auto ext = [&] { return std::uint64_t{d.e / (d.param ? d.param : d.e)}; };
  switch (d.tag) {
  case CaseTag::c1a:
    return std::uint64_t{d.p} * d.param;
  case CaseTag::c1b:
    return checked_mul(gl_order(q, d.d) / (q - 1), ext());
  case CaseTag::c2a:
    return checked_mul(checked_mul(checked_pow(q, d.d), gl_order(q, d.d)), ext());
  case CaseTag::c2b:
    return d.name == "L2" ? q * (q * q - 1) / 2 : q * (q * q - 1);
  case CaseTag::c3:
    return checked_mul(q * (q * q - 1), ext());
  case CaseTag::c1c:
  case CaseTag::c2c:
    return detail::sporadic_info(d.name).order;
  case CaseTag::aux:
    if (d.name == "L2")
      return q * (q * q - 1) / (q % 2 ? 2 : 1);
    if (d.name == "PSigmaL2")
      return q * (q * q - 1) / (q % 2 ? 2 : 1) * d.e;
    if (d.name == "M2")
      return q * (q * q - 1);
    if (d.name == "wreath") {
      auto fb = factorial(d.blocks), fm = factorial(d.block_size);
      if (!fb || !fm)
        throw std::overflow_error("expected_order: wreath order exceeds 64 bits");
      std::uint64_t r = *fb;
      for (std::uint32_t i = 0; i < d.blocks; ++i)
        r = checked_mul(r, *fm);
      return r;
    }
    return detail::sporadic_info(d.name).order;
  }
  return 0;
}

std::vector<FamilyDescriptor> sandwich_members(const FamilyDescriptor &d) {
  if (!d.is_sandwich())
    return {d};
  std::vector<FamilyDescriptor> out;
  if (d.tag == CaseTag::c1a) {
    for (auto m : divisors(d.p - 1)) {
      FamilyDescriptor c = d;
      c.param = static_cast<std::uint32_t>(m);
      out.push_back(c);
    }
    return out;
  }
  auto ds = divisors(d.e);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    FamilyDescriptor c = d;
    c.param = static_cast<std::uint32_t>(*it);
    out.push_back(c);
  }
  return out;
}

ConstructedGroup instantiate(const FamilyDescriptor &d) {
  if (d.is_sandwich())
    throw std::invalid_argument("instantiate: pick a member of the sandwich " + d.group_name());
  switch (d.tag) {
  case CaseTag::c1a:
    return affine_line(d.p, d.param);
  case CaseTag::c1b:
    return projective(d.d, d.p, d.e, d.param);
  case CaseTag::c2a:
    return affine_space(d.d, d.p, d.e, d.param);
  case CaseTag::c2b:
    return psl2_pgl2(d.p, d.name == "L2" ? LineGroup::L2 : LineGroup::PGL2);
  case CaseTag::c3:
    return projective_line_gamma(d.p, d.e, LineGroup::intermediate, d.param);
  case CaseTag::c1c:
  case CaseTag::c2c:
    return sporadic(d.name);
  case CaseTag::aux:
    if (d.name == "L2")
      return projective_line_gamma(d.p, d.e, LineGroup::L2);
    if (d.name == "PSigmaL2")
      return projective_line_gamma(d.p, d.e, LineGroup::PSigmaL2);
    if (d.name == "M2")
      return projective_line_gamma(d.p, d.e, LineGroup::M2);
    if (d.name == "wreath")
      return wreath_imprimitive(d.block_size, d.blocks);
    return sporadic(d.name);
  }
  throw std::invalid_argument("instantiate: unknown descriptor");
}

} // namespace primcycle
