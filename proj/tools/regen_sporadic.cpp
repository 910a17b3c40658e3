// Derives the generator files that are not taken from published generators:
// L_2(11) on 11 points, M_11 on 12 points and Aut(M_22) on 22 points.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "primcycle/families.hpp"

using namespace primcycle;

namespace {

std::uint64_t order_of(const std::vector<Permutation> &gens, std::size_t n) {
  return build_sgs(GroupSpec(n, gens)).order();
}

// Two random elements of `sgs` generating a group of the given order.
std::vector<Permutation> two_generators(const StrongGeneratingSet &sgs, std::uint64_t order,
                                        std::mt19937_64 &rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Permutation> gens{sgs.random_element(rng), sgs.random_element(rng)};
    if (order_of(gens, sgs.degree()) == order)
      return gens;
  }
  throw std::runtime_error("no generating pair found");
}

void write(const std::string &dir, const std::string &name, GeneratorFile file) {
  std::ofstream out(dir + "/" + name + ".txt");
  out << format_generator_file(file);
  sporadic_from_data(name, format_generator_file(file));
  std::cout << name << ": ok\n";
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: regen_sporadic <data/sporadic dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::mt19937_64 rng(20240611);

  // L_2(11) < M_11 containing the standard 11-cycle: the only maximal
  // subgroup of index 12 over a Sylow 11-normalizer.
  auto m11 = sporadic("M11@11");
  auto m11_sgs = build_sgs(m11.spec);
  const Permutation c = m11.spec.generators[0];
  std::vector<Permutation> h;
  for (int attempt = 0;; ++attempt) {
    std::vector<Permutation> gens{c, m11_sgs.random_element(rng)};
    if (order_of(gens, 11) == 660) {
      h = gens;
      break;
    }
    if (attempt > 10000)
      throw std::runtime_error("no L_2(11) found");
  }
  write(dir, "L2_11@11", {11, 660, 2, h});

  // M_11 on the 12 conjugates of that subgroup.
  using ElementSet = std::vector<std::vector<Point>>;
  auto elements = [](const std::vector<Permutation> &gens) {
    ElementSet set;
    build_sgs(GroupSpec(11, gens)).for_each_element([&](const Permutation &g) {
      set.emplace_back(g.images().begin(), g.images().end());
      return true;
    });
    std::sort(set.begin(), set.end());
    return set;
  };
  auto conj_gens = [](const std::vector<Permutation> &gens, const Permutation &g) {
    std::vector<Permutation> out;
    for (const auto &x : gens)
      out.push_back(conjugate(x, g));
    return out;
  };
  std::vector<std::vector<Permutation>> subgroups{h};
  std::map<ElementSet, std::size_t> index{{elements(h), 0}};
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (const auto &g : m11.spec.generators) {
      auto k = conj_gens(subgroups[i], g);
      if (index.emplace(elements(k), subgroups.size()).second)
        subgroups.push_back(k);
    }
  if (subgroups.size() != 12)
    throw std::runtime_error("expected 12 conjugates");
  std::vector<Permutation> action;
  for (const auto &g : m11.spec.generators) {
    std::vector<Point> images(12);
    for (std::size_t i = 0; i < 12; ++i)
      images[i] = static_cast<Point>(index.at(elements(conj_gens(subgroups[i], g))));
    action.emplace_back(std::move(images));
  }
  write(dir, "M11@12", {12, 7920, 3, action});

  // Aut(M_22): setwise stabilizer of {23, 24} in M_24, restricted.
  auto m24 = sporadic("M24");
  SgsOptions opts;
  opts.base_prefix = {22, 23};
  auto m24_sgs = build_sgs(m24.spec, opts);
  std::vector<Permutation> aut = m24_sgs.stabilizer_generators(2);
  for (;;) {
    Permutation g = m24_sgs.random_element(rng);
    if (g[22] == 23 && g[23] == 22) {
      aut.push_back(g);
      break;
    }
  }
  std::vector<Permutation> restricted;
  for (const auto &g : aut) {
    auto im = g.images();
    restricted.emplace_back(std::vector<Point>(im.begin(), im.begin() + 22));
  }
  auto pair = two_generators(build_sgs(GroupSpec(22, restricted)), 887040, rng);
  write(dir, "AutM22", {22, 887040, 3, pair});
  return 0;
}
