#include <map>
#include <mutex>
#include <sstream>

#include "primcycle/families.hpp"
#include "sporadic_table.hpp"

namespace primcycle {

namespace detail {

extern const std::pair<std::string_view, std::string_view> kSporadicData[];
extern const std::size_t kSporadicDataCount;

namespace {

constexpr SporadicInfo kSporadic[] = {
    {"L2_11@11", CaseTag::c1c, 11, 660, 2, 0},
    {"M11@11", CaseTag::c1c, 11, 7920, 4, 0},
    {"M11@12", CaseTag::c2c, 12, 7920, 3, 1},
    {"M12", CaseTag::c2c, 12, 95040, 5, 1},
    {"M22", CaseTag::aux, 22, 443520, 3, -1},
    {"AutM22", CaseTag::aux, 22, 887040, 3, -1},
    {"M23", CaseTag::c1c, 23, 10200960, 4, 0},
    {"M24", CaseTag::c2c, 24, 244823040, 5, 1},
};

} // namespace

const SporadicInfo &sporadic_info(std::string_view name) {
  for (const auto &s : kSporadic)
    if (name == s.name)
      return s;
  throw std::invalid_argument("unknown sporadic group '" + std::string(name) + "'");
}

} // namespace detail

const std::vector<std::string> &sporadic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < detail::kSporadicDataCount; ++i)
      v.emplace_back(detail::kSporadicData[i].first);
    return v;
  }();
  return names;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("line " + std::to_string(line) + ": expected a number, got '" +
                                std::string(s) + "'");
  return std::stoull(std::string(s));
}

} // namespace

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile file;
  bool have_degree = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;
    if (line.starts_with("degree")) {
      file.degree = parse_number(trim(line.substr(6)), line_no);
      have_degree = true;
      continue;
    }
    if (line.starts_with("expect")) {
      std::istringstream in{std::string(line.substr(6))};
      std::string tok;
      while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("line " + std::to_string(line_no) + ": bad field '" +
                                      tok + "'");
        auto key = tok.substr(0, eq);
        auto value = parse_number(std::string_view(tok).substr(eq + 1), line_no);
        if (key == "order")
          file.expected_order = value;
        else if (key == "transitivity")
          file.expected_transitivity = static_cast<unsigned>(value);
        else
          throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown field '" +
                                      key + "'");
      }
      continue;
    }
    if (!have_degree)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": generator before the degree line");
    try {
      file.generators.push_back(parse_cycles(line, file.degree));
    } catch (const ParseError &e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree)
    throw std::invalid_argument("missing degree line");
  return file;
}

std::string format_generator_file(const GeneratorFile &file) {
  std::ostringstream out;
  out << "degree " << file.degree << "\n";
  out << "expect order=" << file.expected_order
      << " transitivity=" << file.expected_transitivity << "\n";
  for (const auto &g : file.generators)
    out << print_cycles(g) << "\n";
  return out.str();
}

std::string_view embedded_sporadic_data(std::string_view name) {
  for (std::size_t i = 0; i < detail::kSporadicDataCount; ++i)
    if (detail::kSporadicData[i].first == name)
      return detail::kSporadicData[i].second;
  throw std::invalid_argument("unknown sporadic group '" + std::string(name) + "'");
}

FamilyDescriptor sporadic_descriptor(std::string_view name) {
  const auto &info = detail::sporadic_info(name);
  FamilyDescriptor d;
  d.tag = info.tag;
  d.n = info.degree;
  d.name = info.name;
  return d;
}

ConstructedGroup sporadic_from_data(std::string_view name, std::string_view data) {
  const auto &info = detail::sporadic_info(name);
  auto fail = [&](const std::string &why) {
    return DataVerificationError("generator data for " + std::string(name) + ": " + why);
  };
  GeneratorFile file;
  try {
    file = parse_generator_file(data);
  } catch (const std::invalid_argument &e) {
    throw fail(e.what());
  }
  if (file.degree != info.degree)
    throw fail("degree " + std::to_string(file.degree) + ", expected " +
               std::to_string(info.degree));
  if (file.expected_order != info.order || file.expected_transitivity != info.transitivity)
    throw fail("expect line disagrees with the reference table");

  ConstructedGroup g;
  g.descriptor = sporadic_descriptor(name);
  g.spec = GroupSpec(info.degree, std::move(file.generators), g.descriptor.group_name());

  auto sgs = build_sgs(g.spec);
  std::uint64_t order = 0;
  try {
    order = sgs.order();
  } catch (const std::overflow_error &) {
  }
  if (order != info.order)
    throw fail("group order " + std::to_string(order) + ", expected " +
               std::to_string(info.order));
  unsigned t = transitivity_degree(g.spec);
  if (t != info.transitivity)
    throw fail(std::to_string(t) + "-transitive, expected " + std::to_string(info.transitivity));
  if (info.witness_fixed >= 0) {
    auto r = find_cycle_with_fixed(sgs, static_cast<std::size_t>(info.witness_fixed));
    if (!r.witness)
      throw fail("no " + std::to_string(info.degree - info.witness_fixed) + "-cycle found");
    g.witness_cycle = std::move(r.witness);
  }
  return g;
}

ConstructedGroup sporadic(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, ConstructedGroup, std::less<>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(name); it != cache.end())
      return it->second;
  }
  ConstructedGroup g = sporadic_from_data(name, embedded_sporadic_data(name));
  std::lock_guard lock(mu);
  return cache.emplace(std::string(name), std::move(g)).first->second;
}

} // namespace primcycle
