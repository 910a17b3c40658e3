#include "primcycle/io.hpp"

namespace primcycle {

Json to_json(const FamilyDescriptor &d) {
  Json j;
  j["tag"] = to_string(d.tag);
  j["group"] = d.group_name();
  j["variant"] = d.variant();
  j["p"] = d.p;
  j["e"] = d.e;
  j["d"] = d.d;
  j["q"] = d.q();
  j["n"] = d.n;
  j["param"] = d.param;
  j["name"] = d.name;
  if (d.name == "wreath") {
    j["block_size"] = d.block_size;
    j["blocks"] = d.blocks;
  }
  return j;
}

FamilyDescriptor descriptor_from_json(const nlohmann::ordered_json &j) {
  if (!j.is_object())
    throw std::invalid_argument("descriptor must be an object");
  FamilyDescriptor d;
  try {
    auto tag = case_tag_from_string(j.at("tag").get<std::string>());
    if (!tag)
      throw std::invalid_argument("unknown case tag " + j.at("tag").dump());
    d.tag = *tag;
    d.p = j.value("p", 0u);
    d.e = j.value("e", 0u);
    d.d = j.value("d", 0u);
    d.n = j.at("n").get<std::size_t>();
    d.param = j.value("param", 0u);
    d.name = j.value("name", std::string());
    d.block_size = j.value("block_size", 0u);
    d.blocks = j.value("blocks", 0u);
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("descriptor: ") + e.what());
  }
  return d;
}

Json to_json(const GroupSpecFile &file) {
  Json j;
  j["label"] = file.spec.label ? Json(*file.spec.label) : Json(nullptr);
  j["degree"] = file.spec.degree;
  j["point_base"] = 1;
  Json gens = Json::array();
  for (const auto &g : file.spec.generators)
    gens.push_back(print_cycles(g));
  j["generators"] = std::move(gens);
  j["descriptor"] = file.descriptor ? to_json(*file.descriptor) : Json(nullptr);
  j["witness_cycle"] = file.witness_cycle ? Json(print_cycles(*file.witness_cycle)) : Json(nullptr);
  return j;
}

GroupSpecFile to_spec_file(const ConstructedGroup &g) {
  return {g.spec, g.descriptor, g.witness_cycle};
}

SpecFileError::SpecFileError(const std::string &what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line), column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Position of the n-th occurrence of a JSON string literal, for locating
// cycle-notation errors in the original text.
std::size_t find_literal(std::string_view text, const std::string &literal, std::size_t from) {
  auto quoted = nlohmann::json(literal).dump();
  auto pos = text.find(quoted, from);
  return pos == std::string_view::npos ? 0 : pos;
}

} // namespace

GroupSpecFile parse_group_spec(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SpecFileError("invalid JSON", line, col);
  }
  auto fail = [&](const std::string &what) { return SpecFileError(what, 1, 1); };
  if (!j.is_object())
    throw fail("GroupSpec must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw fail("missing or invalid \"degree\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw fail("missing or invalid \"generators\"");
  if (j.value("point_base", 1) != 1)
    throw fail("unsupported point_base " + j["point_base"].dump() + "; expected 1");

  GroupSpecFile file;
  file.spec.degree = j["degree"].get<std::size_t>();
  if (j.contains("label") && j["label"].is_string())
    file.spec.label = j["label"].get<std::string>();

  std::size_t search_from = 0;
  auto parse_perm = [&](const nlohmann::ordered_json &v, const std::string &where) {
    if (!v.is_string())
      throw fail(where + " must be a cycle-notation string");
    const auto s = v.get<std::string>();
    const std::size_t at = find_literal(text, s, search_from);
    search_from = at + 1;
    try {
      return parse_cycles(s, file.spec.degree);
    } catch (const ParseError &e) {
      // +1 for the opening quote
      auto [line, col] = line_column(text, at + 1 + e.position());
      throw SpecFileError(where + ": " + e.message(), line, col);
    }
  };
  for (std::size_t i = 0; i < j["generators"].size(); ++i)
    file.spec.generators.push_back(
        parse_perm(j["generators"][i], "generators[" + std::to_string(i) + "]"));
  if (j.contains("descriptor") && !j["descriptor"].is_null()) {
    try {
      file.descriptor = descriptor_from_json(j["descriptor"]);
    } catch (const std::invalid_argument &e) {
      throw fail(e.what());
    }
  }
  if (j.contains("witness_cycle") && !j["witness_cycle"].is_null())
    file.witness_cycle = parse_perm(j["witness_cycle"], "witness_cycle");
  return file;
}

Json to_json(const CaseList &list) {
  Json j;
  j["n"] = list.n;
  j["k"] = list.k;
  Json cases = Json::array();
  for (const auto &c : list.cases) {
    const auto &d = c.descriptor;
    Json e;
    e["tag"] = to_string(d.tag);
    e["group"] = d.group_name();
    e["p"] = d.p ? Json(d.p) : Json(nullptr);
    e["q"] = d.p ? Json(d.q()) : Json(nullptr);
    e["d"] = d.d ? Json(d.d) : Json(nullptr);
    e["n"] = d.n;
    e["note"] = c.note;
    e["descriptor"] = to_json(d);
    cases.push_back(std::move(e));
  }
  for (const auto &u : list.unconditional) {
    Json e;
    e["tag"] = u.substr(0, 1) + "_n";
    e["group"] = u;
    e["p"] = nullptr;
    e["q"] = nullptr;
    e["d"] = nullptr;
    e["n"] = list.n;
    e["note"] = "always present";
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  return j;
}

Json to_json(const Identification &id) {
  Json j;
  j["verdict"] = to_string(id.verdict);
  j["reason"] = id.reason == Inapplicable::none ? Json(nullptr) : Json(to_string(id.reason));
  j["degree"] = id.degree;
  j["order"] = id.order ? Json(*id.order) : Json(nullptr);
  j["transitivity"] = id.transitivity;
  j["primitive"] = id.primitive;
  j["k"] = id.k ? Json(*id.k) : Json(nullptr);
  j["witness_cycle"] = id.witness ? Json(print_cycles(*id.witness)) : Json(nullptr);
  j["cycle_scan_exhaustive"] = id.cycle_scan_exhaustive;
  j["cycle_fixed_counts"] = id.cycle_fixed_counts;
  Json matches = Json::array();
  for (const auto &m : id.matches)
    matches.push_back(to_json(m));
  j["matches"] = std::move(matches);
  j["conjugacy_confirmed"] = id.conjugacy_confirmed ? Json(*id.conjugacy_confirmed) : Json(nullptr);
  j["detail"] = id.detail;
  return j;
}

Json to_json(const DegreeEquations &eq) {
  auto fd = [](const FieldDim &f) {
    Json j;
    j["p"] = f.p;
    j["e"] = f.e;
    j["q"] = f.q();
    j["d"] = f.d;
    return j;
  };
  Json j;
  j["n"] = eq.n;
  j["prime"] = eq.prime;
  j["projective"] = Json::array();
  for (const auto &f : eq.projective)
    j["projective"].push_back(fd(f));
  j["affine"] = Json::array();
  for (const auto &f : eq.affine)
    j["affine"].push_back(fd(f));
  j["line"] = eq.line ? fd(*eq.line) : Json(nullptr);
  j["line_prime_at_least_5"] = eq.line_prime_at_least_5;
  return j;
}

} // namespace primcycle
