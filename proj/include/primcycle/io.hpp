#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "primcycle/classifier.hpp"
#include "primcycle/families.hpp"

namespace primcycle {

using Json = nlohmann::ordered_json;

Json to_json(const FamilyDescriptor &d);
/// Throws std::invalid_argument on a malformed descriptor object.
FamilyDescriptor descriptor_from_json(const nlohmann::ordered_json &j);

/// A GroupSpec file: 1-based cycle strings with explicit "point_base": 1.
struct GroupSpecFile {
  GroupSpec spec;
  std::optional<FamilyDescriptor> descriptor;
  std::optional<Permutation> witness_cycle;
};

Json to_json(const GroupSpecFile &file);
GroupSpecFile to_spec_file(const ConstructedGroup &g);

/// Errors in a GroupSpec file, with a 1-based line and column when known.
class SpecFileError : public std::runtime_error {
public:
  SpecFileError(const std::string &what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

GroupSpecFile parse_group_spec(std::string_view text);

/// {n, k, cases:[{tag, p, q, d, n, note, ...}]}; A_n and S_n close the list.
Json to_json(const CaseList &list);
Json to_json(const Identification &id);
Json to_json(const DegreeEquations &eq);

} // namespace primcycle
