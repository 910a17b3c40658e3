#pragma once

#include <cstdint>
#include <string_view>

#include "primcycle/families.hpp"

namespace primcycle::detail {

struct SporadicInfo {
  const char *name;
  CaseTag tag;
  std::size_t degree;
  std::uint64_t order;
  unsigned transitivity;
  int witness_fixed; // -1: no witness cycle
};

const SporadicInfo &sporadic_info(std::string_view name);

} // namespace primcycle::detail
