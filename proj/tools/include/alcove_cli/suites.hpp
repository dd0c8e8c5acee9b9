#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/serialize.hpp"

namespace alcove::cli {

struct SuiteOptions {
  std::optional<std::string> type;
  std::optional<long> radius;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  int max_rank = 12;  // table suite
  Limits limits;
};

/// Report shape: {"suite", "pass", "checks", "counterexamples": [...], ...suite details}.
Json run_suite(const std::string& name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

}  // namespace alcove::cli
