#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grace/errors.hpp"
#include "grace/numeric.hpp"

namespace grace {

// Factorial-guard on domain sizes; overridable per call and via GRACE_MAX_N
// in the CLI.
constexpr int kDefaultMaxN = 10;

enum class OutputFormat { kJson, kCsv, kText };

struct RunConfig {
  int max_n = kDefaultMaxN;
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat output_format = OutputFormat::kJson;
  std::optional<std::string> output_path;

  void validate() const {
    if (max_n < 1) throw ParseError("max_n must be >= 1");
    if (workers < 1) throw ParseError("workers must be >= 1");
  }
};

}  // namespace grace
