#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "gpg/error.hpp"

namespace gpg {

/// Size limits for anything that gets materialized. Symbolic closed forms
/// never consult these.
struct Budget {
  std::uint64_t field_order = std::uint64_t{1} << 22;  // Zech/log tables
  std::uint64_t graph_order = std::uint64_t{1} << 14;  // packed adjacency matrix
  std::uint64_t oracle_order = 4096;                   // pairwise brute force
  std::uint64_t tree_order = 512;                      // Bareiss determinant

  /// Raises the field and graph limits together; this is what --max-order
  /// and GPG_MAX_ORDER control.
  Budget with_max_order(std::uint64_t order) const {
    Budget copy = *this;
    copy.field_order = order;
    copy.graph_order = order;
    return copy;
  }

  static Budget from_environment() {
    Budget budget;
    if (const char* raw = std::getenv("GPG_MAX_ORDER"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0' || value == 0) {
        fail(ErrorCode::InvalidArgument, std::string("GPG_MAX_ORDER is not a positive integer: ") + raw);
      }
      budget = budget.with_max_order(value);
    }
    return budget;
  }
};

}  // namespace gpg
