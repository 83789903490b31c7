#pragma once

#include <cstdint>

namespace levelscope {

/// Process-wide resource limits.  The term cap guards polynomial products
/// against thrashing; LEVELSCOPE_MAX_TERMS in the environment overrides the
/// default at startup.
namespace budget {

constexpr std::uint64_t kDefaultMaxTerms = 50'000'000;

std::uint64_t max_terms();
void set_max_terms(std::uint64_t n);

}  // namespace budget
}  // namespace levelscope
