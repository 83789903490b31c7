#include "levelscope/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace levelscope::budget {

namespace {

std::uint64_t initial_max_terms() {
    if (const char* env = std::getenv("LEVELSCOPE_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxTerms;
}

std::atomic<std::uint64_t>& cap() {
    static std::atomic<std::uint64_t> value{initial_max_terms()};
    return value;
}

}  // namespace

std::uint64_t max_terms() { return cap().load(); }

void set_max_terms(std::uint64_t n) { cap().store(n); }

}  // namespace levelscope::budget
