#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levelscope/fp.hpp"

namespace levelscope {

inline constexpr const char* kToolVersion = "0.1.0";

/// One (curve, prime) result row.  Two wire formats, both fixed:
///   JSON object with exactly the keys {prime, poly, level, capped, chain,
///   rank_C, p_rank, nilpotency, class, bound, ms, version};
///   CSV columns prime,genus,h,level,capped,rank_C,p_rank,nilpotency,class,
///   bound,ms,seed.
struct RunRecord {
    u64 prime = 0;
    int genus = 0;
    std::string poly;                        // canonical homogeneous input
    std::string h;                           // canonical univariate model
    std::optional<int> level;
    bool capped = false;
    std::vector<std::vector<std::string>> chain;  // generator lists per step
    std::optional<std::size_t> rank_C;
    std::optional<std::size_t> p_rank;
    std::optional<long long> nilpotency;     // -1 encodes "not nilpotent"
    std::optional<std::string> classification;
    std::optional<int> bound;                // level lower bound
    double ms = 0.0;
    std::string version = kToolVersion;
    std::string seed;                        // seed or family provenance

    std::string to_json() const;
    static RunRecord from_json(const std::string& line);

    std::string to_csv_row() const;
    static RunRecord from_csv_row(const std::string& line);
    static std::string csv_header();

    bool operator==(const RunRecord& other) const;
};

}  // namespace levelscope
