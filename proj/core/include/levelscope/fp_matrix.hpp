#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "levelscope/fp.hpp"

namespace levelscope {

/// Dense matrix over F_p, row-major.  Immutable after construction apart from
/// the entry setter used while filling.
class FpMatrix {
public:
    FpMatrix(Fp fp, std::size_t rows, std::size_t cols);
    FpMatrix(Fp fp, std::size_t rows, std::size_t cols, std::vector<u64> entries);

    static FpMatrix identity(Fp fp, std::size_t n);

    const Fp& field() const { return fp_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u64 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, u64 v) { a_[i * cols_ + j] = fp_.reduce(v); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    FpMatrix mul(const FpMatrix& other) const;
    /// Exact k-th power; k = 0 gives the identity.
    FpMatrix pow(u64 k) const;
    FpMatrix transpose() const;

    /// Row rank via fraction-free Gaussian elimination.  Deterministic:
    /// columns are processed left to right, the pivot is the first row with a
    /// nonzero entry (there is no pivot magnitude over F_p).
    std::size_t rank() const;

    /// Smallest r >= 0 with M^(r+1) = 0 and M^r != 0, when M is nilpotent.
    std::optional<std::size_t> nilpotency_index() const;

    bool operator==(const FpMatrix& other) const;
    bool operator!=(const FpMatrix& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Fp fp_;
    std::size_t rows_, cols_;
    std::vector<u64> a_;
};

/// Expresses `target` as an F_p-linear combination of `vectors`, or returns
/// nullopt when target is outside their span.  All vectors must share the
/// target's length; mismatches throw ArgumentError.
std::optional<std::vector<u64>> solve_in_span(const Fp& fp,
                                              const std::vector<std::vector<u64>>& vectors,
                                              const std::vector<u64>& target);

}  // namespace levelscope
