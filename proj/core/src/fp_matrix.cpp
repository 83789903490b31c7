#include "levelscope/fp_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace levelscope {

FpMatrix::FpMatrix(Fp fp, std::size_t rows, std::size_t cols)
    : fp_(fp), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FpMatrix::FpMatrix(Fp fp, std::size_t rows, std::size_t cols, std::vector<u64> entries)
    : fp_(fp), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw ArgumentError("entry count does not match matrix shape");
    for (auto& v : a_) v = fp_.reduce(v);
}

FpMatrix FpMatrix::identity(Fp fp, std::size_t n) {
    FpMatrix m(fp, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool FpMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](u64 v) { return v == 0; });
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
    if (fp_ != other.fp_) throw ArgumentError("modulus mismatch in matrix product");
    if (cols_ != other.rows_) throw ArgumentError("shape mismatch in matrix product");
    FpMatrix r(fp_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            u64 aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                r.a_[i * other.cols_ + j] =
                    fp_.add(r.a_[i * other.cols_ + j], fp_.mul(aik, other.at(k, j)));
            }
        }
    }
    return r;
}

FpMatrix FpMatrix::pow(u64 k) const {
    if (!is_square()) throw ArgumentError("matrix power requires a square matrix");
    FpMatrix result = identity(fp_, rows_);
    FpMatrix base = *this;
    while (k) {
        if (k & 1) result = result.mul(base);
        base = base.mul(base);
        k >>= 1;
    }
    return result;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(fp_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

std::size_t FpMatrix::rank() const {
    std::vector<u64> m = a_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t i = rank; i < rows_; ++i) {
            if (m[i * cols_ + col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m[pivot * cols_ + j], m[rank * cols_ + j]);
        }
        u64 inv = fp_.inv(m[rank * cols_ + col]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            u64 factor = fp_.mul(m[i * cols_ + col], inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                m[i * cols_ + j] =
                    fp_.sub(m[i * cols_ + j], fp_.mul(factor, m[rank * cols_ + j]));
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<std::size_t> FpMatrix::nilpotency_index() const {
    if (!is_square()) throw ArgumentError("nilpotency index requires a square matrix");
    FpMatrix power = identity(fp_, rows_);
    for (std::size_t r = 0; r <= rows_; ++r) {
        FpMatrix next = power.mul(*this);
        if (next.is_zero()) return r;
        power = next;
    }
    return std::nullopt;  // rank(M^n) = rank(M^(n+1)) for n = dim, so not nilpotent
}

bool FpMatrix::operator==(const FpMatrix& other) const {
    return fp_ == other.fp_ && rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::optional<std::vector<u64>> solve_in_span(const Fp& fp,
                                              const std::vector<std::vector<u64>>& vectors,
                                              const std::vector<u64>& target) {
    const std::size_t dim = target.size();
    const std::size_t n = vectors.size();
    for (const auto& v : vectors) {
        if (v.size() != dim) throw ArgumentError("vector length mismatch in solve_in_span");
    }
    // Augmented system: columns are the candidate vectors, last column the target.
    std::vector<u64> m(dim * (n + 1), 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dim; ++i) m[i * (n + 1) + j] = fp.reduce(vectors[j][i]);
    for (std::size_t i = 0; i < dim; ++i) m[i * (n + 1) + n] = fp.reduce(target[i]);

    const std::size_t width = n + 1;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < dim; ++col) {
        std::size_t pivot = dim;
        for (std::size_t i = row; i < dim; ++i) {
            if (m[i * width + col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == dim) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < width; ++j) std::swap(m[pivot * width + j], m[row * width + j]);
        }
        u64 inv = fp.inv(m[row * width + col]);
        for (std::size_t j = col; j < width; ++j) m[row * width + j] = fp.mul(m[row * width + j], inv);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row) continue;
            u64 factor = m[i * width + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < width; ++j) {
                m[i * width + j] = fp.sub(m[i * width + j], fp.mul(factor, m[row * width + j]));
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent iff some zero row has a nonzero target entry.
    for (std::size_t i = row; i < dim; ++i) {
        if (m[i * width + n] != 0) return std::nullopt;
    }
    std::vector<u64> coeffs(n, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = m[r * width + n];
    return coeffs;
}

}  // namespace levelscope
