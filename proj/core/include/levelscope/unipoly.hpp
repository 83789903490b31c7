#pragma once

#include <string>
#include <vector>

#include "levelscope/fp.hpp"
#include "levelscope/multipoly.hpp"

namespace levelscope {

/// Dense univariate polynomial over F_p; coefficient of x^i at index i,
/// normalized so the leading coefficient is nonzero (zero = empty vector).
class UniPoly {
public:
    explicit UniPoly(Fp fp) : fp_(fp) {}
    UniPoly(Fp fp, std::vector<u64> coeffs);

    static UniPoly parse(const std::string& text, Fp fp, const std::string& var = "x");

    const Fp& field() const { return fp_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; the zero polynomial reports -1.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly pow(u64 n) const;
    UniPoly derivative() const;
    u64 eval(u64 x) const;

    /// Monic gcd via the Euclidean algorithm.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    bool is_squarefree() const;

    /// Coefficients b_k with h(x) = sum b_k (x - a)^k (repeated synthetic
    /// division, exact).
    std::vector<u64> taylor_shift(u64 a) const;

    bool operator==(const UniPoly& other) const { return fp_ == other.fp_ && c_ == other.c_; }
    bool operator!=(const UniPoly& other) const { return !(*this == other); }

    std::string to_string(const std::string& var = "x") const;
    MultiPoly to_multipoly(Fp fp, int nvars, int var_index) const;

private:
    void normalize();

    Fp fp_;
    std::vector<u64> c_;
};

}  // namespace levelscope
