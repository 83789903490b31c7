#pragma once

#include <map>
#include <string>
#include <vector>

#include "levelscope/fp.hpp"
#include "levelscope/fp_matrix.hpp"

namespace levelscope {

using Exponents = std::vector<u32>;

/// Graded reverse lexicographic order, descending, so that map iteration
/// visits terms in canonical printed order (largest first).
struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// a < b in grevlex: smaller total degree, or equal degree and the rightmost
/// differing exponent of a is the larger one.
bool grevlex_less(const Exponents& a, const Exponents& b);

u64 exponent_degree(const Exponents& e);

/// Sparse multivariate polynomial over F_p with a canonical grevlex term
/// order.  Zero coefficients are never stored; the zero polynomial has an
/// empty term map.  Immutable in spirit: arithmetic returns new values.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, u64, GrevlexGreater>;

    MultiPoly(Fp fp, int nvars);

    static MultiPoly zero(Fp fp, int nvars) { return MultiPoly(fp, nvars); }
    static MultiPoly constant(Fp fp, int nvars, u64 c);
    static MultiPoly one(Fp fp, int nvars) { return constant(fp, nvars, 1); }
    static MultiPoly monomial(Fp fp, int nvars, Exponents exps, u64 c);
    static MultiPoly variable(Fp fp, int nvars, int index);

    const Fp& field() const { return fp_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    /// Total degree; the zero polynomial reports 0.
    u64 degree() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

    u64 coeff(const Exponents& e) const;
    void add_term(const Exponents& e, u64 c);  // accumulates, drops zeros

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scale(u64 c) const;

    bool operator==(const MultiPoly& other) const;
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    /// Exact f^n.  The exponent is decomposed in base p so each p^i-block is
    /// a cheap Frobenius power; only exponents below p are squared out.
    MultiPoly pow(u64 n) const;

    /// f^(p^k) for k >= 1: exponent vectors scale by p^k, coefficients stay
    /// fixed (they live in F_p).  k = 0 returns f unchanged.
    MultiPoly frobenius_power(u32 k) const;

    /// Right action f|A: substitutes x_i by the i-th row of A applied to the
    /// variable column.  A must be square of size nvars and invertible.
    MultiPoly linear_change(const FpMatrix& A) const;

    /// Canonical form: grevlex-descending terms, explicit '*' between factors
    /// and '^' on exponents above one, coefficients printed as canonical
    /// residues joined by '+'.
    std::string to_string(const std::vector<std::string>& vars) const;

    /// Parses the polynomial grammar (see README).  Throws ParseError with a
    /// position on malformed input; coefficients are reduced mod p.
    static MultiPoly parse(const std::string& text, Fp fp,
                           const std::vector<std::string>& vars);

private:
    void check_context(const MultiPoly& other) const;
    void check_budget(std::size_t candidate_terms) const;

    Fp fp_;
    int nvars_;
    TermMap terms_;
};

}  // namespace levelscope
