#pragma once

#include <optional>
#include <vector>

#include "levelscope/multipoly.hpp"

namespace levelscope {

/// All monomial exponent vectors of total degree d in nvars variables, in
/// canonical (grevlex descending) order.
std::vector<Exponents> monomials_of_degree(int nvars, u64 d);

/// Homogeneous ideal given by explicit generators.  Membership and equality
/// are decided degree by degree with plain linear algebra over the monomial
/// basis; no Groebner machinery.  Generators are kept nonzero, homogeneous,
/// deduplicated, and sorted canonically (degree, then term order).
class HomIdeal {
public:
    /// The zero ideal.
    HomIdeal(Fp fp, int nvars);
    HomIdeal(Fp fp, int nvars, std::vector<MultiPoly> generators);

    static HomIdeal unit(Fp fp, int nvars);

    const Fp& field() const { return fp_; }
    int nvars() const { return nvars_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    bool is_zero_ideal() const { return gens_.empty(); }
    /// True iff 1 lies in the ideal.
    bool is_unit() const;

    /// Membership for homogeneous h, decided in the single graded piece of
    /// degree deg(h).  Non-homogeneous input throws ArgumentError.  The zero
    /// ideal contains only 0.
    bool contains(const MultiPoly& h) const;

    /// Like contains, but reports polynomial cofactors u_j with
    /// h = sum_j u_j * g_j when membership holds.
    std::optional<std::vector<MultiPoly>> member_cofactors(const MultiPoly& h) const;

    /// Mutual inclusion of generator sets, checked in both directions.
    bool equals(const HomIdeal& other) const;

    /// Equal ideal with an irredundant generator list.  Deterministic: the
    /// canonical generator order fixes which redundant generators are dropped.
    HomIdeal minimalized() const;

    /// Ideal generated by the union of both generator lists.
    HomIdeal sum(const HomIdeal& other) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void check_context(const HomIdeal& other) const;

    Fp fp_;
    int nvars_;
    std::vector<MultiPoly> gens_;
};

/// The relevant ideal M of a genus-g curve, g >= 2, in variables (x, y, z):
/// monomials z^a x^b with a+b = 2g-2, a >= g-1, together with those with
/// a+b = 2g-1, 0 <= a < g-1.
HomIdeal relevant_ideal(int genus, Fp fp);

}  // namespace levelscope
