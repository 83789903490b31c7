#pragma once

#include <map>

#include "levelscope/ideal.hpp"
#include "levelscope/multipoly.hpp"

namespace levelscope {

/// Expansion of g over the monomial basis of R as an R^(p^e)-module:
/// g = sum_alpha g_alpha^(p^e) * x^alpha with every alpha-coordinate below
/// p^e.  Coefficient roots are the coefficients themselves since they live in
/// F_p; this silently breaks over proper extension fields, which the Fp
/// context rules out.
struct RootDecomposition {
    int e;
    std::map<Exponents, MultiPoly, GrevlexGreater> components;

    /// sum_alpha g_alpha^(p^e) x^alpha, for checking the defining identity.
    MultiPoly reconstruct(Fp fp, int nvars) const;
};

RootDecomposition decompose(const MultiPoly& g, int e);

/// The ideal of p^e-th roots I_e(g): smallest J with g in J^[p^e], generated
/// by the components of the decomposition; returned minimalized.
HomIdeal roots_ideal(const MultiPoly& g, int e);

/// Smallest ideal L with K contained in L^[p], computed as the sum of
/// I_1(h) over the generators h of K.
HomIdeal roots_one_of_ideal(const HomIdeal& K);

}  // namespace levelscope
