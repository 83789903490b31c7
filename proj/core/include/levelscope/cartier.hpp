#pragma once

#include <optional>
#include <string>

#include "levelscope/fp_matrix.hpp"
#include "levelscope/unipoly.hpp"

namespace levelscope {

enum class CurveClass {
    ordinary,
    superspecial,
    supersingular,            // definitive for g <= 2 only
    p_rank_zero_nonordinary,  // g >= 3 with stable rank 0: necessary, not sufficient
    intermediate,
};

std::string to_string(CurveClass c);

/// Cartier-Manin data of y^2 = h(x), deg h = 2g+1: the g x g matrix C of
/// coefficients c_(ip-j) of h^((p-1)/2), the extended block with columns
/// j = 1..2g+1, ranks, nilpotency, and the classification readout.
struct CartierData {
    int genus;
    Fp fp;
    FpMatrix C;                          // g x g
    FpMatrix C_ext;                      // g x (2g+1); C is its leading g columns
    std::size_t rank_C;
    std::size_t stable_rank;             // rank(C^g): the p-rank
    std::optional<std::size_t> nilpotency;  // last nonzero power, when nilpotent
    CurveClass classification;
    bool yui_range_warning;              // p < 7: ordinary criterion outside stated range
};

/// Entry (i,j) = c_(ip-j) of h(x)^((p-1)/2), i = 1..g, j = 1..width.
FpMatrix cartier_manin(const UniPoly& h, int genus, std::size_t width);

/// Full analysis of a degree-(2g+1) squarefree model.
CartierData cartier_data(const UniPoly& h, int genus);

/// The p-rank: stable rank of the Cartier-Manin matrix.
std::size_t p_rank(const CartierData& data);

CurveClass classify(const CartierData& data);

/// Lower bound on the level implied by the nilpotency structure of C:
/// last nonzero power r >= 1 gives level >= r+2; otherwise the generic
/// genus >= 2 bound of 2 applies (the conjectured >= 3 for superspecial is
/// deliberately not asserted).
int level_lower_bound(const CartierData& data);

/// Direct expansion for the C_k cross-check: entry (i,j) = c^(k)_(i p^k - j)
/// of h^((p^k - 1)/2).
FpMatrix cartier_manin_iterate(const UniPoly& h, int genus, int k);

}  // namespace levelscope
