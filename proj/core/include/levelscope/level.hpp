#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "levelscope/ideal.hpp"
#include "levelscope/multipoly.hpp"
#include "levelscope/proots.hpp"

namespace levelscope {

/// Outcome of the level computation: the chain I_1, I_2, ... of ideals of
/// p^s-th roots of f^(p^s - 1), the detected level, or a capped marker when
/// e_max was exhausted before the chain stabilized.
struct LevelResult {
    MultiPoly f;
    std::vector<HomIdeal> chain;  // chain[s-1] = I_s(f^(p^s - 1))
    std::optional<int> level;
    bool capped = false;
    std::vector<double> step_ms;
};

constexpr int kDefaultMaxLevel = 8;
constexpr u64 kDefaultDirectDegreeBudget = 30'000;
constexpr u64 kDefaultOperatorMaxQ = 125;

/// Computes the chain until rigid stabilization.  One expansion F = f^(p-1)
/// is taken; each step uses I_(s+1)(f^(p^(s+1)-1)) = Roots_1({F*g : g in I_s}),
/// which keeps every intermediate degree near deg(f) instead of deg(f)*p^s.
/// The equivalence with the definition is exercised by level_direct.
LevelResult level_chain(const MultiPoly& f, int e_max = kDefaultMaxLevel);

/// The definition applied literally: I_e(f^(p^e - 1)) with no recursion.
/// Guarded by a degree budget since the expansion is exponential in e.
HomIdeal level_direct(const MultiPoly& f, int e,
                      u64 degree_budget = kDefaultDirectDegreeBudget);

/// Certificate for a Frobenius-descent operator of level e: cofactors u_j and
/// generators g_j of I_e(f^(p^e - 1)) with f^(p^e - p) = sum_j u_j * g_j^(p^e).
struct FrobeniusOperator {
    int e;
    std::vector<std::pair<MultiPoly, MultiPoly>> pairs;  // (cofactor, generator)

    MultiPoly recombine(Fp fp, int nvars) const;
};

/// Solves for the cofactor certificate.  Requires result.level to be set and
/// p^e within max_q; failure to solve contradicts the stabilization theorem
/// and raises InternalError.
FrobeniusOperator extract_operator(const MultiPoly& f, const LevelResult& result,
                                   u64 max_q = kDefaultOperatorMaxQ);

/// Coefficient of (xyz)^(p-1) in f^(p-1) for a homogeneous cubic in three
/// variables; zero exactly when the cubic defines a supersingular elliptic
/// curve.
u64 hasse_invariant(const MultiPoly& f);

}  // namespace levelscope
