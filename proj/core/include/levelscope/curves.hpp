#pragma once

#include <optional>
#include <string>
#include <utility>

#include "levelscope/multipoly.hpp"
#include "levelscope/unipoly.hpp"

namespace levelscope {

enum class ModelKind { imaginary, real };  // deg h = 2g+1 vs 2g+2

std::string to_string(ModelKind k);

/// Validated hyperelliptic model y^2 = h(x) over F_p (p odd): h squarefree,
/// degree matching the kind, genus floor((deg h - 1)/2).
struct CurveModel {
    int genus;
    Fp fp;
    ModelKind kind;
    UniPoly h;
    std::string provenance;
};

CurveModel from_weierstrass(const UniPoly& h, std::optional<int> expected_genus = std::nullopt,
                            std::string provenance = "");

/// Homogeneous plane model in (x, y, z): y^2 z^(2g-1) - h(x, z) for the
/// imaginary kind (degree 2g+1), y^2 z^(2g) - h(x, z) for the real kind
/// (degree 2g+2).
MultiPoly homogenize(const CurveModel& m);

/// Birational transform (x, y) -> (1/(x-a), y/(x-a)^(g+1)); requires h(a) = 0.
/// The new model is h*(u) = u^(2g+2) h(a + 1/u), of degree 2g+1 exactly when
/// a is a simple root.
CurveModel to_imaginary(const CurveModel& m, u64 a);

/// A rational root of h, if one exists (smallest representative).
std::optional<u64> find_rational_root(const UniPoly& h);

enum class FamilyKind { mu_x, mu_const };

/// The two superspecial families: h = x^(2g+1) + mu*x (mu_x) and
/// h = x^(2g+1) + mu (mu_const).  For mu_x the attached prediction is the
/// classical superspecial congruence (p = 2g+1 or -1 mod 4g); for mu_const no
/// usable congruence is known, so no prediction is made.
std::pair<CurveModel, std::optional<bool>> family(FamilyKind kind, int genus, u64 mu, Fp fp);

/// Seeded uniform random monic squarefree h of degree 2g+1; deterministic for
/// a fixed seed.
CurveModel random_curve(int genus, Fp fp, u64 seed);

}  // namespace levelscope
