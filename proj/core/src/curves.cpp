#include "levelscope/curves.hpp"

#include <random>

#include "levelscope/error.hpp"

namespace levelscope {

std::string to_string(ModelKind k) {
    return k == ModelKind::imaginary ? "imaginary" : "real";
}

CurveModel from_weierstrass(const UniPoly& h, std::optional<int> expected_genus,
                            std::string provenance) {
    long long d = h.degree();
    if (d < 3) throw CurveError("deg h = " + std::to_string(d) + " is below the hyperelliptic range");
    if (!h.is_squarefree()) throw CurveError("h has a multiple root");
    int genus = static_cast<int>((d - 1) / 2);
    ModelKind kind = (d % 2 == 1) ? ModelKind::imaginary : ModelKind::real;
    if (expected_genus && *expected_genus != genus)
        throw CurveError("expected genus " + std::to_string(*expected_genus) + " but deg h = " +
                         std::to_string(d) + " gives genus " + std::to_string(genus));
    return CurveModel{genus, h.field(), kind, h, std::move(provenance)};
}

MultiPoly homogenize(const CurveModel& m) {
    const Fp fp = m.fp;
    const int nvars = 3;  // x = 0, y = 1, z = 2
    const u32 total = static_cast<u32>(m.kind == ModelKind::imaginary ? 2 * m.genus + 1
                                                                      : 2 * m.genus + 2);
    MultiPoly f(fp, nvars);
    f.add_term({0, 2, total - 2}, 1);  // y^2 z^(total-2)
    for (std::size_t i = 0; i < m.h.coeffs().size(); ++i) {
        u64 c = m.h.coeff(i);
        if (c == 0) continue;
        f.add_term({static_cast<u32>(i), 0, total - static_cast<u32>(i)}, fp.neg(c));
    }
    return f;
}

CurveModel to_imaginary(const CurveModel& m, u64 a) {
    const Fp fp = m.fp;
    a = fp.reduce(a);
    if (m.h.eval(a) != 0) throw ArgumentError("a is not a root of h");
    // h(x) = sum_k b_k (x-a)^k; then u^(2g+2) h(a + 1/u) = sum_k b_k u^(2g+2-k).
    std::vector<u64> b = m.h.taylor_shift(a);
    const std::size_t top = 2 * static_cast<std::size_t>(m.genus) + 2;
    std::vector<u64> star(top + 1, 0);
    for (std::size_t k = 0; k < b.size(); ++k) star[top - k] = b[k];
    UniPoly h_star(fp, std::move(star));
    if (h_star.degree() != static_cast<long long>(top) - 1)
        throw CurveError("transform dropped the degree below 2g+1: a is not a simple root");
    if (!h_star.is_squarefree()) throw CurveError("transformed model is not squarefree");
    return CurveModel{m.genus, fp, ModelKind::imaginary, h_star,
                      m.provenance.empty() ? "to_imaginary" : m.provenance + ";to_imaginary"};
}

std::optional<u64> find_rational_root(const UniPoly& h) {
    for (u64 a = 0; a < h.field().modulus(); ++a) {
        if (h.eval(a) == 0) return a;
    }
    return std::nullopt;
}

std::pair<CurveModel, std::optional<bool>> family(FamilyKind kind, int genus, u64 mu, Fp fp) {
    if (genus < 2) throw ArgumentError("family curves require genus >= 2");
    mu = fp.reduce(mu);
    if (mu == 0) throw ArgumentError("family parameter mu must be nonzero");
    const std::size_t d = 2 * static_cast<std::size_t>(genus) + 1;
    std::vector<u64> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::optional<bool> predicted;
    std::string tag;
    if (kind == FamilyKind::mu_x) {
        coeffs[1] = mu;
        u64 m4g = 4 * static_cast<u64>(genus);
        u64 r = fp.modulus() % m4g;
        predicted = (r == (2 * static_cast<u64>(genus) + 1) % m4g) || (r == m4g - 1);
        tag = "family:mu_x";
    } else {
        coeffs[0] = mu;
        predicted = std::nullopt;  // no usable congruence is known for this family
        tag = "family:mu_const";
    }
    UniPoly h(fp, std::move(coeffs));
    CurveModel model = from_weierstrass(h, genus, tag + ";mu=" + std::to_string(mu));
    return {std::move(model), predicted};
}

CurveModel random_curve(int genus, Fp fp, u64 seed) {
    if (genus < 1) throw ArgumentError("genus must be at least 1");
    const std::size_t d = 2 * static_cast<std::size_t>(genus) + 1;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<u64> coeffs(d + 1, 0);
        coeffs[d] = 1;  // monic
        for (std::size_t i = 0; i < d; ++i) coeffs[i] = rng() % fp.modulus();
        UniPoly h(fp, std::move(coeffs));
        if (h.is_squarefree())
            return CurveModel{genus, fp, ModelKind::imaginary, h,
                              "random;seed=" + std::to_string(seed)};
    }
    throw CurveError("no squarefree sample found (is p too small for this genus?)");
}

}  // namespace levelscope
