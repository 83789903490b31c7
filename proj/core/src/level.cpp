#include "levelscope/level.hpp"

#include <chrono>

namespace levelscope {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

LevelResult level_chain(const MultiPoly& f, int e_max) {
    if (f.is_zero()) throw ArgumentError("the level of the zero polynomial is undefined");
    if (e_max < 1) throw ArgumentError("e_max must be at least 1");
    const Fp fp = f.field();
    const int nvars = f.nvars();

    LevelResult result{f, {}, std::nullopt, false, {}};
    auto t0 = std::chrono::steady_clock::now();
    const MultiPoly F = f.pow(fp.modulus() - 1);
    HomIdeal current = roots_ideal(F, 1);
    result.chain.push_back(current);
    result.step_ms.push_back(ms_since(t0));
    if (current.is_unit()) {
        result.level = 1;  // I_1 = R = I_0
        return result;
    }
    for (int s = 1; s < e_max; ++s) {
        t0 = std::chrono::steady_clock::now();
        std::vector<MultiPoly> scaled;
        scaled.reserve(current.generators().size());
        for (const auto& g : current.generators()) scaled.push_back(F * g);
        HomIdeal next = roots_one_of_ideal(HomIdeal(fp, nvars, std::move(scaled)));
        result.chain.push_back(next);
        result.step_ms.push_back(ms_since(t0));
        if (current.equals(next)) {
            result.level = s + 1;
            return result;
        }
        current = std::move(next);
    }
    result.capped = true;
    return result;
}

HomIdeal level_direct(const MultiPoly& f, int e, u64 degree_budget) {
    if (f.is_zero()) throw ArgumentError("the level of the zero polynomial is undefined");
    if (e < 1) throw ArgumentError("level index e must be positive");
    const u64 p = f.field().modulus();
    u64 q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (f.degree() * (q - 1) > degree_budget)
        throw ResourceError("direct expansion degree " + std::to_string(f.degree() * (q - 1)) +
                            " exceeds budget " + std::to_string(degree_budget));
    return roots_ideal(f.pow(q - 1), e);
}

MultiPoly FrobeniusOperator::recombine(Fp fp, int nvars) const {
    MultiPoly sum(fp, nvars);
    for (const auto& [u, g] : pairs) {
        sum = sum + u * g.frobenius_power(static_cast<u32>(e));
    }
    return sum;
}

FrobeniusOperator extract_operator(const MultiPoly& f, const LevelResult& result, u64 max_q) {
    if (!result.level) throw ArgumentError("extract_operator requires a detected level");
    const int e = *result.level;
    const Fp fp = f.field();
    const u64 p = fp.modulus();
    u64 q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > max_q)
        throw ResourceError("p^e = " + std::to_string(q) + " exceeds the operator budget " +
                            std::to_string(max_q));

    const HomIdeal& J = result.chain.at(e - 1);  // I_e, the stabilized ideal
    const MultiPoly target = f.pow(q - p);

    // target = sum_alpha t_alpha^q x^alpha with each t_alpha in J (membership
    // theorem); Frobenius additivity turns cofactors of t_alpha into
    // cofactors of the target: t_alpha = sum_j v_j g_j gives
    // t_alpha^q = sum_j v_j^q g_j^q.
    RootDecomposition dec = decompose(target, e);
    const int nvars = f.nvars();
    std::vector<MultiPoly> cofactors(J.generators().size(), MultiPoly::zero(fp, nvars));
    for (const auto& [alpha, t_alpha] : dec.components) {
        auto v = J.member_cofactors(t_alpha);
        if (!v)
            throw InternalError(
                "f^(p^e - p) has a root component outside I_e; this contradicts the "
                "stabilization theorem");
        MultiPoly x_alpha = MultiPoly::monomial(fp, nvars, alpha, 1);
        for (std::size_t j = 0; j < v->size(); ++j) {
            if ((*v)[j].is_zero()) continue;
            cofactors[j] =
                cofactors[j] + x_alpha * (*v)[j].frobenius_power(static_cast<u32>(e));
        }
    }
    FrobeniusOperator op{e, {}};
    for (std::size_t j = 0; j < cofactors.size(); ++j) {
        op.pairs.emplace_back(cofactors[j], J.generators()[j]);
    }
    if (op.recombine(fp, nvars) != target)
        throw InternalError("operator certificate failed exact verification");
    return op;
}

u64 hasse_invariant(const MultiPoly& f) {
    if (f.nvars() != 3) throw ArgumentError("Hasse invariant needs a polynomial in x, y, z");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != 3)
        throw ArgumentError("Hasse invariant needs a homogeneous cubic");
    const u64 p = f.field().modulus();
    const u32 k = static_cast<u32>(p - 1);
    return f.pow(p - 1).coeff({k, k, k});
}

}  // namespace levelscope
