#include "levelscope/proots.hpp"

#include <cassert>
#include <limits>

namespace levelscope {

MultiPoly RootDecomposition::reconstruct(Fp fp, int nvars) const {
    MultiPoly sum(fp, nvars);
    for (const auto& [alpha, g_alpha] : components) {
        sum = sum + g_alpha.frobenius_power(static_cast<u32>(e)) *
                        MultiPoly::monomial(fp, nvars, alpha, 1);
    }
    return sum;
}

RootDecomposition decompose(const MultiPoly& g, int e) {
    if (e < 1) throw ArgumentError("decomposition level e must be positive");
    const u64 p = g.field().modulus();
    u64 q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > std::numeric_limits<u32>::max())
            throw ResourceError("p^e exceeds the exponent budget");
    }
    RootDecomposition dec{e, {}};
    const int nvars = g.nvars();
    for (const auto& [beta, c] : g.terms()) {
        Exponents alpha(nvars), quotient(nvars);
        for (int i = 0; i < nvars; ++i) {
            alpha[i] = static_cast<u32>(beta[i] % q);
            quotient[i] = static_cast<u32>(beta[i] / q);
        }
        auto [it, inserted] =
            dec.components.try_emplace(std::move(alpha), MultiPoly::zero(g.field(), nvars));
        it->second.add_term(quotient, c);  // c^(1/p^e) = c in F_p
    }
#ifndef NDEBUG
    assert(dec.reconstruct(g.field(), nvars) == g);
#endif
    return dec;
}

HomIdeal roots_ideal(const MultiPoly& g, int e) {
    RootDecomposition dec = decompose(g, e);
    std::vector<MultiPoly> gens;
    gens.reserve(dec.components.size());
    for (auto& [alpha, g_alpha] : dec.components) gens.push_back(std::move(g_alpha));
    return HomIdeal(g.field(), g.nvars(), std::move(gens)).minimalized();
}

HomIdeal roots_one_of_ideal(const HomIdeal& K) {
    HomIdeal result(K.field(), K.nvars());
    for (const auto& h : K.generators()) result = result.sum(roots_ideal(h, 1));
    return result.minimalized();
}

}  // namespace levelscope
