#include "levelscope/cartier.hpp"

namespace levelscope {

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::ordinary: return "ordinary";
        case CurveClass::superspecial: return "superspecial";
        case CurveClass::supersingular: return "supersingular";
        case CurveClass::p_rank_zero_nonordinary: return "p-rank-zero-nonordinary";
        case CurveClass::intermediate: return "intermediate";
    }
    return "?";
}

namespace {

FpMatrix matrix_from_expansion(const UniPoly& power, const Fp& fp, int genus, u64 step,
                               std::size_t width) {
    FpMatrix m(fp, genus, width);
    for (int i = 1; i <= genus; ++i) {
        for (std::size_t j = 1; j <= width; ++j) {
            u64 index = static_cast<u64>(i) * step;
            if (index < j) continue;  // c with negative index is zero
            m.set(i - 1, j - 1, power.coeff(index - j));
        }
    }
    return m;
}

void validate_model(const UniPoly& h, int genus) {
    if (genus < 1) throw ArgumentError("genus must be at least 1");
    if (h.degree() != 2 * genus + 1)
        throw ArgumentError("expected deg h = 2g+1 = " + std::to_string(2 * genus + 1) +
                            ", got " + std::to_string(h.degree()));
    if (!h.is_squarefree()) throw ArgumentError("h has a multiple root");
}

}  // namespace

FpMatrix cartier_manin(const UniPoly& h, int genus, std::size_t width) {
    validate_model(h, genus);
    const Fp fp = h.field();
    UniPoly power = h.pow((fp.modulus() - 1) / 2);
    return matrix_from_expansion(power, fp, genus, fp.modulus(), width);
}

FpMatrix cartier_manin_iterate(const UniPoly& h, int genus, int k) {
    validate_model(h, genus);
    const Fp fp = h.field();
    u64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= fp.modulus();
    UniPoly power = h.pow((pk - 1) / 2);
    return matrix_from_expansion(power, fp, genus, pk, genus);
}

CartierData cartier_data(const UniPoly& h, int genus) {
    const Fp fp = h.field();
    FpMatrix ext = cartier_manin(h, genus, 2 * genus + 1);
    FpMatrix C(fp, genus, genus);
    for (int i = 0; i < genus; ++i)
        for (int j = 0; j < genus; ++j) C.set(i, j, ext.at(i, j));

    CartierData data{genus,
                     fp,
                     C,
                     ext,
                     C.rank(),
                     C.pow(genus).rank(),
                     C.nilpotency_index(),
                     CurveClass::intermediate,
                     fp.modulus() < 7};
    data.classification = classify(data);
    return data;
}

std::size_t p_rank(const CartierData& data) { return data.stable_rank; }

CurveClass classify(const CartierData& data) {
    const std::size_t g = data.genus;
    if (data.rank_C == g) return CurveClass::ordinary;
    if (data.C.is_zero()) return CurveClass::superspecial;
    if (g <= 2 && data.C.pow(2).is_zero()) return CurveClass::supersingular;
    if (g >= 3 && data.stable_rank == 0) return CurveClass::p_rank_zero_nonordinary;
    return CurveClass::intermediate;
}

int level_lower_bound(const CartierData& data) {
    if (data.genus < 2) throw ArgumentError("level lower bound requires genus >= 2");
    if (data.nilpotency && *data.nilpotency >= 1)
        return static_cast<int>(*data.nilpotency) + 2;
    return 2;
}

}  // namespace levelscope
