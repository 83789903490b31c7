#include "levelscope/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace levelscope {

std::vector<Exponents> monomials_of_degree(int nvars, u64 d) {
    std::vector<Exponents> out;
    Exponents current(nvars, 0);
    // Distribute degree d over the variables, rightmost position last.
    auto recurse = [&](auto&& self, int index, u64 remaining) -> void {
        if (index == nvars - 1) {
            current[index] = static_cast<u32>(remaining);
            out.push_back(current);
            return;
        }
        for (u64 k = remaining + 1; k-- > 0;) {
            current[index] = static_cast<u32>(k);
            self(self, index + 1, remaining - k);
        }
        current[index] = 0;
    };
    recurse(recurse, 0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

namespace {

// Canonical generator order: ascending degree, then term-sequence order.
bool generator_less(const MultiPoly& a, const MultiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    GrevlexGreater greater;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first != ib->first) return greater(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

MultiPoly make_monic(const MultiPoly& g) {
    u64 lead = g.terms().begin()->second;
    return lead == 1 ? g : g.scale(g.field().inv(lead));
}

}  // namespace

HomIdeal::HomIdeal(Fp fp, int nvars) : fp_(fp), nvars_(nvars) {}

HomIdeal::HomIdeal(Fp fp, int nvars, std::vector<MultiPoly> generators)
    : fp_(fp), nvars_(nvars) {
    for (auto& g : generators) {
        if (g.field() != fp_ || g.nvars() != nvars_)
            throw ArgumentError("generator context mismatch");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw ArgumentError("HomIdeal generators must be homogeneous");
        gens_.push_back(make_monic(g));
    }
    // Unit ideal is always represented by the single generator 1.
    for (const auto& g : gens_) {
        if (g.degree() == 0) {
            gens_ = {MultiPoly::one(fp_, nvars_)};
            return;
        }
    }
    std::sort(gens_.begin(), gens_.end(), generator_less);
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

HomIdeal HomIdeal::unit(Fp fp, int nvars) {
    return HomIdeal(fp, nvars, {MultiPoly::one(fp, nvars)});
}

bool HomIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().degree() == 0;
}

void HomIdeal::check_context(const HomIdeal& other) const {
    if (fp_ != other.fp_ || nvars_ != other.nvars_)
        throw ArgumentError("ideal context mismatch");
}

std::optional<std::vector<MultiPoly>> HomIdeal::member_cofactors(const MultiPoly& h) const {
    if (h.field() != fp_ || h.nvars() != nvars_) throw ArgumentError("context mismatch");
    if (!h.is_homogeneous()) throw ArgumentError("membership requires a homogeneous polynomial");
    std::vector<MultiPoly> cofactors(gens_.size(), MultiPoly::zero(fp_, nvars_));
    if (h.is_zero()) return cofactors;
    if (gens_.empty()) return std::nullopt;

    const u64 target_degree = h.degree();
    std::vector<Exponents> basis = monomials_of_degree(nvars_, target_degree);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<std::vector<u64>> columns;
    std::vector<std::pair<std::size_t, Exponents>> column_source;  // (generator, monomial)
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        const MultiPoly& g = gens_[j];
        if (g.degree() > target_degree) continue;
        for (const Exponents& m : monomials_of_degree(nvars_, target_degree - g.degree())) {
            std::vector<u64> col(basis.size(), 0);
            for (const auto& [e, c] : g.terms()) {
                Exponents prod(nvars_);
                for (int i = 0; i < nvars_; ++i) prod[i] = e[i] + m[i];
                col[index.at(prod)] = c;
            }
            columns.push_back(std::move(col));
            column_source.emplace_back(j, m);
        }
    }
    std::vector<u64> target(basis.size(), 0);
    for (const auto& [e, c] : h.terms()) target[index.at(e)] = c;

    auto coeffs = solve_in_span(fp_, columns, target);
    if (!coeffs) return std::nullopt;
    for (std::size_t k = 0; k < coeffs->size(); ++k) {
        if ((*coeffs)[k] == 0) continue;
        cofactors[column_source[k].first].add_term(column_source[k].second, (*coeffs)[k]);
    }
    return cofactors;
}

bool HomIdeal::contains(const MultiPoly& h) const {
    return member_cofactors(h).has_value();
}

bool HomIdeal::equals(const HomIdeal& other) const {
    check_context(other);
    for (const auto& g : gens_) {
        if (!other.contains(g)) return false;
    }
    for (const auto& g : other.gens_) {
        if (!contains(g)) return false;
    }
    return true;
}

HomIdeal HomIdeal::minimalized() const {
    if (is_unit() || gens_.empty()) return *this;
    std::vector<MultiPoly> kept;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<MultiPoly> others = kept;
        others.insert(others.end(), gens_.begin() + i + 1, gens_.end());
        HomIdeal rest(fp_, nvars_, std::move(others));
        if (!rest.contains(gens_[i])) kept.push_back(gens_[i]);
    }
    return HomIdeal(fp_, nvars_, std::move(kept));
}

HomIdeal HomIdeal::sum(const HomIdeal& other) const {
    check_context(other);
    std::vector<MultiPoly> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return HomIdeal(fp_, nvars_, std::move(gens));
}

std::string HomIdeal::to_string(const std::vector<std::string>& vars) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].to_string(vars);
    }
    os << ")";
    return os.str();
}

HomIdeal relevant_ideal(int genus, Fp fp) {
    if (genus < 2) throw ArgumentError("relevant ideal requires genus >= 2");
    const int nvars = 3;  // (x, y, z)
    std::vector<MultiPoly> gens;
    auto zx = [&](u32 a, u32 b) {
        Exponents e(nvars, 0);
        e[0] = b;
        e[2] = a;
        return MultiPoly::monomial(fp, nvars, std::move(e), 1);
    };
    for (int a = genus - 1; a <= 2 * genus - 2; ++a) gens.push_back(zx(a, 2 * genus - 2 - a));
    for (int a = 0; a < genus - 1; ++a) gens.push_back(zx(a, 2 * genus - 1 - a));
    return HomIdeal(fp, nvars, std::move(gens));
}

}  // namespace levelscope
