#include "levelscope/unipoly.hpp"

#include <algorithm>

namespace levelscope {

UniPoly::UniPoly(Fp fp, std::vector<u64> coeffs) : fp_(fp), c_(std::move(coeffs)) {
    for (auto& v : c_) v = fp_.reduce(v);
    normalize();
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::parse(const std::string& text, Fp fp, const std::string& var) {
    MultiPoly m = MultiPoly::parse(text, fp, {var});
    std::vector<u64> coeffs;
    for (const auto& [e, c] : m.terms()) {
        if (e[0] >= coeffs.size()) coeffs.resize(e[0] + 1, 0);
        coeffs[e[0]] = c;
    }
    return UniPoly(fp, std::move(coeffs));
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    if (fp_ != other.fp_) throw ArgumentError("modulus mismatch");
    std::vector<u64> r(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_.add(coeff(i), other.coeff(i));
    return UniPoly(fp_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    if (fp_ != other.fp_) throw ArgumentError("modulus mismatch");
    std::vector<u64> r(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_.sub(coeff(i), other.coeff(i));
    return UniPoly(fp_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (fp_ != other.fp_) throw ArgumentError("modulus mismatch");
    if (is_zero() || other.is_zero()) return UniPoly(fp_);
    std::vector<u64> r(c_.size() + other.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            r[i + j] = fp_.add(r[i + j], fp_.mul(c_[i], other.c_[j]));
        }
    }
    return UniPoly(fp_, std::move(r));
}

UniPoly UniPoly::pow(u64 n) const {
    UniPoly result(fp_, {1});
    UniPoly base = *this;
    while (n) {
        if (n & 1) result = result * base;
        if (n >>= 1) base = base * base;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(fp_);
    std::vector<u64> r(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = fp_.mul(c_[i], fp_.reduce(i));
    return UniPoly(fp_, std::move(r));
}

u64 UniPoly::eval(u64 x) const {
    x = fp_.reduce(x);
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = fp_.add(fp_.mul(acc, x), c_[i]);
    return acc;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    if (a.fp_ != b.fp_) throw ArgumentError("modulus mismatch");
    const Fp& fp = a.fp_;
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        // r0 mod r1 by long division.
        UniPoly rem = r0;
        u64 lead_inv = fp.inv(r1.c_.back());
        while (!rem.is_zero() && rem.degree() >= r1.degree()) {
            u64 factor = fp.mul(rem.c_.back(), lead_inv);
            std::size_t shift = rem.c_.size() - r1.c_.size();
            for (std::size_t i = 0; i < r1.c_.size(); ++i) {
                rem.c_[i + shift] = fp.sub(rem.c_[i + shift], fp.mul(factor, r1.c_[i]));
            }
            rem.normalize();
        }
        r0 = r1;
        r1 = rem;
    }
    if (!r0.is_zero()) {
        u64 inv = fp.inv(r0.c_.back());
        for (auto& v : r0.c_) v = fp.mul(v, inv);
    }
    return r0;
}

bool UniPoly::is_squarefree() const {
    if (is_zero()) return false;
    UniPoly d = derivative();
    if (d.is_zero()) return degree() == 0;
    return gcd(*this, d).degree() == 0;
}

std::vector<u64> UniPoly::taylor_shift(u64 a) const {
    a = fp_.reduce(a);
    std::vector<u64> b = c_;
    if (b.empty()) return b;
    // Repeated synthetic division by (x - a), in place: b_k ends up as the
    // coefficient of (x - a)^k.
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        for (std::size_t i = b.size() - 1; i-- > k;) {
            b[i] = fp_.add(b[i], fp_.mul(a, b[i + 1]));
        }
    }
    return b;
}

std::string UniPoly::to_string(const std::string& var) const {
    return to_multipoly(fp_, 1, 0).to_string({var});
}

MultiPoly UniPoly::to_multipoly(Fp fp, int nvars, int var_index) const {
    if (fp != fp_) throw ArgumentError("modulus mismatch");
    MultiPoly m(fp, nvars);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Exponents e(nvars, 0);
        e[var_index] = static_cast<u32>(i);
        m.add_term(e, c_[i]);
    }
    return m;
}

}  // namespace levelscope
