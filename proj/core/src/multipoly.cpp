#include "levelscope/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "levelscope/budget.hpp"

namespace levelscope {

u64 exponent_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), u64{0});
}

bool grevlex_less(const Exponents& a, const Exponents& b) {
    u64 da = exponent_degree(a), db = exponent_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_less(b, a);
}

MultiPoly::MultiPoly(Fp fp, int nvars) : fp_(fp), nvars_(nvars) {
    if (nvars < 1) throw ArgumentError("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(Fp fp, int nvars, u64 c) {
    MultiPoly p(fp, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(Fp fp, int nvars, Exponents exps, u64 c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw ArgumentError("exponent vector length does not match variable count");
    MultiPoly p(fp, nvars);
    p.add_term(std::move(exps), c);
    return p;
}

MultiPoly MultiPoly::variable(Fp fp, int nvars, int index) {
    if (index < 0 || index >= nvars) throw ArgumentError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(fp, nvars, std::move(e), 1);
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           exponent_degree(terms_.begin()->first) == 0;
}

u64 MultiPoly::degree() const {
    u64 d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    u64 d = exponent_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (exponent_degree(e) != d) return false;
    }
    return true;
}

u64 MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponents& e, u64 c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw ArgumentError("exponent vector length does not match variable count");
    c = fp_.reduce(c);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = fp_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_context(const MultiPoly& other) const {
    if (fp_ != other.fp_ || nvars_ != other.nvars_)
        throw ArgumentError("polynomial context mismatch (modulus or variable count)");
}

void MultiPoly::check_budget(std::size_t candidate_terms) const {
    if (candidate_terms > budget::max_terms()) {
        throw ResourceError("term budget exceeded: " + std::to_string(candidate_terms) +
                            " > LEVELSCOPE_MAX_TERMS=" + std::to_string(budget::max_terms()));
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    check_context(other);
    MultiPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    check_context(other);
    MultiPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, fp_.neg(c));
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(fp_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, fp_.neg(c));
    return r;
}

MultiPoly MultiPoly::scale(u64 c) const {
    c = fp_.reduce(c);
    MultiPoly r(fp_, nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) {
        u64 cv = fp_.mul(v, c);
        if (cv != 0) r.terms_.emplace(e, cv);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    check_context(other);
    check_budget(terms_.size() * other.terms_.size());
    MultiPoly r(fp_, nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) {
                u64 s = static_cast<u64>(ea[i]) + eb[i];
                if (s > std::numeric_limits<u32>::max())
                    throw ResourceError("exponent overflow in product");
                sum[i] = static_cast<u32>(s);
            }
            r.add_term(sum, fp_.mul(ca, cb));
        }
        r.check_budget(r.terms_.size());
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return fp_ == other.fp_ && nvars_ == other.nvars_ && terms_ == other.terms_;
}

namespace {

// Plain repeated squaring; used only for exponents below p.
MultiPoly pow_small(const MultiPoly& f, u64 n) {
    MultiPoly result = MultiPoly::one(f.field(), f.nvars());
    MultiPoly base = f;
    while (n) {
        if (n & 1) result = result * base;
        if (n >>= 1) base = base * base;
    }
    return result;
}

}  // namespace

MultiPoly MultiPoly::pow(u64 n) const {
    if (n == 0) return one(fp_, nvars_);
    const u64 p = fp_.modulus();
    MultiPoly result = one(fp_, nvars_);
    u32 block = 0;
    while (n) {
        u64 digit = n % p;
        n /= p;
        if (digit != 0) result = result * pow_small(*this, digit).frobenius_power(block);
        ++block;
    }
    return result;
}

MultiPoly MultiPoly::frobenius_power(u32 k) const {
    if (k == 0) return *this;
    const u64 p = fp_.modulus();
    u64 q = 1;
    for (u32 i = 0; i < k; ++i) {
        q *= p;
        if (q > std::numeric_limits<u32>::max())
            throw ResourceError("Frobenius exponent p^k overflows the exponent range");
    }
    MultiPoly r(fp_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents scaled(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            u64 s = static_cast<u64>(e[i]) * q;
            if (s > std::numeric_limits<u32>::max())
                throw ResourceError("exponent overflow in Frobenius power");
            scaled[i] = static_cast<u32>(s);
        }
        r.terms_.emplace(std::move(scaled), c);  // a^(p^k) = a for a in F_p
    }
    return r;
}

MultiPoly MultiPoly::linear_change(const FpMatrix& A) const {
    if (A.rows() != static_cast<std::size_t>(nvars_) || A.cols() != static_cast<std::size_t>(nvars_))
        throw ArgumentError("coordinate change matrix has wrong shape");
    if (A.rank() != static_cast<std::size_t>(nvars_))
        throw ArgumentError("coordinate change matrix is singular");
    // y_i = sum_j A(i,j) x_j; the image of each variable.
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly li(fp_, nvars_);
        for (int j = 0; j < nvars_; ++j) li.add_term([&] {
            Exponents e(nvars_, 0);
            e[j] = 1;
            return e;
        }(), A.at(i, j));
        images.push_back(std::move(li));
    }
    // Power cache per variable, grown on demand.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(one(fp_, nvars_));
    auto image_power = [&](int i, u32 k) -> const MultiPoly& {
        while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][k];
    };
    MultiPoly result(fp_, nvars_);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(fp_, nvars_, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) term = term * image_power(i, e[i]);
        }
        result = result + term;
    }
    return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != nvars_)
        throw ArgumentError("variable name list length does not match variable count");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << "+";
        first = false;
        bool constant_term = exponent_degree(e) == 0;
        bool wrote = false;
        if (c != 1 || constant_term) {
            os << c;
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    const Fp& fp;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    u64 parse_uint() {
        skip_ws();
        std::size_t start = pos;
        u64 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<u64>(text[pos] - '0');
            if (v > (u64{1} << 62)) throw ParseError("integer literal too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected an unsigned integer", pos);
        return v;
    }

    int parse_var() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            throw ParseError("expected a variable name", pos);
        std::string name;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_')) {
            name += text[pos++];
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) return static_cast<int>(i);
        }
        throw ParseError("unknown variable '" + name + "'", start);
    }

    // factor := var ['^' uint]
    void parse_factor(Exponents& exps) {
        int v = parse_var();
        u64 e = 1;
        if (accept('^')) {
            e = parse_uint();
            if (e > std::numeric_limits<u32>::max()) throw ParseError("exponent too large", pos);
        }
        u64 s = static_cast<u64>(exps[v]) + e;
        if (s > std::numeric_limits<u32>::max()) throw ParseError("exponent too large", pos);
        exps[v] = static_cast<u32>(s);
    }

    // term := coeff ['*' factor ...] | factor ('*' factor)*
    void parse_term(MultiPoly& acc, bool negative) {
        Exponents exps(vars.size(), 0);
        u64 coeff = 1;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = fp.reduce(parse_uint());
            if (!accept('*')) {
                acc.add_term(exps, negative ? fp.neg(coeff) : coeff);
                return;
            }
        }
        parse_factor(exps);
        while (accept('*')) parse_factor(exps);
        acc.add_term(exps, negative ? fp.neg(coeff) : coeff);
    }

    MultiPoly parse_poly() {
        if (eof()) throw ParseError("empty polynomial", pos);
        MultiPoly acc(fp, static_cast<int>(vars.size()));
        bool negative = accept('-');
        if (!negative) accept('+');
        parse_term(acc, negative);
        while (!eof()) {
            if (accept('+')) {
                parse_term(acc, false);
            } else if (accept('-')) {
                parse_term(acc, true);
            } else {
                throw ParseError(std::string("unexpected character '") + peek() + "'", pos);
            }
        }
        return acc;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, Fp fp, const std::vector<std::string>& vars) {
    if (vars.empty()) throw ArgumentError("variable list must be nonempty");
    Parser parser{text, fp, vars};
    return parser.parse_poly();
}

}  // namespace levelscope
