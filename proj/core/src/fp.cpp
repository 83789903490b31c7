#include "levelscope/fp.hpp"

namespace levelscope {

namespace {

u64 mulmod_wide(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 powmod_wide(u64 a, u64 n, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = mulmod_wide(r, a, m);
        a = mulmod_wide(a, a, m);
        n >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_wide(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_wide(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Fp::Fp(u64 p) : p_(p) {
    if (p == 2) throw ArgumentError("p = 2 is not supported: odd characteristic is required");
    if (p > 0x7fffffffull) throw ArgumentError("modulus exceeds 2^31 - 1");
    if (!is_prime_u64(p)) throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
}

u64 Fp::reduce_signed(long long x) const {
    long long m = static_cast<long long>(p_);
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

u64 Fp::pow(u64 a, u64 n) const {
    u64 r = 1 % p_;
    a %= p_;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

u64 Fp::inv(u64 a) const {
    a %= p_;
    if (a == 0) throw ArgumentError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

}  // namespace levelscope
