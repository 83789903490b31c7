#pragma once

#include <cstdint>

#include "levelscope/error.hpp"

namespace levelscope {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Arithmetic context for the prime field F_p.
///
/// Residues are plain u64 values kept canonically in [0, p).  The modulus is
/// capped at 2^31 - 1 so every product of two residues fits in 64 bits and no
/// arbitrary-precision arithmetic is needed.  p = 2 is rejected: the theory
/// implemented here needs odd characteristic throughout ((p-1)/2 exponents).
class Fp {
public:
    explicit Fp(u64 p);

    u64 modulus() const { return p_; }

    u64 reduce(u64 x) const { return x % p_; }
    /// Canonical residue of a possibly negative integer.
    u64 reduce_signed(long long x) const;

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p_; }

    u64 pow(u64 a, u64 n) const;

    /// Multiplicative inverse; throws ArgumentError on zero input.
    u64 inv(u64 a) const;

    bool operator==(const Fp& other) const { return p_ == other.p_; }
    bool operator!=(const Fp& other) const { return p_ != other.p_; }

private:
    u64 p_;
};

/// Deterministic primality test for word-sized inputs (Miller-Rabin).
bool is_prime_u64(u64 n);

}  // namespace levelscope
