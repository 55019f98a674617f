#pragma once

#include <cstdint>

#include "jk/errors.hpp"
#include "jk/rng.hpp"

namespace jk {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

// A residue mod p. The modulus lives in PrimeField; values are always kept
// in [0, p).
struct Fp {
    u64 v = 0;
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

// Deterministic Miller-Rabin, exact for all inputs below 2^64.
bool is_probable_prime(u64 n);

// Arithmetic context for F_p, p an odd prime < 2^62. The default modulus
// 2^61 - 1 is Mersenne, which gets a dedicated shift-add reduction in mul();
// other primes fall back to 128-bit division.
class PrimeField {
  public:
    static constexpr u64 kDefaultPrime = (u64(1) << 61) - 1;

    explicit PrimeField(u64 p = kDefaultPrime) : p_(p) {
        if (p < 3 || p >= (u64(1) << 62) || p % 2 == 0 || !is_probable_prime(p))
            throw InvalidArgument("PrimeField: modulus must be an odd prime < 2^62");
        mersenne_ = (p == kDefaultPrime);
    }

    u64 modulus() const { return p_; }
    bool is_mersenne61() const { return mersenne_; }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1}; }

    Fp add(Fp a, Fp b) const {
        u64 s = a.v + b.v; // p < 2^62, no overflow
        return Fp{s >= p_ ? s - p_ : s};
    }
    Fp sub(Fp a, Fp b) const {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    }
    Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }

    Fp mul(Fp a, Fp b) const {
        u128 t = u128(a.v) * b.v;
        if (mersenne_) {
            // 2^61 = 1 mod p: fold high bits onto low ones
            u64 lo = u64(t) & kDefaultPrime;
            u64 hi = u64(t >> 61);
            u64 s = lo + hi; // < 2^62 < 2p
            return Fp{s >= p_ ? s - p_ : s};
        }
        return Fp{u64(t % p_)};
    }

    Fp inv(Fp a) const {
        if (a.v == 0) throw MathDomainError("PrimeField::inv: inverse of zero");
        // extended Euclid; |coefficients| stay below p
        i128 u = 1, w = 0;
        i128 x = i128(a.v), y = i128(p_);
        while (y != 0) {
            i128 q = x / y;
            i128 t = u - q * w;
            u = w;
            w = t;
            t = x - q * y;
            x = y;
            y = t;
        }
        i128 r = u % i128(p_);
        if (r < 0) r += i128(p_);
        return Fp{u64(r)};
    }

    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    Fp pow(Fp a, u64 e) const {
        Fp r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    Fp from_int(i64 v) const {
        i64 m = v % i64(p_);
        if (m < 0) m += i64(p_);
        return Fp{u64(m)};
    }
    Fp from_uint(u64 v) const { return Fp{v % p_}; }

    // Exact image of the rational num/den.
    Fp from_ratio(i64 num, i64 den) const {
        if (den == 0) throw InvalidArgument("PrimeField::from_ratio: zero denominator");
        return mul(from_int(num), inv(from_int(den)));
    }

    // Uniform residue in [0, p). Rejection sampling on 62-bit draws keeps the
    // acceptance rate above 1/2 for every admissible modulus; the draw order
    // is part of the determinism contract.
    Fp sample(SeededRng& rng) const {
        const u64 span = u64(1) << 62;
        const u64 limit = (span / p_) * p_;
        for (;;) {
            u64 x = rng.next() >> 2;
            if (x < limit) return Fp{x % p_};
        }
    }

    Fp sample_nonzero(SeededRng& rng) const {
        for (;;) {
            Fp x = sample(rng);
            if (x.v != 0) return x;
        }
    }

  private:
    u64 p_;
    bool mersenne_;
};

inline bool is_probable_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    auto mulmod = [n](u64 a, u64 b) { return u64(u128(a) * b % n); };
    auto powmod = [&](u64 a, u64 e) {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    // deterministic witness set for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace jk
