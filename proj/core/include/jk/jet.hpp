#pragma once

#include "jk/field.hpp"

namespace jk {

// First-order jet a + eps*b over F_p, with eps^2 = 0. Evaluating a
// polynomial map at (x + eps*e_s) yields its value and the exact partial
// derivative in direction e_s, with no truncation error.
struct Jet {
    Fp a; // primal
    Fp b; // tangent
    friend bool operator==(Jet x, Jet y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Jet x, Jet y) { return !(x == y); }
};

class JetRing {
  public:
    explicit JetRing(const PrimeField& F) : F_(F) {}

    const PrimeField& field() const { return F_; }

    Jet lift(Fp a) const { return Jet{a, F_.zero()}; }
    Jet lift(Fp a, Fp b) const { return Jet{a, b}; }
    Jet zero() const { return Jet{F_.zero(), F_.zero()}; }
    Jet one() const { return Jet{F_.one(), F_.zero()}; }

    Jet add(Jet x, Jet y) const { return Jet{F_.add(x.a, y.a), F_.add(x.b, y.b)}; }
    Jet sub(Jet x, Jet y) const { return Jet{F_.sub(x.a, y.a), F_.sub(x.b, y.b)}; }
    Jet neg(Jet x) const { return Jet{F_.neg(x.a), F_.neg(x.b)}; }

    Jet mul(Jet x, Jet y) const {
        // (a + eps b)(c + eps d) = ac + eps(ad + bc)
        return Jet{F_.mul(x.a, y.a), F_.add(F_.mul(x.a, y.b), F_.mul(x.b, y.a))};
    }

    bool is_invertible(Jet x) const { return x.a.v != 0; }

    Jet inv(Jet x) const {
        if (x.a.v == 0) throw MathDomainError("JetRing::inv: primal part is zero");
        Fp ia = F_.inv(x.a);
        // (a + eps b)^-1 = a^-1 - eps b a^-2
        return Jet{ia, F_.neg(F_.mul(x.b, F_.mul(ia, ia)))};
    }

    Jet div(Jet x, Jet y) const { return mul(x, inv(y)); }

    Jet scale(Fp c, Jet x) const { return Jet{F_.mul(c, x.a), F_.mul(c, x.b)}; }

  private:
    const PrimeField& F_;
};

} // namespace jk
