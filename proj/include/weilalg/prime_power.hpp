#pragma once

#include "weilalg/polynomial.hpp"

namespace weilalg {

/// Deterministic for n < 2^64 (trial division up to 10^6, then strong
/// Miller-Rabin on the first twelve prime bases); probabilistic above.
bool is_prime(const Integer& n);

/// q = p^a with p prime and a >= 1.
struct PrimePower {
    Integer p;
    unsigned a = 1;
    Integer q;

    /// Throws Errc::InvalidArgument unless q is a prime power.
    static PrimePower from_q(const Integer& q);
    static PrimePower from_pa(const Integer& p, unsigned a);

    /// The base q^m.
    PrimePower power(unsigned m) const { return from_pa(p, a * m); }

    friend bool operator==(const PrimePower& x, const PrimePower& y) { return x.p == y.p && x.a == y.a; }
};

}  // namespace weilalg
