#pragma once

// Weil q-numbers, Tate structures and the operations on them: twist,
// coniveau and slope filtrations, restriction of the base field and m-th roots.

#include <vector>

#include "weilalg/padic.hpp"
#include "weilalg/polynomial.hpp"
#include "weilalg/prime_power.hpp"

namespace weilalg {

/// Weight m with |rho(alpha)| = q^(m/2) for every root alpha of P and every
/// embedding rho. P must be monic with P(0) != 0; every root must share the
/// same weight. Throws NotWeilError carrying the failed check.
int verify_weil(const Polynomial& p, const PrimePower& q);

/// Galois orbit of a Weil q-number: its minimal polynomial, base and weight.
struct WeilOrbit {
    Polynomial min_poly;
    PrimePower base;
    int weight = 0;

    /// Verifies irreducibility (Errc::NotIrreducible) and the Weil property.
    static WeilOrbit make(const Polynomial& min_poly, const PrimePower& base);

    unsigned degree() const { return static_cast<unsigned>(min_poly.degree()); }

    friend bool operator==(const WeilOrbit& a, const WeilOrbit& b) {
        return a.min_poly == b.min_poly && a.base == b.base && a.weight == b.weight;
    }
};

struct OrbitPart {
    WeilOrbit orbit;
    unsigned multiplicity = 1;

    friend bool operator==(const OrbitPart&, const OrbitPart&) = default;
};

/// Semisimplified Tate structure: distinct orbits with multiplicities, sorted
/// by minimal polynomial.
struct TateStructure {
    PrimePower base;
    std::vector<OrbitPart> parts;

    unsigned dimension() const;
    /// Product of min_poly^multiplicity.
    Polynomial charpoly() const;
    /// Orbit decomposition of a monic characteristic polynomial.
    static TateStructure from_charpoly(const Polynomial& monic, const PrimePower& base);

    friend bool operator==(const TateStructure&, const TateStructure&) = default;
};

/// True when alpha is an algebraic integer, i.e. the minimal polynomial has
/// integer coefficients.
bool is_effective(const WeilOrbit& orbit);

/// alpha -> alpha / q^r; the weight drops by 2r.
WeilOrbit tate_twist(const WeilOrbit& orbit, long r);
TateStructure tate_twist(const TateStructure& v, long r);

/// The parts whose twist by r stays effective. Throws Errc::NotEffectiveInput
/// when some orbit of V is not effective, Errc::InvalidArgument when r < 0.
TateStructure coniveau_sub(const TateStructure& v, long r);

/// Number of Newton-polygon slots with slope >= r, summed with multiplicity.
unsigned slope_filtration_dim(const TateStructure& v, const Rational& r);

/// P(T^m): the eigenvalue data over q of the restriction of scalars from
/// q^m. Verifies P over base_qm first; m must divide the exponent of base_qm.
Polynomial weil_restriction_charpoly(const Polynomial& p, const PrimePower& base_qm, unsigned m);

/// The orbits of the m-th roots of the roots of P, each of weight 1 over q.
/// Throws Errc::WeightMismatch when P does not have weight m.
std::vector<WeilOrbit> mth_root_factors(const Polynomial& p, const PrimePower& q, unsigned m);

}  // namespace weilalg
