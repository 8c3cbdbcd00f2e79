#pragma once

// Zeta-function data, the motive attached to it (graded Tate structures),
// Kunneth idempotents, pole orders and Hom dimensions in the semisimple
// category of numerical motives and its graded derived category.

#include <map>
#include <string>
#include <vector>

#include "weilalg/polynomial.hpp"
#include "weilalg/prime_power.hpp"
#include "weilalg/weil.hpp"

namespace weilalg {

/// Z(X, t) for a geometrically connected X of dimension n: the L-polynomials
/// P_0, ..., P_2n with constant term 1.
struct ZetaData {
    PrimePower base;
    unsigned dim_n = 0;
    std::vector<Polynomial> l_polys;

    /// Monic characteristic polynomial of Frobenius on H^i.
    Polynomial charpoly(unsigned i) const;
    static ZetaData from_charpolys(const PrimePower& base, unsigned n, const std::vector<Polynomial>& monic);

    friend bool operator==(const ZetaData&, const ZetaData&) = default;
};

/// Pure motive: weight i -> Tate structure of weight i. Empty parts are omitted.
struct Motive {
    PrimePower base;
    std::map<int, TateStructure> graded_parts;

    unsigned dimension() const;
    const TateStructure* part(int weight) const;

    friend bool operator==(const Motive&, const Motive&) = default;
};

/// Complex with zero differentials: degree -> motive.
struct GradedComplex {
    std::map<int, Motive> entries;
};

/// P_0 = 1 - T, P_1 = L1, P_2 = 1 - qT. Throws Errc::BadConstantTerm,
/// Errc::OddDegree, NotWeilError, or Errc::WeightMismatch.
ZetaData zeta_from_curve(const Polynomial& l1, const PrimePower& q);

/// Kunneth formula. Throws Errc::BaseMismatch.
ZetaData zeta_product(const ZetaData& x, const ZetaData& y);

struct DegreeReport {
    unsigned degree = 0;
    bool ok = true;
    std::vector<std::string> failures;
};

struct ZetaReport {
    bool ok = true;
    bool shape_ok = true;
    bool endpoints_ok = true;
    bool coprime_ok = true;
    std::vector<DegreeReport> degrees;
    std::vector<std::string> failures;  // everything, in order of discovery
};

/// Checks shape, constant terms, endpoints, weights of every factor and
/// pairwise coprimality. Never throws on bad data.
ZetaReport validate_zeta(const ZetaData& z);

/// Throws Errc::ValidationFailed when validate_zeta reports a failure.
Motive motive_of(const ZetaData& z);

/// P^0, ..., P^2n reduced modulo prod C_i; degrees with C_i = 1 get 0.
/// Throws NotCoprimeError naming the two cohomological degrees.
std::vector<Polynomial> kunneth_idempotents(const ZetaData& z);

/// Multiplicity of q^r as a root of C_2r. Throws Errc::RangeError when r > n.
unsigned pole_order(const ZetaData& z, unsigned r);

/// Twist every graded part by r (weights drop by 2r).
Motive tate_twist(const Motive& m, long r);

/// Sum over common orbits of (mult_M / e)(mult_N / e) e^2 |o|. Throws
/// Errc::BaseMismatch or Errc::IndexDivisibilityError.
unsigned motive_hom_dim(const Motive& m, const Motive& n);

/// Multiplicity of the unit orbit T - 1 in weight 0.
unsigned hom_from_unit(const Motive& m);

/// h^i placed in cohomological degree i.
GradedComplex realization(const Motive& m);

/// sum_k dim Hom(A[k], B[k + shift]). Throws Errc::BaseMismatch.
unsigned graded_hom_dim(const GradedComplex& a, const GradedComplex& b, int shift);

/// 0 for i != 0; pole_order(z, j) for i = 0 and 0 <= j <= n; 0 otherwise.
unsigned k_group_dim(const ZetaData& z, unsigned i, int j);

}  // namespace weilalg
