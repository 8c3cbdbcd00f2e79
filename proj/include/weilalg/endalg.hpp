#pragma once

// The algebra A(X) of correspondences at the generic point as numerical data:
// one matrix block M_r(D) per selected orbit, with D described by its centre,
// local Brauer invariants and index.

#include <vector>

#include "weilalg/motives.hpp"
#include "weilalg/padic.hpp"
#include "weilalg/weil.hpp"

namespace weilalg {

struct FiniteInvariant {
    PlaceData place;
    Rational invariant;  // in [0, 1)

    friend bool operator==(const FiniteInvariant&, const FiniteInvariant&) = default;
};

/// Central simple algebra over Z = Q[alpha] and its multiplicity in A(X).
struct CSAData {
    Polynomial center_poly;
    unsigned orbit_size = 0;
    unsigned real_places = 0;
    std::vector<FiniteInvariant> finite_invariants;
    Rational real_invariant;  // 0 or 1/2
    unsigned index_e = 1;
    unsigned matrix_size_r = 0;  // 0 until placed in an algebra

    /// real_places * real_invariant + sum of finite invariants.
    Rational invariant_sum() const;
};

struct AlgebraDescription {
    std::vector<CSAData> blocks;
    PrimePower base;
    int ambient_weight_n = 0;

    bool is_zero() const { return blocks.empty(); }
};

/// Brauer data of End(N) for the simple motive N of the orbit; ambient_weight
/// only matters through its parity (real places carry 1/2 when it is odd).
/// Propagates Errc::PrecisionExhausted.
CSAData brauer_block(const WeilOrbit& orbit, int ambient_weight);

/// Orbits of the weight-n part with minimal slope < 1.
TateStructure generic_part(const ZetaData& z);
/// Same selection in another cohomological degree. Throws Errc::RangeError
/// when weight > 2n.
TateStructure generic_part(const ZetaData& z, unsigned weight);

/// Throws Errc::ValidationFailed or Errc::IndexDivisibilityError.
AlgebraDescription compute_A(const ZetaData& z);
/// The algebra built from degree `weight` in place of the middle degree.
AlgebraDescription compute_A(const ZetaData& z, unsigned weight);

/// compute_A of the curve with L-polynomial L1.
AlgebraDescription curve_end_algebra(const Polynomial& l1, const PrimePower& q);

/// sum r_j |o_j| e_j
unsigned rank_from_algebra(const AlgebraDescription& a);
/// sum r_j^2 e_j^2 |o_j|
Integer dimension(const AlgebraDescription& a);

/// Slots of slope < 1 in the Newton polygon of C_n.
unsigned witt_vector_rank(const ZetaData& z);

/// Dimension |o| e / 2 of the simple abelian variety of a weight-1 Weil
/// q-integer. Throws Errc::WeightMismatch, Errc::NotEffectiveInput or
/// Errc::OddProduct.
unsigned honda_tate_dimension(const WeilOrbit& orbit);

/// A weight-m orbit over q read as a weight-1 orbit over q^m, restricted to
/// q, and located inside the m-th exterior power of `copies` copies of the
/// restricted structure.
struct Weight1Realization {
    PrimePower base_qm;
    Polynomial restricted;  // P(T^m), eigenvalue data over q
    unsigned exterior_degree = 1;
    unsigned copies = 1;
    /// Exterior degrees j_1 + ... + j_copies = m of the summand
    /// Lambda^j_1 V (x) ... (x) Lambda^j_copies V that contains alpha.
    std::vector<unsigned> summand;
};

/// Throws Errc::NotEffectiveInput, Errc::InvalidArgument (weight < 1) or
/// Errc::CertificationFailed.
Weight1Realization weight1_realization(const WeilOrbit& orbit);

}  // namespace weilalg
