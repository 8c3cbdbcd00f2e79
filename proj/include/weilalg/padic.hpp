#pragma once

// p-adic valuations normalized by ord(q) = 1, Newton polygons and the
// decomposition of an irreducible polynomial into places above p.

#include <cstddef>
#include <vector>

#include "weilalg/polynomial.hpp"
#include "weilalg/prime_power.hpp"

namespace weilalg {

/// ord_p(x) for x != 0; throws Errc::ZeroInput.
long ord_p(const Rational& x, const Integer& p);
long ord_p(const Integer& x, const Integer& p);
/// ord_p(x) / a, so that ord_q(q) = 1.
Rational ord_q(const Rational& x, const PrimePower& q);

struct NewtonSegment {
    Rational slope;  // valuation of the roots on this side, ord(q) = 1
    unsigned multiplicity = 0;

    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;  // slopes strictly increasing

    /// Every root valuation listed with multiplicity, ascending.
    std::vector<Rational> slots() const;
    Rational min_slope() const;
    unsigned count_at_least(const Rational& r) const;
    unsigned count_below(const Rational& r) const;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Lower convex hull of (i, ord_q a_i). P monic with P(0) != 0.
/// Throws Errc::ZeroConstantTerm or Errc::NotMonic.
NewtonPolygon newton_polygon(const Polynomial& p, const PrimePower& q);

struct PlaceData {
    Rational slope;             // ord_v(alpha) / ord_v(q)
    unsigned local_degree = 0;  // [Q_p(alpha)_v : Q_p]
    std::size_t place_id = 0;

    friend bool operator==(const PlaceData&, const PlaceData&) = default;
};

/// One entry per irreducible factor of P over Q_p, sorted by slope then local
/// degree. P must be monic, irreducible over Q, with integer coefficients and
/// P(0) != 0. precision = 0 picks a starting precision from the Mignotte
/// bound; it doubles on failure up to four times before Errc::PrecisionExhausted.
std::vector<PlaceData> padic_places(const Polynomial& p, const PrimePower& q, unsigned precision = 0);

}  // namespace weilalg
