#include "weilalg/weil.hpp"

#include <algorithm>

#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/factor.hpp"

namespace weilalg {

namespace {

Rational qpow(const PrimePower& q, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), q.q.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1) / Rational(r) : Rational(r);
}

bool p_power(const Integer& x, const Integer& p) {
    Integer rest;
    mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return rest == 1;
}

std::size_t real_roots(const Polynomial& f, const Bound& lo, const Bound& hi) {
    return sturm_count(squarefree_part(f), lo, hi);
}

}  // namespace

int verify_weil(const Polynomial& p, const PrimePower& q) {
    if (!p.is_monic()) throw Error(Errc::NotMonic, p.to_string());
    if (p.constant_term() == 0) throw Error(Errc::ZeroConstantTerm, p.to_string());
    for (const auto& c : p.coeffs())
        if (!p_power(c.get_den(), q.p))
            throw NotWeilError(NotWeilReason::BadDenominator, "coefficient " + to_string(c) + " of " + p.to_string());
    const int d = p.degree();
    if (d == 0) return 0;

    // |P(0)| = q^(m d / 2) pins the weight.
    const Rational c0 = abs(p.constant_term());
    const Rational twice = 2 * ord_q(c0, q);
    if (twice.get_den() != 1 || twice.get_num() % d != 0)
        throw NotWeilError(NotWeilReason::ConstantTermValuation, p.to_string());
    const long m = Integer(twice.get_num() / d).get_si();
    const Rational qm = qpow(q, m);
    if (c0 * c0 != qpow(q, m * d)) throw NotWeilError(NotWeilReason::ConstantTermValuation, p.to_string());

    // beta = alpha + q^m / alpha must be totally real with beta^2 <= 4 q^m.
    const Polynomial x = Polynomial::monomial(1, 1);
    const Polynomial beta = (x + inverse_mod(x, p).scaled(qm)) % p;
    const Polynomial r = charpoly_of_element(p, beta);
    const Polynomial rs = squarefree_part(r);
    if (real_roots(rs, std::nullopt, std::nullopt) != static_cast<std::size_t>(rs.degree()))
        throw NotWeilError(NotWeilReason::NotTotallyReal, p.to_string());
    const Polynomial r2 = charpoly_of_element(p, (beta * beta) % p);
    if (real_roots(r2, 4 * qm, std::nullopt) != 0) throw NotWeilError(NotWeilReason::RootBound, p.to_string());
    return static_cast<int>(m);
}

WeilOrbit WeilOrbit::make(const Polynomial& min_poly, const PrimePower& base) {
    if (!min_poly.is_monic()) throw Error(Errc::NotMonic, min_poly.to_string());
    if (!is_irreducible(min_poly)) throw Error(Errc::NotIrreducible, min_poly.to_string());
    return WeilOrbit{min_poly, base, verify_weil(min_poly, base)};
}

unsigned TateStructure::dimension() const {
    unsigned n = 0;
    for (const auto& part : parts) n += part.multiplicity * part.orbit.degree();
    return n;
}

Polynomial TateStructure::charpoly() const {
    Polynomial r{1};
    for (const auto& part : parts) r = r * part.orbit.min_poly.pow(part.multiplicity);
    return r;
}

TateStructure TateStructure::from_charpoly(const Polynomial& monic, const PrimePower& base) {
    if (!monic.is_monic()) throw Error(Errc::NotMonic, monic.to_string());
    TateStructure v{base, {}};
    if (monic.degree() == 0) return v;
    for (const auto& f : factor_rational_poly(monic).factors)
        v.parts.push_back({WeilOrbit{f.poly, base, verify_weil(f.poly, base)}, f.multiplicity});
    return v;
}

bool is_effective(const WeilOrbit& orbit) { return orbit.min_poly.has_integer_coeffs(); }

WeilOrbit tate_twist(const WeilOrbit& orbit, long r) {
    const int d = orbit.min_poly.degree();
    std::vector<Rational> c(orbit.min_poly.coeffs());
    for (int i = 0; i <= d; ++i) c[i] /= qpow(orbit.base, r * (d - i));
    return WeilOrbit{Polynomial(c), orbit.base, orbit.weight - static_cast<int>(2 * r)};
}

TateStructure tate_twist(const TateStructure& v, long r) {
    TateStructure out{v.base, {}};
    for (const auto& part : v.parts) out.parts.push_back({tate_twist(part.orbit, r), part.multiplicity});
    std::sort(out.parts.begin(), out.parts.end(), [](const OrbitPart& a, const OrbitPart& b) {
        return canonical_less(a.orbit.min_poly, b.orbit.min_poly);
    });
    return out;
}

TateStructure coniveau_sub(const TateStructure& v, long r) {
    if (r < 0) throw Error(Errc::InvalidArgument, "coniveau index must be nonnegative");
    TateStructure out{v.base, {}};
    for (const auto& part : v.parts) {
        if (!is_effective(part.orbit))
            throw Error(Errc::NotEffectiveInput, part.orbit.min_poly.to_string() + " is not integral");
        if (is_effective(tate_twist(part.orbit, r))) out.parts.push_back(part);
    }
    return out;
}

unsigned slope_filtration_dim(const TateStructure& v, const Rational& r) {
    unsigned n = 0;
    for (const auto& part : v.parts)
        n += part.multiplicity * newton_polygon(part.orbit.min_poly, v.base).count_at_least(r);
    return n;
}

Polynomial weil_restriction_charpoly(const Polynomial& p, const PrimePower& base_qm, unsigned m) {
    if (m == 0 || base_qm.a % m != 0)
        throw Error(Errc::InvalidArgument, std::to_string(m) + " does not divide the exponent of " + base_qm.q.get_str());
    verify_weil(p, base_qm);
    return p.compose_power(m);
}

std::vector<WeilOrbit> mth_root_factors(const Polynomial& p, const PrimePower& q, unsigned m) {
    if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
    const int w = verify_weil(p, q);
    if (w != static_cast<int>(m))
        throw Error(Errc::WeightMismatch, "weight " + std::to_string(w) + " differs from m = " + std::to_string(m));
    std::vector<WeilOrbit> out;
    for (const auto& f : factor_rational_poly(p.compose_power(m)).factors) {
        WeilOrbit o{f.poly, q, verify_weil(f.poly, q)};
        if (o.weight != 1)
            throw Error(Errc::WeightMismatch, f.poly.to_string() + " has weight " + std::to_string(o.weight));
        for (unsigned k = 0; k < f.multiplicity; ++k) out.push_back(o);
    }
    return out;
}

}  // namespace weilalg
