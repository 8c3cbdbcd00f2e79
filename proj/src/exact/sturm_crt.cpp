#include <algorithm>

#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg {

namespace {

// Divides out the positive content so that coefficients become coprime
// integers; the sign pattern of the polynomial is unchanged.
Polynomial strip_content(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : p.coeffs()) {
        Integer x = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return p.scaled(Rational(l) / Rational(g));
}

int sign_at(const Polynomial& p, const Bound& x, bool upper) {
    if (p.is_zero()) return 0;
    if (x) return sgn(p.eval(*x));
    int s = sgn(p.lead());
    if (!upper && p.degree() % 2 == 1) s = -s;
    return s;
}

std::size_t variations(const std::vector<Polynomial>& chain, const Bound& x, bool upper) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, upper);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(strip_content(p));
    Polynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(strip_content(d));
    for (;;) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Polynomial r = a % b;
        if (r.is_zero()) break;
        chain.push_back(strip_content(-r));
    }
    return chain;
}

std::size_t sturm_count(const Polynomial& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "sturm_count of 0");
    if (lo && hi && !(*lo < *hi)) throw Error(Errc::InvalidArgument, "sturm_count needs lo < hi");
    if (!is_squarefree(p)) throw Error(Errc::NotSquarefree, p.to_string() + " has a repeated factor");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    const std::size_t vlo = variations(chain, lo, false);
    const std::size_t vhi = variations(chain, hi, true);
    return vlo - vhi;
}

Polynomial crt_polynomials(const std::vector<Congruence>& pairs) {
    if (pairs.empty()) return {};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].modulus.degree() < 1)
            throw Error(Errc::InvalidArgument, "CRT modulus " + std::to_string(i) + " is constant");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (gcd(pairs[i].modulus, pairs[j].modulus).degree() > 0) throw NotCoprimeError(i, j);

    // Incremental Garner-style combination: R = R + M * ((r_k - R) * M^{-1} mod m_k).
    Polynomial result = pairs[0].residue % pairs[0].modulus;
    Polynomial product = pairs[0].modulus;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto& m = pairs[k].modulus;
        Polynomial inv = inverse_mod(product, m);
        Polynomial delta = ((pairs[k].residue - result) * inv) % m;
        result += product * delta;
        product = product * m;
    }
    return result % product;
}

Polynomial reciprocal_transform(const Polynomial& l, int degree_hint) {
    if (l.constant_term() != 1) throw Error(Errc::BadConstantTerm, "L(0) must be 1, got " + l.to_string());
    if (degree_hint != l.degree())
        throw Error(Errc::InvalidArgument, "degree_hint " + std::to_string(degree_hint) +
                                               " differs from deg L = " + std::to_string(l.degree()));
    return l.reversed();
}

Polynomial to_l_polynomial(const Polynomial& c) {
    if (!c.is_monic()) throw Error(Errc::NotMonic, c.to_string());
    if (c.constant_term() == 0) throw Error(Errc::ZeroConstantTerm, c.to_string());
    return c.reversed();
}

}  // namespace weilalg
