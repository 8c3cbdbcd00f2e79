#pragma once

// Polynomial arithmetic over the prime field F_p for word-sized p.
// Used by the Zassenhaus factorizer and by residual polynomials of
// Newton polygon sides.

#include <cstdint>
#include <utility>
#include <vector>

#include "weilalg/polynomial.hpp"

namespace weilalg::modp {

using Coeff = std::uint64_t;
/// Ascending coefficients in [0, p), no trailing zeros.
using Poly = std::vector<Coeff>;

class Field {
public:
    explicit Field(Coeff p);

    Coeff p() const noexcept { return p_; }
    Coeff add(Coeff a, Coeff b) const noexcept { Coeff s = a + b; return s >= p_ ? s - p_ : s; }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff inv(Coeff a) const;
    Coeff reduce(const Integer& x) const;
    Coeff reduce(const Rational& x) const;  // denominator must be a unit mod p

private:
    Coeff p_;
};

void trim(Poly& f);
int degree(const Poly& f);
Poly reduce(const Polynomial& f, const Field& F);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly monic(const Poly& a, const Field& F);
Poly gcd(const Poly& a, const Poly& b, const Field& F);
Poly derivative(const Poly& a, const Field& F);
/// a^e mod m, exponent given as a GMP integer.
Poly powmod(const Poly& a, const Integer& e, const Poly& m, const Field& F);

struct Xgcd {
    Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b, const Field& F);

bool is_squarefree(const Poly& f, const Field& F);

/// Monic irreducible factors of a squarefree polynomial of positive degree,
/// sorted by degree then coefficients. Deterministic.
std::vector<Poly> factor_squarefree(const Poly& f, const Field& F);

/// Number of irreducible factors of a squarefree f, computed by distinct-degree
/// factorization only (no splitting).
std::size_t count_factors(const Poly& f, const Field& F);

}  // namespace weilalg::modp
