#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace weilalg {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& x);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// T - root
    static Polynomial linear_root(const Rational& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of T^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& lead() const;
    Rational constant_term() const;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial scaled(const Rational& c) const;
    /// P(T^m)
    Polynomial compose_power(unsigned m) const;
    /// P(c*T)
    Polynomial scale_variable(const Rational& c) const;
    /// P(T + c)
    Polynomial shift(const Rational& c) const;
    /// T^deg * P(1/T)
    Polynomial reversed() const;
    Polynomial pow(unsigned e) const;

    /// True when every coefficient is an integer.
    bool has_integer_coeffs() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Render as e.g. "T^2 - 1/2*T + 3".
    std::string to_string(const std::string& var = "T") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Euclidean division; throws Error(ZeroPolynomial) on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial g;  // monic gcd
    Polynomial s;  // s*a + t*b = g
    Polynomial t;
};
ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m; throws Error(NotCoprime) when gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

bool is_squarefree(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

/// Total order used for deterministic output: degree first, then the
/// coefficient vectors compared lexicographically from the constant term up,
/// each coefficient by absolute value and then by sign (negative first).
bool canonical_less(const Polynomial& a, const Polynomial& b);

/// Clears denominators and content: returns the primitive integer polynomial
/// proportional to p with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p);
Polynomial from_integers(const std::vector<Integer>& coeffs);

Integer binomial(unsigned n, unsigned k);

}  // namespace weilalg
