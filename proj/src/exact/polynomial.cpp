#include "weilalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "weilalg/error.hpp"

namespace weilalg {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::BadConstantTerm: return "BadConstantTerm";
        case Errc::NotMonic: return "NotMonic";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::PrecisionExhausted: return "PrecisionExhausted";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotWeil: return "NotWeil";
        case Errc::WeightMismatch: return "WeightMismatch";
        case Errc::NotEffectiveInput: return "NotEffectiveInput";
        case Errc::OddDegree: return "OddDegree";
        case Errc::BaseMismatch: return "BaseMismatch";
        case Errc::ValidationFailed: return "ValidationFailed";
        case Errc::RangeError: return "RangeError";
        case Errc::IndexDivisibilityError: return "IndexDivisibilityError";
        case Errc::OddProduct: return "OddProduct";
        case Errc::CertificationFailed: return "CertificationFailed";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
        case Errc::IOError: return "IOError";
    }
    return "Unknown";
}

std::string_view reason_name(NotWeilReason r) noexcept {
    switch (r) {
        case NotWeilReason::ConstantTermValuation: return "constant-term valuation";
        case NotWeilReason::NotTotallyReal: return "not totally real";
        case NotWeilReason::RootBound: return "root bound violated";
        case NotWeilReason::BadDenominator: return "bad denominator";
    }
    return "unknown";
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root) {
    return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::lead() const {
    if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

Rational Polynomial::constant_term() const { return coeff(0); }

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(1 / lead());
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_power(unsigned m) const {
    if (m == 0) throw Error(Errc::InvalidArgument, "compose_power with m = 0");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree()) * m + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * m] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_variable(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    Rational pw = 1;
    for (auto& x : v) {
        x *= pw;
        pw *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shift(const Rational& c) const {
    // Horner in the ring: P(T + c) = (...(a_d (T+c) + a_{d-1})(T+c) + ...).
    Polynomial acc;
    const Polynomial lin(std::vector<Rational>{c, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin;
        acc += constant(*it);
    }
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool Polynomial::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (i == 0) {
            os << weilalg::to_string(mag);
            continue;
        }
        if (!unit) os << weilalg::to_string(mag) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quo(rem.size() - db);
    const Rational inv_lead = 1 / b.lead();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational c = rem[k + db] * inv_lead;
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        // Keep coefficient growth in check: any nonzero scaling preserves the gcd.
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Polynomial{}, Polynomial{}, Polynomial{}};
    const Rational inv = 1 / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
    auto eg = xgcd(a % m, m);
    if (eg.g.degree() != 0) throw Error(Errc::NotCoprime, "polynomial is not invertible modulo " + m.to_string());
    return eg.s % m;
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() <= 0;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    return (p / gcd(p, p.derivative())).monic();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i]) continue;
        const int c = cmp(abs(x[i]), abs(y[i]));
        if (c != 0) return c < 0;
        return x[i] < y[i];
    }
    return false;
}

std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "primitive part of 0");
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer x = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        v.push_back(std::move(x));
    }
    if (v.back() < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

Polynomial from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace weilalg
