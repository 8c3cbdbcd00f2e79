#pragma once

// Exact kernel operations over Q: real-root counting, polynomial CRT,
// L-polynomial/characteristic-polynomial conversion and characteristic
// polynomials of tensor and exterior powers.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weilalg/factor.hpp"
#include "weilalg/polynomial.hpp"

namespace weilalg {

/// A bound of a real interval; std::nullopt stands for -infinity (as a
/// lower bound) or +infinity (as an upper bound).
using Bound = std::optional<Rational>;

/// Number of distinct real roots of a squarefree P in (lo, hi].
/// Throws Errc::NotSquarefree, or Errc::InvalidArgument when lo >= hi.
std::size_t sturm_count(const Polynomial& p, const Bound& lo, const Bound& hi);

/// The Sturm chain of P with each member scaled to a primitive integer
/// polynomial by a positive factor (signs are preserved).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

struct Congruence {
    Polynomial residue;
    Polynomial modulus;
};

/// The unique R with deg R < sum(deg m_k) and R = r_k mod m_k for all k.
/// Throws NotCoprimeError naming the first offending pair.
Polynomial crt_polynomials(const std::vector<Congruence>& pairs);

/// T^d L(1/T) for an L-polynomial with L(0) = 1; degree_hint must equal deg L.
Polynomial reciprocal_transform(const Polynomial& l, int degree_hint);
/// Inverse direction: monic C with C(0) != 0 to the L-polynomial T^d C(1/T).
/// Throws Errc::NotMonic or Errc::ZeroConstantTerm.
Polynomial to_l_polynomial(const Polynomial& monic_charpoly);

/// Dense square matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n);
    /// Companion matrix of a monic polynomial (last column holds -a_i).
    static Matrix companion(const Polynomial& monic);

    std::size_t size() const noexcept { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    Matrix scaled(const Rational& c) const;

private:
    std::size_t n_ = 0;
    std::vector<Rational> data_;
};

/// Characteristic polynomial det(T*I - M) via reduction to Hessenberg form.
Polynomial charpoly(const Matrix& m);

/// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// k-th compound matrix: entries are the k x k minors indexed by sorted k-subsets.
Matrix compound(const Matrix& m, unsigned k);
Rational determinant(Matrix m);

/// Upper limit on the dimension of matrices built by tensor/exterior powers.
inline constexpr std::size_t kMaxPowerDimension = 4096;

/// Monic polynomial whose roots are all products alpha*beta (with multiplicity).
Polynomial tensor_charpoly(const Polynomial& p, const Polynomial& q);
/// Monic polynomial whose roots are the products of k roots with distinct indices.
Polynomial exterior_charpoly(const Polynomial& p, unsigned k);

/// Characteristic polynomial of g(alpha) over the algebra Q[T]/(p): the monic
/// polynomial of degree deg p whose roots are g(alpha_i).
Polynomial charpoly_of_element(const Polynomial& p, const Polynomial& g);
/// Power sums p_1..p_n of the roots of a monic polynomial (index 0 unused).
std::vector<Rational> power_sums(const Polynomial& monic, std::size_t n);
/// Monic polynomial of degree d from its power sums p_1..p_d (Newton identities).
Polynomial from_power_sums(const std::vector<Rational>& sums, std::size_t d);

/// Matrix of multiplication by g(alpha) on Q[T]/(p) in the power basis.
Matrix element_matrix(const Polynomial& p, const Polynomial& g);
/// prod g(alpha_i) = Res(p, g) for monic p.
Rational norm_of_element(const Polynomial& p, const Polynomial& g);

}  // namespace weilalg
