#include <numeric>

#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::companion(const Polynomial& p) {
    if (!p.is_monic()) throw Error(Errc::NotMonic, p.to_string());
    const auto d = static_cast<std::size_t>(p.degree());
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (i > 0) m(i, i - 1) = 1;
        m(i, d - 1) = -p.coeff(i);
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Polynomial charpoly(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix h = m;
    // Similarity transforms to upper Hessenberg form.
    for (std::size_t c = 1; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && h(piv, c - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, c));
        }
        const Rational t = h(c, c - 1);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (h(i, c - 1) == 0) continue;
            const Rational u = h(i, c - 1) / t;
            for (std::size_t j = 0; j < n; ++j) {
                if (h(c, j) != 0) h(i, j) -= u * h(c, j);
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (h(j, i) != 0) h(j, c) += u * h(j, i);
            }
        }
    }
    // Recurrence on leading principal submatrices.
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    const Polynomial x = Polynomial::monomial(1, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (x - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (t == 0) break;
            const Rational& entry = h(k - i - 1, k - 1);
            if (entry != 0) p[k] -= p[k - i - 1].scaled(t * entry);
        }
    }
    return p[n];
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const std::size_t na = a.size(), nb = b.size();
    Matrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
        }
    return r;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational u = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= u * m(c, j);
        }
    }
    return det;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, unsigned k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return out;
    for (;;) {
        out.push_back(idx);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

void require_monic_nonconstant(const Polynomial& p) {
    if (!p.is_monic()) throw Error(Errc::NotMonic, p.to_string());
    if (p.degree() < 1) throw Error(Errc::InvalidArgument, "expected a nonconstant polynomial");
}

}  // namespace

Matrix compound(const Matrix& m, unsigned k) {
    auto sets = subsets(m.size(), k);
    Matrix r(sets.size());
    Matrix minor(k);
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b) {
            bool nonzero = false;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) {
                    minor(i, j) = m(sets[a][i], sets[b][j]);
                    nonzero = nonzero || minor(i, j) != 0;
                }
            if (nonzero) r(a, b) = determinant(minor);
        }
    return r;
}

Polynomial tensor_charpoly(const Polynomial& p, const Polynomial& q) {
    require_monic_nonconstant(p);
    require_monic_nonconstant(q);
    const auto dim = static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(q.degree());
    if (dim > kMaxPowerDimension)
        throw Error(Errc::DimensionTooLarge, "tensor dimension " + std::to_string(dim));
    return charpoly(kronecker(Matrix::companion(p), Matrix::companion(q)));
}

Polynomial exterior_charpoly(const Polynomial& p, unsigned k) {
    require_monic_nonconstant(p);
    if (k == 0) throw Error(Errc::InvalidArgument, "exterior power index must be positive");
    const auto d = static_cast<unsigned>(p.degree());
    if (k > d) throw Error(Errc::KTooLarge, std::to_string(k) + " > deg " + std::to_string(d));
    const Integer dim = binomial(d, k);
    if (dim > kMaxPowerDimension) throw Error(Errc::DimensionTooLarge, "exterior dimension " + dim.get_str());
    if (k == 1) return p;
    return charpoly(compound(Matrix::companion(p), k));
}

Matrix element_matrix(const Polynomial& p, const Polynomial& g) {
    require_monic_nonconstant(p);
    const Matrix c = Matrix::companion(p);
    const std::size_t n = c.size();
    // Horner: g(C) = (...(g_d C + g_{d-1}) C + ...) + g_0.
    Matrix acc(n);
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc * c;
        const Rational gi = g.coeff(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < n; ++j) acc(j, j) += gi;
    }
    return acc;
}

Polynomial charpoly_of_element(const Polynomial& p, const Polynomial& g) {
    return charpoly(element_matrix(p, g));
}

Rational norm_of_element(const Polynomial& p, const Polynomial& g) {
    return determinant(element_matrix(p, g));
}

std::vector<Rational> power_sums(const Polynomial& p, std::size_t n) {
    require_monic_nonconstant(p);
    const auto d = static_cast<std::size_t>(p.degree());
    std::vector<Rational> s(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i < k && i <= d; ++i) acc -= p.coeff(d - i) * s[k - i];
        if (k <= d) acc -= Rational(static_cast<unsigned long>(k)) * p.coeff(d - k);
        s[k] = acc;
    }
    return s;
}

Polynomial from_power_sums(const std::vector<Rational>& sums, std::size_t d) {
    if (sums.size() <= d) throw Error(Errc::InvalidArgument, "not enough power sums");
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<Rational> e(d + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 1) acc += e[k - i] * sums[i];
            else acc -= e[k - i] * sums[i];
        }
        e[k] = acc / Rational(static_cast<unsigned long>(k));
    }
    std::vector<Rational> c(d + 1);
    for (std::size_t k = 0; k <= d; ++k) c[d - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);
    return Polynomial(c);
}

}  // namespace weilalg
