#pragma once

#include <vector>

#include "weilalg/polynomial.hpp"

namespace weilalg {

struct Factor {
    Polynomial poly;  // monic, irreducible over Q
    unsigned multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
    Rational unit;
    std::vector<Factor> factors;  // sorted with canonical_less, pairwise distinct

    /// unit * prod factor^multiplicity
    Polynomial expand() const;
};

/// Complete factorization over Q. Throws Error(ZeroPolynomial) on 0.
Factorization factor_rational_poly(const Polynomial& p);

/// Squarefree decomposition (Yun): pairs (monic squarefree, multiplicity),
/// pairwise coprime, multiplicities increasing.
std::vector<Factor> squarefree_decomposition(const Polynomial& p);

bool is_irreducible(const Polynomial& p);

namespace detail {

/// Zassenhaus on a primitive squarefree integer polynomial with positive
/// leading coefficient; returns its primitive irreducible factors.
std::vector<std::vector<Integer>> zassenhaus(const std::vector<Integer>& f);

}  // namespace detail

}  // namespace weilalg
