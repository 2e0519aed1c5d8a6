#pragma once

#include "homcat/rational.hpp"
#include "homcat/ratmatrix.hpp"

#include <map>
#include <vector>

namespace homcat::cohp {

using homcat::Rat;
using homcat::Int;

// Laurent monomial in m+1 variables, one exponent per homogeneous coordinate.
using LaurentMonomial = std::vector<int>;

struct LineBundleCohBasis {
    int m = 0;
    int d = 0;
    int i = 0;
    std::vector<LaurentMonomial> basis; // lexicographically ordered
};

// h^i(P^m, O(d)); only i = 0 and i = m can be nonzero.
Int h_dim(int m, int i, int d);

LineBundleCohBasis h_basis(int m, int i, int d);

// Euler characteristic chi(O(d)) = C(d+m, m) evaluated as a polynomial in d.
Rat hilbert_chi(int m, int d);

// A cohomology class as a rational combination of basis monomials.
using CohClass = std::map<LaurentMonomial, Rat>;

// H^0(O(d1)) x H^i(O(d2)) -> H^i(O(d1+d2)). Multiplies monomials; in top
// degree a product with any exponent >= 0 maps to zero.
CohClass cup_product(int m, int i, const CohClass& a, const CohClass& b);

// Pairing matrix H^0(O(d)) x H^m(O(-d-m-1)) -> H^m(O(-m-1)) = k in the
// monomial bases; a permutation matrix for every d >= 0.
exactalg::RatMatrix serre_pair(int m, int d);

Int binomial(Int n, int k);

} // namespace homcat::cohp
