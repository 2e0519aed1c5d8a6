#pragma once

#include "homcat/ratmatrix.hpp"

#include <nlohmann/json_fwd.hpp>
#include <map>
#include <string>
#include <vector>

namespace homcat::exactalg {

// Bounded cochain complex of finite-dimensional rational vector spaces.
// Cohomological convention: d_i maps degree i to degree i+1, and d_{i+1} d_i = 0
// is asserted at construction time.
class RationalChainComplex {
public:
    RationalChainComplex() : lo_(0), hi_(-1) {}

    // dims[k] is the dimension in degree lo + k; diffs[k] maps degree lo+k to
    // lo+k+1 (one fewer than dims, shapes dims[k+1] x dims[k]).
    RationalChainComplex(int lo, std::vector<std::size_t> dims, std::vector<RatMatrix> diffs);

    static RationalChainComplex zero() { return RationalChainComplex(); }
    static RationalChainComplex skyscraper(int degree, std::size_t dim);

    int lo() const { return lo_; }
    int hi() const { return hi_; } // lo > hi means the zero complex
    bool empty() const { return lo_ > hi_; }

    std::size_t dim(int i) const;
    // Differential out of degree i (zero-shaped outside the range).
    RatMatrix diff(int i) const;

    long long euler_char() const;

    bool operator==(const RationalChainComplex& o) const;

    nlohmann::json to_json() const;
    static RationalChainComplex from_json(const nlohmann::json& j);

private:
    int lo_, hi_;
    std::vector<std::size_t> dims_;
    std::vector<RatMatrix> diffs_;
    void check() const;
};

// Degreewise map of complexes; commutation with the differentials is checked
// at construction.
struct ComplexMap {
    RationalChainComplex source, target;
    std::map<int, RatMatrix> components; // degree -> dim_T(i) x dim_S(i)

    ComplexMap(RationalChainComplex src, RationalChainComplex tgt, std::map<int, RatMatrix> comps);

    RatMatrix component(int i) const;

    static ComplexMap zero(const RationalChainComplex& src, const RationalChainComplex& tgt);
    static ComplexMap identity(const RationalChainComplex& c);
};

struct CohomologySpace {
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> basis; // cycle representatives in C^i coordinates
};

CohomologySpace cohomology(const RationalChainComplex& c, int i);
std::map<int, std::size_t> cohomology_dims(const RationalChainComplex& c);

// Cone(f)^i = S^{i+1} (+) T^i with differential [[-d_S, 0], [f, d_T]].
RationalChainComplex cone(const ComplexMap& f);

// C[k]^i = C^{i+k}, differential (-1)^k d.
RationalChainComplex shift(const RationalChainComplex& c, int k);

// Hom^k = (+)_i Hom(C^i, D^{i+k}); d(phi) = d_D phi - (-1)^k phi d_C.
RationalChainComplex hom_complex(const RationalChainComplex& c, const RationalChainComplex& d);

bool is_acyclic(const RationalChainComplex& c);
bool is_quasi_iso(const ComplexMap& f);

RationalChainComplex direct_sum(const RationalChainComplex& a, const RationalChainComplex& b);

// Tensor product with the Koszul sign rule on the second factor.
RationalChainComplex tensor(const RationalChainComplex& a, const RationalChainComplex& b);
// Degreewise tensor of chain maps (no signs for degree-0 maps).
ComplexMap tensor_map(const ComplexMap& f, const ComplexMap& g);

ComplexMap compose(const ComplexMap& g, const ComplexMap& f); // g after f
ComplexMap shift_map(const ComplexMap& f, int k);

// Functoriality of hom_complex: post-composition with g: D -> D' and
// pre-composition with f: C' -> C.
ComplexMap hom_postcompose(const RationalChainComplex& c, const ComplexMap& g);
ComplexMap hom_precompose(const ComplexMap& f, const RationalChainComplex& d);

} // namespace homcat::exactalg
