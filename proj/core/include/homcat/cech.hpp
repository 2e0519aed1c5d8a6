#pragma once

#include "homcat/lbcomplex.hpp"

#include <map>
#include <string>

namespace homcat::lbcx {

struct RgammaOptions {
    int e_cap = 64; // hard cap on the exponent floor E
};

struct RgammaResult {
    std::map<int, long long> h; // nonzero hypercohomology dims by degree
    int e_used = 0;
    bool stabilized = false; // dims agreed between consecutive floors
    bool euler_ok = false;   // exact Euler-characteristic certificate
    std::string diagnostic;  // set when !stabilized
};

// Hypercohomology of c(j) from the exponent-floor-truncated Cech total
// complex: for floor E, chart set I and summand O(d), the module is spanned
// by Laurent monomials of total degree d with exponents >= 0 outside I and
// >= -E inside I. Truncation is a genuine subcomplex (multiplication and the
// Cech inclusions never lower exponents). The floor starts at the smallest
// value where the Euler certificate can hold and is raised one step at a
// time until two consecutive floors agree and the certificate holds at both.
RgammaResult rgamma(const LBComplex& c, int j = 0, const RgammaOptions& opts = {});

// c is zero in the derived category iff RGamma(c(j)) = 0 for j = 0..m
// (the twists of O generate). Throws on a non-stabilized rgamma call.
bool is_zero_object(const LBComplex& c, const RgammaOptions& opts = {});

bool is_equivalence(const LBMap& f, const RgammaOptions& opts = {});

// Ext^i(f, g) dims, computed as rgamma(sheaf_dual(f) (x) g).
std::map<int, long long> rhom_dims(const LBComplex& f, const LBComplex& g,
                                   const RgammaOptions& opts = {});

// Dense truncated Cech total complex at a fixed floor; chain-level surface
// used where induced maps are needed (diagram Hom, cellular comparisons).
exactalg::RationalChainComplex cech_complex(const LBComplex& c, int j, int E);
exactalg::ComplexMap cech_map(const LBMap& f, int j, int E);

// Smallest floor at which the Euler certificate can hold for c(j).
int cech_floor_start(const LBComplex& c, int j);

} // namespace homcat::lbcx
