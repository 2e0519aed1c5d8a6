#pragma once

#include "homcat/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcat::fanskeleton {

using homcat::Rat;

// Point of the quotient character space (t^circ)* in the coordinates fixed by
// the eliminated index (length n-1).
using QVec = std::vector<Rat>;

struct FanCone {
    std::vector<int> subset;      // nonempty J subset of {1..n}, ascending
    std::vector<QVec> generators; // rays ebar_a for a not in J
};

// The complete fan of P^{n-1} on the images ebar_1..ebar_n of the coordinate
// vectors in chi*(T)/span(delta). Coordinates eliminate one index (default n),
// so ebar_a is a standard basis vector for surviving a and the eliminated ray
// is minus the sum of the others.
struct FanData {
    int n = 0;
    int elim = 0; // 1-based eliminated index
    std::vector<QVec> rays;
    std::vector<FanCone> cones; // all 2^n - 1 nonempty subsets
};

FanData build_projective_fan(int n, int elim = 0 /* 0 means n */);

struct ConeInfo {
    std::vector<QVec> generators;
    // Integer basis of the orthogonal sigma-perp inside t^circ (vectors in R^n
    // with coordinate sum zero, supported on J).
    std::vector<std::vector<Rat>> orth_basis;
};

ConeInfo cone_for_subset(const FanData& f, const std::vector<int>& subset);

// Coefficients of p in the relatively open cone sigma_J, or nullopt.
std::optional<std::vector<Rat>> open_cone_coefficients(const FanData& f,
                                                       const std::vector<int>& subset,
                                                       const QVec& p);

// The unique relatively open cone of the complete fan containing p.
std::vector<int> containing_cone(const FanData& f, const QVec& p);

// Angles are exact rational turns (multiples of 2pi with the 2pi factored
// out); stored only where the radius is positive.
struct SkeletonPoint {
    std::vector<Rat> r;
    std::vector<std::optional<Rat>> theta; // turn in [0,1)
};

SkeletonPoint make_point(const std::vector<Rat>& radii, const std::vector<Rat>& turns);

enum class StratumKind { ZeroFiber, Open, NotOnSkeleton };

struct StratumDescriptor {
    StratumKind kind = StratumKind::NotOnSkeleton;
    std::vector<int> subset; // J (1-based); empty when off the skeleton
    int codim = -1;          // n+|J| for zero-fiber strata, n for open ones
    std::optional<Rat> theta; // matched target angle for open strata
};

std::vector<int> minimal_radius_set(const SkeletonPoint& p);

StratumDescriptor classify_point(const FanData& f, const SkeletonPoint& p,
                                 const std::vector<Rat>& thetas);

// h_0(r) = -r_1 ebar_1 - ... - r_n ebar_n on the zero fiber (min radius 0).
QVec h0_map(const FanData& f, const std::vector<Rat>& r);

struct GMapResult {
    bool ok = false;
    std::string violation; // the violated membership equation when !ok
    QVec g;
    Rat w;
};

// g x w on P(tau), tau a rational turn in (-1, 1). For tau < 0 the angle term
// uses |tau_a| = sign(tau) tau_a (the conjugation transport of the tau > 0
// case); this restricts to h_0 at w = 0 for every tau.
GMapResult g_map(const FanData& f, const SkeletonPoint& p, const Rat& tau);

struct BijectivityReport {
    bool pass = false;
    long long forward_samples = 0;
    long long target_samples = 0;
    std::string counterexample; // first failure, if any
};

// Exact sampled verification that h = g x w is a bijection onto
// (t^circ)* x R_{>=0}: forward round-trips on skeleton samples and
// stratum-wise inversion certificates on target samples.
BijectivityReport verify_section_bijectivity(int n, const Rat& tau, int samples,
                                             std::uint64_t seed = 0);

struct SimplexSupport {
    bool skyscraper = false;        // tau = 0: the identity point
    std::vector<std::vector<Rat>> vertices; // tau * e_a in t'
    int dim = 0;                    // n - 1 for tau != 0
};

SimplexSupport simplex_support(int n, const Rat& tau);

} // namespace homcat::fanskeleton
