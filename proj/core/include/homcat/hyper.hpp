#pragma once

#include "homcat/cech.hpp"
#include "homcat/lbcomplex.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace homcat::hyper {

using lbcx::HomogPoly;
using lbcx::LBComplex;
using lbcx::LBMap;
using lbcx::PolyMat;

// The hyperplane Y = {s = 0} in X = P^{n-1} for s = c_1 x_1 + ... + c_n x_n
// with every coefficient nonzero, together with a variable elimination fixing
// coordinates on Y = P^{n-2}.
struct HyperplaneData {
    int n;
    std::vector<Rat> coeffs; // length n, all nonzero
    int elim;                // 0-based eliminated variable

    HyperplaneData(int n_, std::vector<Rat> coeffs_ = {}, int elim_ = -1);

    int ambient_m() const { return n - 1; }  // X = P^{n-1}
    int hyper_m() const { return n - 2; }    // Y = P^{n-2}

    HomogPoly section() const;                      // s as an ambient polynomial
    HomogPoly to_hyper(const HomogPoly& p) const;   // substitute the eliminated variable
    HomogPoly to_ambient(const HomogPoly& p) const; // the canonical lift (section of to_hyper)
};

// i_* via the ambient Koszul pair: each O_Y(d) becomes [O(d-1) -s-> O(d)],
// with lifted differentials and exact correction terms so d^2 = 0.
LBComplex push_i(const HyperplaneData& h, const LBComplex& f);
LBMap push_i_map(const HyperplaneData& h, const LBMap& psi);

LBComplex pull_istar(const HyperplaneData& h, const LBComplex& g);
LBMap pull_istar_map(const HyperplaneData& h, const LBMap& psi);

// i^! = (-)|_Y (1) [-1]
LBComplex pull_ishriek(const HyperplaneData& h, const LBComplex& g);
LBMap pull_ishriek_map(const HyperplaneData& h, const LBMap& psi);

// Units and counits of (i^*, i_*) and (i_*, i^!) at the chain level.
LBMap unit_right(const HyperplaneData& h, const LBComplex& f);   // F -> i^! i_* F
LBMap counit_right(const HyperplaneData& h, const LBComplex& g); // i_* i^! G -> G
LBMap unit_left(const HyperplaneData& h, const LBComplex& g);    // G -> i_* i^* G
LBMap counit_left(const HyperplaneData& h, const LBComplex& f);  // i^* i_* F -> F

enum class TwistKind { PsiRight, PhiRight, PsiLeft, PhiLeft };

LBComplex twist_functor(const HyperplaneData& h, TwistKind kind, const LBComplex& obj);

// Comparison witnesses for the twist identifications.
LBMap compare_psi_right(const HyperplaneData& h, const LBComplex& g); // T_{Psi,r}(G) -> G(1)
LBMap compare_psi_left(const HyperplaneData& h, const LBComplex& g);  // G(-1) -> T_{Psi,l}(G)
LBMap compare_phi_right(const HyperplaneData& h, const LBComplex& f); // T_{Phi,r}(F) -> F(1)[-2]
LBMap compare_phi_left(const HyperplaneData& h, const LBComplex& f);  // F(-1)[2] -> T_{Phi,l}(F)

// SF2 composite S^r G -> S^r S S^l G -> T_{Phi,r} S^l G [1].
LBMap sf2_composite(const HyperplaneData& h, const LBComplex& g);
// SF4 composite S^l T_{Psi,r} G [-1] -> S^l S S^r G -> S^r G.
LBMap sf4_composite(const HyperplaneData& h, const LBComplex& g);

// Chain homotopy eta with d eta + eta d = psi - id, found by linear solve.
bool homotopic_to_identity(const LBMap& psi);

struct CheckEntry {
    std::string check;  // e.g. "SF1", "twist-psi-left", "triangle-right-Sr"
    std::string object; // e.g. "O(-2)" or "O_Y(-1)"
    bool pass = false;
};

struct SphericalReport {
    int n = 0;
    bool all_pass = false;
    std::vector<CheckEntry> checks;
    std::vector<std::pair<std::string, LBMap>> witnesses; // named comparison maps

    nlohmann::json to_json(bool include_witnesses = true) const;
};

// SF1-SF4 objectwise on the generator window O(-j), j = 0..n-1 (X side) and
// O_Y(-j), j = 0..n-2 (Y side), the three twist identifications, the inverse
// property and the adjunction triangle identities.
SphericalReport check_spherical(const HyperplaneData& h, int window = -1,
                                const lbcx::RgammaOptions& opts = {});

// The monad i_* i^* and its comparison with (-) (x) Cone(O(-1) -s-> O).
LBComplex monad(const HyperplaneData& h, const LBComplex& g);
LBMap monad_comparison(const HyperplaneData& h, const LBComplex& g);
bool compare_monad(const HyperplaneData& h, const LBComplex& g,
                   const lbcx::RgammaOptions& opts = {});

// Stalk of G at the coordinate point e_alpha (alpha 1-based).
exactalg::RationalChainComplex stalk_at_coordinate_point(const LBComplex& g, int alpha);

} // namespace homcat::hyper
