#pragma once

#include "homcat/cech.hpp"
#include "homcat/hyper.hpp"
#include "homcat/ratmatrix.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace homcat::schober {

using exactalg::RatMatrix;
using lbcx::LBComplex;
using lbcx::LBMap;

// Disk-level perverse sheaf as a quiver (Phi, Psi, p, q) with invertible
// monodromies m_Phi = id - qp and m_Psi = id - pq.
struct PerverseDiskDatum {
    std::size_t phi_dim = 0, psi_dim = 0;
    RatMatrix p; // psi_dim x phi_dim
    RatMatrix q; // phi_dim x psi_dim

    nlohmann::json to_json() const;
    static PerverseDiskDatum from_json(const nlohmann::json& j);
};

struct PerverseCheck {
    bool ok = false;
    std::string failing; // "m_Phi" or "m_Psi" when !ok
};

PerverseCheck check_perverse(const PerverseDiskDatum& d);

struct Monodromies {
    RatMatrix m_phi, m_psi, m_phi_inv, m_psi_inv;
};

Monodromies monodromies(const PerverseDiskDatum& d);

// Hom from the origin skyscraper vanishes iff p is injective.
bool has_no_origin_sections(const PerverseDiskDatum& d);

// Symbolic A_tau ledger: tau a rational turn, reduced to winding and a
// representative in [0, 1); the metaplectic shift is twice the winding.
struct MonodromyLedgerEntry {
    Rat tau = 0;

    Int winding() const { return rat_floor(tau); }
    Rat theta() const { return tau - Rat(winding()); }
    Int shift() const { return 2 * winding(); }
};

MonodromyLedgerEntry ledger_entry(const Rat& tau_turns);
MonodromyLedgerEntry ledger_compose(const MonodromyLedgerEntry& a, const MonodromyLedgerEntry& b);

struct CoherentDescriptor {
    Int twist;  // tensor by O(twist)
    Int shift;  // cohomological shift
};

// Full loops only: A_{2 pi m} corresponds to (x) O(-m) [2m].
CoherentDescriptor ledger_to_coherent(const MonodromyLedgerEntry& e);

// An M(r) object: M_0 on P^{n-2}, M_1..M_{r-1} on P^{n-1}, with leftward
// structure maps M_1 -> i_* M_0 and M_{j+1} -> M_j.
struct SchoberDiagram {
    int n = 1;
    int r = 1;
    LBComplex m0;               // on P^{n-2}; must be zero when n = 1
    std::vector<LBComplex> ms;  // M_1..M_{r-1} on P^{n-1}
    std::vector<LBMap> maps;    // maps[0]: M_1 -> push_i(M_0), maps[j]: M_{j+2} -> M_{j+1}

    nlohmann::json to_json() const;
    static SchoberDiagram from_json(const nlohmann::json& j);
};

struct DiagramCheck {
    bool ok = false;
    std::string message;
};

DiagramCheck validate_diagram(const SchoberDiagram& d);

// Hom in the diagram category: total complex of the two-column bicomplex
// (+)_j RHom(X_j, Y_j) -> (+)_arrows RHom(X_{j+1}, Y_j), vertex 0 through its
// push_i image on P^{n-1}. Degenerates to A_{r-1}-quiver Hom/Ext at n = 1.
std::map<int, long long> diagram_hom_dims(const SchoberDiagram& x, const SchoberDiagram& y,
                                          const lbcx::RgammaOptions& opts = {});

// Interval-module diagram for the n = 1 degeneration: k at vertices a..b
// (1-based among M_1..M_{r-1}) with identity maps inside the interval.
SchoberDiagram interval_diagram(int r, int a, int b);

} // namespace homcat::schober
