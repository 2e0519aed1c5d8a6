#pragma once

#include "homcat/chain.hpp"
#include "homcat/rational.hpp"

#include <nlohmann/json_fwd.hpp>
#include <map>
#include <string>
#include <vector>

namespace homcat::cellccc {

using exactalg::ComplexMap;
using exactalg::RationalChainComplex;

// Cell structure on S^1 = R/Z: k >= 1 vertices at rational positions in
// [0, 1), cyclically ordered, with the marked point e at position 0 (always
// vertex 0). Edge i runs from vertex i to vertex i+1 mod k.
struct CellCircle {
    std::vector<Rat> positions;

    int k() const { return static_cast<int>(positions.size()); }
};

CellCircle make_circle(std::vector<Rat> positions);

// Cellular sheaf of complexes: stalks per cell, generization maps per
// vertex-edge incidence (every map is a chain map by construction).
struct CellSheafComplex {
    CellCircle circle;
    std::vector<RationalChainComplex> vstalk; // per vertex
    std::vector<RationalChainComplex> estalk; // per edge
    std::vector<ComplexMap> gen_left;  // v_i -> E_{i-1 mod k}
    std::vector<ComplexMap> gen_right; // v_i -> E_i

    nlohmann::json to_json() const;
    static CellSheafComplex from_json(const nlohmann::json& j);
};

enum class Generator { Unit, Twist };

// unit = skyscraper k_e; twist = full extension of the constant sheaf on the
// open arc S^1 minus e (two-branch stalk at e, inward generizations).
CellSheafComplex build_generator(Generator which);

// Rank-1 local system with monodromy lambda != 0.
CellSheafComplex local_system(const Rat& lambda);

// Singular-support window: quasi-isomorphic generizations at every vertex
// other than e.
bool in_sh_lambda(const CellSheafComplex& f);

// Sheaf-Hom Ext table: total complex of vertex/edge Hom with the
// restriction-comparison differential over the incidence poset.
std::map<int, long long> cell_hom_dims(const CellSheafComplex& f, const CellSheafComplex& g);

// Copies stalks along cells of a refinement (new vertex positions must
// contain the old ones; the marked point stays at 0).
CellSheafComplex refine(const CellSheafComplex& f, const CellCircle& finer);

// Convolution F * G = m_!(F x G): fiberwise compactly-supported sections
// over the multiplication map, cell by cell.
CellSheafComplex convolve(const CellSheafComplex& f, const CellSheafComplex& g);

// Degreewise map of cellular sheaves; commutes with generizations.
struct CellSheafMap {
    CellSheafComplex source, target; // same circle
    std::vector<ComplexMap> vcomp, ecomp;
};

bool validate_cell_map(const CellSheafMap& m, std::string* why = nullptr);
bool is_cellwise_qiso(const CellSheafMap& m);

// Explicit quasi-isomorphism G -> unit * G witnessing the unit law.
CellSheafMap unit_law_witness(const CellSheafComplex& g);

struct CccReport {
    bool pass = false;
    std::vector<std::string> lines; // one verdict per grid entry / comparison
};

// The 2x2 Ext grid of {k_e, d_* k_Delta} computed cellularly against the grid
// of {O, O(-1)} on P^1 computed coherently, plus twist * twist against O(-2).
CccReport ccc_compare();

// Rank-1 local system vs torsion-sheaf Ext: self-Ext (1,1), distinct
// monodromies Hom-orthogonal.
CccReport local_system_check(const Rat& lambda);

} // namespace homcat::cellccc
