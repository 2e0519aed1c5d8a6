#include "homcat/schober.hpp"

#include "homcat/chain.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <stdexcept>

namespace homcat::schober {

using exactalg::ComplexMap;
using exactalg::RationalChainComplex;
using nlohmann::json;

namespace {

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const json& rows, std::size_t nr, std::size_t nc) {
    RatMatrix m(nr, nc);
    if (rows.size() != nr) throw std::invalid_argument("matrix JSON: row count mismatch");
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rat_from_string(rows[r][c].get<std::string>());
    }
    return m;
}

} // namespace

json PerverseDiskDatum::to_json() const {
    json j;
    j["phi"] = phi_dim;
    j["psi"] = psi_dim;
    j["p"] = matrix_to_json(p);
    j["q"] = matrix_to_json(q);
    return j;
}

PerverseDiskDatum PerverseDiskDatum::from_json(const json& j) {
    PerverseDiskDatum d;
    d.phi_dim = j.at("phi").get<std::size_t>();
    d.psi_dim = j.at("psi").get<std::size_t>();
    d.p = matrix_from_json(j.at("p"), d.psi_dim, d.phi_dim);
    d.q = matrix_from_json(j.at("q"), d.phi_dim, d.psi_dim);
    return d;
}

PerverseCheck check_perverse(const PerverseDiskDatum& d) {
    if (d.p.rows() != d.psi_dim || d.p.cols() != d.phi_dim || d.q.rows() != d.phi_dim ||
        d.q.cols() != d.psi_dim)
        throw std::invalid_argument("check_perverse: matrix shapes do not match the dimensions");
    PerverseCheck out;
    RatMatrix m_phi = RatMatrix::identity(d.phi_dim) - d.q * d.p;
    if (exactalg::determinant(m_phi) == 0) {
        out.failing = "m_Phi";
        return out;
    }
    RatMatrix m_psi = RatMatrix::identity(d.psi_dim) - d.p * d.q;
    if (exactalg::determinant(m_psi) == 0) {
        out.failing = "m_Psi";
        return out;
    }
    out.ok = true;
    return out;
}

Monodromies monodromies(const PerverseDiskDatum& d) {
    PerverseCheck c = check_perverse(d);
    if (!c.ok) throw std::invalid_argument("monodromies: " + c.failing + " is not invertible");
    Monodromies m;
    m.m_phi = RatMatrix::identity(d.phi_dim) - d.q * d.p;
    m.m_psi = RatMatrix::identity(d.psi_dim) - d.p * d.q;
    m.m_phi_inv = *exactalg::inverse(m.m_phi);
    m.m_psi_inv = *exactalg::inverse(m.m_psi);
    return m;
}

bool has_no_origin_sections(const PerverseDiskDatum& d) {
    return exactalg::rank(d.p) == d.phi_dim;
}

MonodromyLedgerEntry ledger_entry(const Rat& tau_turns) { return {tau_turns}; }

MonodromyLedgerEntry ledger_compose(const MonodromyLedgerEntry& a, const MonodromyLedgerEntry& b) {
    return {a.tau + b.tau};
}

CoherentDescriptor ledger_to_coherent(const MonodromyLedgerEntry& e) {
    if (e.theta() != 0)
        throw std::invalid_argument(
            "ledger_to_coherent: only full loops (theta = 0) act on the coherent side");
    return {-e.winding(), e.shift()};
}

json SchoberDiagram::to_json() const {
    json j;
    j["n"] = n;
    j["r"] = r;
    j["M0"] = m0.to_json();
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(m.to_json());
    j["Ms"] = std::move(arr);
    json mp = json::array();
    for (const auto& f : maps) mp.push_back(f.to_json());
    j["maps"] = std::move(mp);
    return j;
}

SchoberDiagram SchoberDiagram::from_json(const json& j) {
    SchoberDiagram d;
    d.n = j.at("n").get<int>();
    d.r = j.at("r").get<int>();
    d.m0 = LBComplex::from_json(j.at("M0"));
    for (const auto& m : j.at("Ms")) d.ms.push_back(LBComplex::from_json(m));
    for (const auto& f : j.at("maps")) d.maps.push_back(LBMap::from_json(f));
    return d;
}

namespace {

LBComplex pushed_m0(const SchoberDiagram& d) {
    if (d.n == 1) return LBComplex::zero(0);
    hyper::HyperplaneData h(d.n);
    return hyper::push_i(h, d.m0);
}

} // namespace

DiagramCheck validate_diagram(const SchoberDiagram& d) {
    DiagramCheck out;
    if (d.n < 1 || d.r < 1) {
        out.message = "need n >= 1 and r >= 1";
        return out;
    }
    if (static_cast<int>(d.ms.size()) != d.r - 1) {
        out.message = "expected r-1 ambient objects M_1..M_{r-1}";
        return out;
    }
    if (d.n == 1 && !d.m0.empty()) {
        out.message = "n = 1 forces M_0 = 0 (P^{-1} is empty)";
        return out;
    }
    lbcx::Violation v = lbcx::validate(d.m0);
    if (!v.ok) {
        out.message = "M_0: " + v.message;
        return out;
    }
    if (d.n >= 2 && !d.m0.empty() && d.m0.m != d.n - 2) {
        out.message = "M_0 must live on P^{n-2}";
        return out;
    }
    for (std::size_t k = 0; k < d.ms.size(); ++k) {
        v = lbcx::validate(d.ms[k]);
        if (!v.ok) {
            out.message = "M_" + std::to_string(k + 1) + ": " + v.message;
            return out;
        }
        if (!d.ms[k].empty() && d.ms[k].m != d.n - 1) {
            out.message = "M_" + std::to_string(k + 1) + " must live on P^{n-1}";
            return out;
        }
    }
    if (d.r >= 2 && d.maps.size() != d.ms.size()) {
        out.message = "expected r-1 structure maps";
        return out;
    }
    for (std::size_t k = 0; k < d.maps.size(); ++k) {
        v = lbcx::validate_map(d.maps[k]);
        if (!v.ok) {
            out.message = "structure map " + std::to_string(k + 1) + ": " + v.message;
            return out;
        }
    }
    // shape of the chain: maps[0]: M_1 -> push(M_0), maps[k]: M_{k+1} -> M_k
    if (!d.maps.empty()) {
        LBComplex p0 = pushed_m0(d);
        if (!(d.maps[0].source.terms == d.ms[0].terms && d.maps[0].target.terms == p0.terms)) {
            out.message = "structure map 1 must map M_1 to i_* M_0";
            return out;
        }
        for (std::size_t k = 1; k < d.maps.size(); ++k)
            if (!(d.maps[k].source.terms == d.ms[k].terms &&
                  d.maps[k].target.terms == d.ms[k - 1].terms)) {
                out.message = "structure map " + std::to_string(k + 1) + " endpoints are wrong";
                return out;
            }
    }
    out.ok = true;
    return out;
}

std::map<int, long long> diagram_hom_dims(const SchoberDiagram& x, const SchoberDiagram& y,
                                          const lbcx::RgammaOptions& opts) {
    DiagramCheck cx = validate_diagram(x), cy = validate_diagram(y);
    if (!cx.ok) throw std::invalid_argument("diagram_hom_dims: left diagram invalid: " + cx.message);
    if (!cy.ok) throw std::invalid_argument("diagram_hom_dims: right diagram invalid: " + cy.message);
    if (x.n != y.n || x.r != y.r)
        throw std::invalid_argument("diagram_hom_dims: diagrams must share (n, r)");

    // All blocks live on P^{n-1}; vertex 0 goes through its push_i image.
    LBComplex px0 = pushed_m0(x), py0 = pushed_m0(y);

    std::vector<LBComplex> vx{px0}, vy{py0};
    for (const auto& m : x.ms) vx.push_back(m);
    for (const auto& m : y.ms) vy.push_back(m);

    auto sheaf_hom = [](const LBComplex& a, const LBComplex& b) {
        return lbcx::tensor(lbcx::sheaf_dual(a), b);
    };

    int r = x.r;
    std::vector<LBComplex> vert, arrow;
    for (int j = 0; j < r; ++j) vert.push_back(sheaf_hom(vx[static_cast<std::size_t>(j)], vy[static_cast<std::size_t>(j)]));
    for (int j = 1; j < r; ++j) arrow.push_back(sheaf_hom(vx[static_cast<std::size_t>(j)], vy[static_cast<std::size_t>(j - 1)]));

    // Structure maps of x into push-image form (arrow j: X_j -> VX_{j-1}).
    std::vector<LBMap> rho_x, rho_y;
    for (int j = 1; j < r; ++j) {
        rho_x.push_back(x.maps[static_cast<std::size_t>(j - 1)]);
        rho_y.push_back(y.maps[static_cast<std::size_t>(j - 1)]);
    }

    int e = 1;
    for (const auto& c : vert) e = std::max(e, lbcx::cech_floor_start(c, 0));
    for (const auto& c : arrow) e = std::max(e, lbcx::cech_floor_start(c, 0));

    auto dims_at = [&](int E) {
        RationalChainComplex a, b;
        std::map<int, RatMatrix> comps;
        std::vector<RationalChainComplex> ac, bc;
        for (const auto& c : vert) ac.push_back(lbcx::cech_complex(c, 0, E));
        for (const auto& c : arrow) bc.push_back(lbcx::cech_complex(c, 0, E));
        for (const auto& c : ac) a = exactalg::direct_sum(a, c);
        for (const auto& c : bc) b = exactalg::direct_sum(b, c);

        // Block matrix of the comparison differential.
        std::vector<ComplexMap> pre, post;
        for (int j = 1; j < r; ++j) {
            // precomposition with rho_x: Hom(VX_{j-1}, VY_{j-1}) -> Hom(X_j, VY_{j-1})
            LBMap premap = lbcx::tensor_map_lb(lbcx::dual_map(rho_x[static_cast<std::size_t>(j - 1)]),
                                               lbcx::identity_map(vy[static_cast<std::size_t>(j - 1)]));
            pre.push_back(lbcx::cech_map(premap, 0, E));
            // postcomposition with rho_y: Hom(X_j, Y_j) -> Hom(X_j, VY_{j-1})
            LBMap postmap = lbcx::tensor_map_lb(lbcx::identity_map(lbcx::sheaf_dual(vx[static_cast<std::size_t>(j)])),
                                                rho_y[static_cast<std::size_t>(j - 1)]);
            post.push_back(lbcx::cech_map(postmap, 0, E));
        }

        auto a_offset = [&](int j, int t) {
            std::size_t off = 0;
            for (int k = 0; k < j; ++k) off += ac[static_cast<std::size_t>(k)].dim(t);
            return off;
        };
        auto b_offset = [&](int j, int t) {
            std::size_t off = 0;
            for (int k = 0; k < j; ++k) off += bc[static_cast<std::size_t>(k)].dim(t);
            return off;
        };

        int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
        for (int t = lo; t <= hi; ++t) {
            RatMatrix m(b.dim(t), a.dim(t));
            for (int j = 1; j < r; ++j) {
                const ComplexMap& pm = pre[static_cast<std::size_t>(j - 1)];
                RatMatrix pc = pm.component(t);
                std::size_t ro = b_offset(j - 1, t);
                std::size_t co = a_offset(j - 1, t);
                for (std::size_t rr = 0; rr < pc.rows(); ++rr)
                    for (std::size_t cc = 0; cc < pc.cols(); ++cc)
                        m.at(ro + rr, co + cc) += pc.at(rr, cc);
                const ComplexMap& qm = post[static_cast<std::size_t>(j - 1)];
                RatMatrix qc = qm.component(t);
                std::size_t co2 = a_offset(j, t);
                for (std::size_t rr = 0; rr < qc.rows(); ++rr)
                    for (std::size_t cc = 0; cc < qc.cols(); ++cc)
                        m.at(ro + rr, co2 + cc) -= qc.at(rr, cc);
            }
            comps.emplace(t, std::move(m));
        }
        ComplexMap phi(a, b, std::move(comps));
        RationalChainComplex tot = exactalg::shift(exactalg::cone(phi), -1);
        std::map<int, long long> out;
        for (auto& [deg, v] : exactalg::cohomology_dims(tot)) out[deg] = static_cast<long long>(v);
        return out;
    };

    auto prev = dims_at(e);
    for (int E = e; E < opts.e_cap; ++E) {
        auto next = dims_at(E + 1);
        if (prev == next) return next;
        prev = std::move(next);
    }
    throw std::runtime_error("diagram_hom_dims: total complex did not stabilize below the floor cap");
}

SchoberDiagram interval_diagram(int r, int a, int b) {
    if (r < 2 || a < 1 || b < a || b > r - 1)
        throw std::invalid_argument("interval_diagram: need 1 <= a <= b <= r-1");
    SchoberDiagram d;
    d.n = 1;
    d.r = r;
    d.m0 = LBComplex::zero(-1);
    for (int j = 1; j <= r - 1; ++j) {
        if (j >= a && j <= b)
            d.ms.push_back(LBComplex::line_bundle(0, 0));
        else
            d.ms.push_back(LBComplex::zero(0));
    }
    for (int j = 1; j <= r - 1; ++j) {
        const LBComplex& src = d.ms[static_cast<std::size_t>(j - 1)];
        LBComplex tgt = (j == 1) ? LBComplex::zero(0) : d.ms[static_cast<std::size_t>(j - 2)];
        LBMap f = lbcx::zero_map(src, tgt);
        if (j >= 2 && j - 1 >= a && j <= b) {
            // identity inside the interval
            lbcx::PolyMat m(1, 1, 1);
            m.at(0, 0) = lbcx::HomogPoly::constant(1, 1);
            f.components.emplace(0, std::move(m));
        }
        d.maps.push_back(std::move(f));
    }
    return d;
}

} // namespace homcat::schober
