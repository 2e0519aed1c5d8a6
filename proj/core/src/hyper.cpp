#include "homcat/hyper.hpp"

#include "homcat/cohp.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace homcat::hyper {

using exactalg::RatMatrix;
using lbcx::Exponents;
using nlohmann::json;

HyperplaneData::HyperplaneData(int n_, std::vector<Rat> coeffs_, int elim_)
    : n(n_), coeffs(std::move(coeffs_)), elim(elim_) {
    if (n < 2) throw std::invalid_argument("HyperplaneData: n must be >= 2");
    if (coeffs.empty()) coeffs.assign(static_cast<std::size_t>(n), Rat(1));
    if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("HyperplaneData: need n section coefficients");
    for (const auto& c : coeffs)
        if (c == 0) throw std::invalid_argument("HyperplaneData: section coefficients must be nonzero");
    if (elim < 0) elim = n - 1;
    if (elim >= n) throw std::invalid_argument("HyperplaneData: bad eliminated variable");
}

HomogPoly HyperplaneData::section() const {
    HomogPoly s(n);
    for (int a = 0; a < n; ++a) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(a)] = 1;
        s.add_term(e, coeffs[static_cast<std::size_t>(a)]);
    }
    return s;
}

HomogPoly HyperplaneData::to_hyper(const HomogPoly& p) const {
    std::vector<Rat> repl(static_cast<std::size_t>(n), Rat(0));
    for (int a = 0; a < n; ++a) {
        if (a == elim) continue;
        repl[static_cast<std::size_t>(a)] = -coeffs[static_cast<std::size_t>(a)] / coeffs[static_cast<std::size_t>(elim)];
    }
    return substitute_eliminate(p, elim, repl);
}

HomogPoly HyperplaneData::to_ambient(const HomogPoly& p) const { return lift_include(p, elim); }

namespace {

PolyMat map_entries(const PolyMat& m, const std::function<HomogPoly(const HomogPoly&)>& f, int out_nvars) {
    PolyMat r(m.rows, m.cols, out_nvars);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = f(m.at(i, j));
    return r;
}

PolyMat lift_mat(const HyperplaneData& h, const PolyMat& m) {
    return map_entries(m, [&](const HomogPoly& p) { return h.to_ambient(p); }, h.n);
}

PolyMat subst_mat(const HyperplaneData& h, const PolyMat& m) {
    return map_entries(m, [&](const HomogPoly& p) { return h.to_hyper(p); }, h.n - 1);
}

PolyMat divide_mat_by_section(const HyperplaneData& h, const PolyMat& m) {
    HomogPoly s = h.section();
    return map_entries(m, [&](const HomogPoly& p) { return lbcx::divide_exact_linear(p, s, h.elim); }, h.n);
}

// w_t = (g_t - lift(g_t|_Y)) / s, the chain-level shadow of s|_Y = 0.
PolyMat w_correction(const HyperplaneData& h, const PolyMat& g) {
    PolyMat p = lift_mat(h, subst_mat(h, g));
    return divide_mat_by_section(h, g + (-p));
}

HomogPoly one(int nvars) { return HomogPoly::constant(nvars, 1); }

void put_block(PolyMat& m, std::size_t r0, std::size_t c0, const PolyMat& b) {
    for (std::size_t r = 0; r < b.rows; ++r)
        for (std::size_t c = 0; c < b.cols; ++c) m.at(r0 + r, c0 + c) = b.at(r, c);
}

void put_identity(PolyMat& m, std::size_t r0, std::size_t c0, std::size_t k, int nvars,
                  const Rat& scale = Rat(1)) {
    for (std::size_t i = 0; i < k; ++i) m.at(r0 + i, c0 + i) = HomogPoly::constant(nvars, scale);
}

void put_scalar_poly(PolyMat& m, std::size_t r0, std::size_t c0, std::size_t k, const HomogPoly& p) {
    for (std::size_t i = 0; i < k; ++i) m.at(r0 + i, c0 + i) = p;
}

} // namespace

LBComplex push_i(const HyperplaneData& h, const LBComplex& f) {
    lbcx::require_valid(f, "push_i input");
    LBComplex out;
    out.m = h.ambient_m();
    if (f.empty()) return out;
    if (f.m != h.hyper_m()) throw std::invalid_argument("push_i: complex not on the hyperplane");

    // Ambient lifts of the differentials and the exact correction terms.
    std::vector<PolyMat> lifted; // lifted[t - lo] = lift of d_f out of degree t
    for (int t = f.lo; t < f.hi(); ++t) lifted.push_back(lift_mat(h, f.diff(t)));
    auto lifted_at = [&](int t) -> PolyMat {
        if (t >= f.lo && t < f.hi()) return lifted[static_cast<std::size_t>(t - f.lo)];
        return PolyMat(f.nsummands(t + 1), f.nsummands(t), h.n);
    };
    HomogPoly s = h.section();

    out.lo = f.lo - 1;
    for (int t = out.lo; t <= f.hi(); ++t) {
        std::vector<int> tw = f.twists(t);
        for (int d : f.twists(t + 1)) tw.push_back(d - 1);
        out.terms.push_back(std::move(tw));
    }
    for (int t = out.lo; t < f.hi(); ++t) {
        std::size_t c1 = f.nsummands(t), c2 = f.nsummands(t + 1);
        std::size_t r1 = f.nsummands(t + 1), r2 = f.nsummands(t + 2);
        PolyMat d(r1 + r2, c1 + c2, h.n);
        put_block(d, 0, 0, lifted_at(t));
        put_scalar_poly(d, 0, c1, r1, s);
        if (r2) {
            PolyMat corr = divide_mat_by_section(h, lifted_at(t + 1) * lifted_at(t));
            put_block(d, r1, 0, -corr);
            put_block(d, r1, c1, -lifted_at(t + 1));
        }
        out.diffs.push_back(std::move(d));
    }
    lbcx::require_valid(out, "push_i output");
    return out;
}

LBMap push_i_map(const HyperplaneData& h, const LBMap& psi) {
    LBMap out;
    out.source = push_i(h, psi.source);
    out.target = push_i(h, psi.target);
    HomogPoly s = h.section();
    auto lifted_diff = [&](const LBComplex& f, int t) { return lift_mat(h, f.diff(t)); };
    for (int t = out.source.lo; t <= out.source.hi(); ++t) {
        std::size_t c1 = psi.source.nsummands(t), c2 = psi.source.nsummands(t + 1);
        std::size_t r1 = psi.target.nsummands(t), r2 = psi.target.nsummands(t + 1);
        PolyMat m(r1 + r2, c1 + c2, h.n);
        PolyMat lt = lift_mat(h, psi.component(t));
        PolyMat lt1 = lift_mat(h, psi.component(t + 1));
        put_block(m, 0, 0, lt);
        put_block(m, r1, c1, lt1);
        if (r2 && c1) {
            // u = (lift(psi) lift(d) - lift(d') lift(psi)) / s
            PolyMat u = divide_mat_by_section(
                h, lt1 * lifted_diff(psi.source, t) + (-(lifted_diff(psi.target, t) * lt)));
            put_block(m, r1, 0, u);
        }
        out.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(out, "push_i_map");
    return out;
}

LBComplex pull_istar(const HyperplaneData& h, const LBComplex& g) {
    lbcx::require_valid(g, "pull_istar input");
    LBComplex out;
    out.m = h.hyper_m();
    if (g.empty()) return out;
    if (g.m != h.ambient_m()) throw std::invalid_argument("pull_istar: complex not on the ambient space");
    out.lo = g.lo;
    out.terms = g.terms;
    for (int t = g.lo; t < g.hi(); ++t) out.diffs.push_back(subst_mat(h, g.diff(t)));
    lbcx::require_valid(out, "pull_istar output");
    return out;
}

LBMap pull_istar_map(const HyperplaneData& h, const LBMap& psi) {
    LBMap out;
    out.source = pull_istar(h, psi.source);
    out.target = pull_istar(h, psi.target);
    for (auto& [t, m] : psi.components) out.components.emplace(t, subst_mat(h, m));
    lbcx::require_valid(out, "pull_istar_map");
    return out;
}

LBComplex pull_ishriek(const HyperplaneData& h, const LBComplex& g) {
    return shift_lb(twist(pull_istar(h, g), 1), -1);
}

LBMap pull_ishriek_map(const HyperplaneData& h, const LBMap& psi) {
    return lbcx::shift_map(lbcx::twist_map(pull_istar_map(h, psi), 1), -1);
}

LBMap unit_right(const HyperplaneData& h, const LBComplex& f) {
    LBMap u;
    u.source = f;
    u.target = pull_ishriek(h, push_i(h, f)); // degree t: [F^{t-1}(1) | F^t]
    int nv = h.n - 1;
    for (int t = f.lo; t <= f.hi(); ++t) {
        std::size_t r1 = f.nsummands(t - 1), r2 = f.nsummands(t);
        PolyMat m(r1 + r2, r2, nv);
        put_identity(m, r1, 0, r2, nv);
        u.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(u, "unit_right");
    return u;
}

LBMap counit_right(const HyperplaneData& h, const LBComplex& g) {
    LBMap c;
    c.source = push_i(h, pull_ishriek(h, g)); // degree t: [G^{t-1}(1) | G^t]
    c.target = g;
    for (int t = c.source.lo; t <= c.source.hi(); ++t) {
        std::size_t c1 = g.nsummands(t - 1), c2 = g.nsummands(t);
        PolyMat m(g.nsummands(t), c1 + c2, h.n);
        if (c1) put_block(m, 0, 0, w_correction(h, g.diff(t - 1)));
        put_identity(m, 0, c1, c2, h.n);
        c.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(c, "counit_right");
    return c;
}

LBMap unit_left(const HyperplaneData& h, const LBComplex& g) {
    LBMap u;
    u.source = g;
    u.target = push_i(h, pull_istar(h, g)); // degree t: [G^t | G^{t+1}(-1)]
    for (int t = g.lo; t <= g.hi(); ++t) {
        std::size_t r1 = g.nsummands(t), r2 = g.nsummands(t + 1);
        PolyMat m(r1 + r2, r1, h.n);
        put_identity(m, 0, 0, r1, h.n);
        if (r2) put_block(m, r1, 0, w_correction(h, g.diff(t)));
        u.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(u, "unit_left");
    return u;
}

LBMap counit_left(const HyperplaneData& h, const LBComplex& f) {
    LBMap c;
    c.source = pull_istar(h, push_i(h, f)); // degree t: [F^t | F^{t+1}(-1)]
    c.target = f;
    int nv = h.n - 1;
    for (int t = c.source.lo; t <= c.source.hi(); ++t) {
        std::size_t c1 = f.nsummands(t), c2 = f.nsummands(t + 1);
        PolyMat m(c1, c1 + c2, nv);
        put_identity(m, 0, 0, c1, nv);
        c.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(c, "counit_left");
    return c;
}

LBComplex twist_functor(const HyperplaneData& h, TwistKind kind, const LBComplex& obj) {
    switch (kind) {
        case TwistKind::PsiRight: return cone_lb(counit_right(h, obj));
        case TwistKind::PhiRight: return shift_lb(cone_lb(unit_right(h, obj)), -1);
        case TwistKind::PsiLeft: return shift_lb(cone_lb(unit_left(h, obj)), -1);
        case TwistKind::PhiLeft: return cone_lb(counit_left(h, obj));
    }
    throw std::logic_error("twist_functor: bad kind");
}

LBMap compare_psi_right(const HyperplaneData& h, const LBComplex& g) {
    LBMap cr = counit_right(h, g);
    LBMap cmp;
    cmp.source = cone_lb(cr); // degree t: [G^t(1) | G^{t+1} | G^t]
    cmp.target = twist(g, 1);
    HomogPoly s = h.section();
    for (int t = cmp.source.lo; t <= cmp.source.hi(); ++t) {
        std::size_t b1 = g.nsummands(t), b2 = g.nsummands(t + 1), b3 = g.nsummands(t);
        PolyMat m(g.nsummands(t), b1 + b2 + b3, h.n);
        put_identity(m, 0, 0, b1, h.n);
        put_scalar_poly(m, 0, b1 + b2, b3, s);
        cmp.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(cmp, "compare_psi_right");
    return cmp;
}

LBMap compare_psi_left(const HyperplaneData& h, const LBComplex& g) {
    LBMap ul = unit_left(h, g);
    LBMap cmp;
    cmp.source = twist(g, -1);
    cmp.target = shift_lb(cone_lb(ul), -1); // degree t: [G^t | G^{t-1} | G^t(-1)]
    HomogPoly s = h.section();
    for (int t = cmp.source.lo; t <= cmp.source.hi(); ++t) {
        std::size_t b1 = g.nsummands(t), b2 = g.nsummands(t - 1), b3 = g.nsummands(t);
        PolyMat m(b1 + b2 + b3, g.nsummands(t), h.n);
        put_scalar_poly(m, 0, 0, b1, s);
        put_identity(m, b1 + b2, 0, b3, h.n, Rat(-1));
        cmp.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(cmp, "compare_psi_left");
    return cmp;
}

LBMap compare_phi_right(const HyperplaneData& h, const LBComplex& f) {
    LBMap ur = unit_right(h, f);
    LBMap cmp;
    cmp.source = shift_lb(cone_lb(ur), -1); // degree t: [F^t | F^{t-2}(1) | F^{t-1}]
    cmp.target = shift_lb(twist(f, 1), -2);
    int nv = h.n - 1;
    for (int t = cmp.source.lo; t <= cmp.source.hi(); ++t) {
        std::size_t b1 = f.nsummands(t), b2 = f.nsummands(t - 2), b3 = f.nsummands(t - 1);
        PolyMat m(f.nsummands(t - 2), b1 + b2 + b3, nv);
        put_identity(m, 0, b1, b2, nv);
        cmp.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(cmp, "compare_phi_right");
    return cmp;
}

LBMap compare_phi_left(const HyperplaneData& h, const LBComplex& f) {
    LBMap cl = counit_left(h, f);
    LBMap cmp;
    cmp.source = shift_lb(twist(f, -1), 2);
    cmp.target = cone_lb(cl); // degree t: [F^{t+1} | F^{t+2}(-1) | F^t]
    int nv = h.n - 1;
    for (int t = cmp.source.lo; t <= cmp.source.hi(); ++t) {
        std::size_t b1 = f.nsummands(t + 1), b2 = f.nsummands(t + 2), b3 = f.nsummands(t);
        PolyMat m(b1 + b2 + b3, f.nsummands(t + 2), nv);
        put_identity(m, b1, 0, b2, nv);
        cmp.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(cmp, "compare_phi_left");
    return cmp;
}

LBMap sf2_composite(const HyperplaneData& h, const LBComplex& g) {
    LBComplex istar_g = pull_istar(h, g);
    LBMap first = pull_ishriek_map(h, unit_left(h, g));        // i^! G -> i^! i_* i^* G
    LBMap second = lbcx::cone_inclusion(unit_right(h, istar_g)); // i^! i_* i^* G -> T_{Phi,r} i^* G [1]
    LBMap out = lbcx::compose(second, first);
    lbcx::require_valid(out, "sf2_composite");
    return out;
}

LBMap sf4_composite(const HyperplaneData& h, const LBComplex& g) {
    LBComplex ishriek_g = pull_ishriek(h, g);
    LBMap cr = counit_right(h, g);
    // Rotated triangle map T_{Psi,r} G [-1] -> i_* i^! G.
    LBMap delta;
    delta.source = shift_lb(cone_lb(cr), -1); // degree t: [K^t | G^{t-1}] with K = i_* i^! G
    delta.target = cr.source;
    for (int t = delta.source.lo; t <= delta.source.hi(); ++t) {
        std::size_t k = delta.target.nsummands(t);
        std::size_t b2 = g.nsummands(t - 1);
        PolyMat m(k, k + b2, h.n);
        put_identity(m, 0, 0, k, h.n);
        delta.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(delta, "sf4 connecting map");
    LBMap out = lbcx::compose(counit_left(h, ishriek_g), pull_istar_map(h, delta));
    lbcx::require_valid(out, "sf4_composite");
    return out;
}

bool homotopic_to_identity(const LBMap& psi) {
    lbcx::require_valid(psi, "homotopic_to_identity");
    const LBComplex& c = psi.source;
    {
        // endpoints must be the same complex
        lbcx::Violation v = lbcx::validate(psi.target);
        if (!v.ok || psi.target.lo != c.lo || psi.target.terms != c.terms)
            throw std::invalid_argument("homotopic_to_identity: endpoints differ");
    }
    int nv = c.m + 1;
    LBMap idm = lbcx::identity_map(c);

    // Residual R_t = psi_t - id_t; trivial homotopy when it vanishes.
    bool all_zero = true;
    std::map<int, PolyMat> residual;
    for (int t = c.lo; t <= c.hi(); ++t) {
        PolyMat r = psi.component(t) + (-idm.component(t));
        if (!r.is_zero()) all_zero = false;
        residual.emplace(t, std::move(r));
    }
    if (all_zero) return true;

    // Unknowns: coefficients of eta_t : C^t -> C^{t-1}.
    struct Unknown {
        int t;
        std::size_t r, cc;
        Exponents e;
    };
    std::vector<Unknown> unknowns;
    std::map<std::tuple<int, std::size_t, std::size_t, Exponents>, std::size_t> unknown_index;
    for (int t = c.lo + 1; t <= c.hi(); ++t) {
        auto src = c.twists(t), tgt = c.twists(t - 1);
        for (std::size_t r = 0; r < tgt.size(); ++r)
            for (std::size_t cc = 0; cc < src.size(); ++cc) {
                int deg = tgt[r] - src[cc];
                if (deg < 0) continue;
                for (const auto& mono : cohp::h_basis(c.m, 0, deg).basis) {
                    Exponents e(mono.begin(), mono.end());
                    unknown_index.emplace(std::make_tuple(t, r, cc, e), unknowns.size());
                    unknowns.push_back({t, r, cc, e});
                }
            }
    }

    // Equations: coefficients of d_{t-1} eta_t + eta_{t+1} d_t = R_t.
    struct Eq {
        std::map<std::size_t, Rat> lhs;
        Rat rhs;
    };
    std::map<std::tuple<int, std::size_t, std::size_t, Exponents>, Eq> eqs;
    auto add_lhs = [&](int t, std::size_t r, std::size_t cc, const Exponents& mono, std::size_t ui,
                       const Rat& coef) { eqs[std::make_tuple(t, r, cc, mono)].lhs[ui] += coef; };

    for (int t = c.lo; t <= c.hi(); ++t) {
        // d_{t-1} o eta_t
        PolyMat dprev = c.diff(t - 1);
        for (std::size_t r = 0; r < c.nsummands(t); ++r)
            for (std::size_t k = 0; k < c.nsummands(t - 1); ++k) {
                const HomogPoly& dp = dprev.at(r, k);
                if (dp.is_zero()) continue;
                auto src = c.twists(t);
                for (std::size_t cc = 0; cc < src.size(); ++cc) {
                    int deg = c.twists(t - 1)[k] - src[cc];
                    if (deg < 0) continue;
                    for (const auto& mono : cohp::h_basis(c.m, 0, deg).basis) {
                        Exponents e(mono.begin(), mono.end());
                        auto it = unknown_index.find(std::make_tuple(t, k, cc, e));
                        if (it == unknown_index.end()) continue;
                        for (const auto& [de, dc] : dp.terms()) {
                            Exponents sum(e.size());
                            for (std::size_t v = 0; v < e.size(); ++v) sum[v] = e[v] + de[v];
                            add_lhs(t, r, cc, sum, it->second, dc);
                        }
                    }
                }
            }
        // eta_{t+1} o d_t
        PolyMat dt = c.diff(t);
        for (std::size_t r = 0; r < c.nsummands(t); ++r)
            for (std::size_t k = 0; k < c.nsummands(t + 1); ++k) {
                auto tgt = c.twists(t);
                int degk = tgt[r] - c.twists(t + 1)[k];
                if (degk < 0) continue;
                for (const auto& mono : cohp::h_basis(c.m, 0, degk).basis) {
                    Exponents e(mono.begin(), mono.end());
                    auto it = unknown_index.find(std::make_tuple(t + 1, r, k, e));
                    if (it == unknown_index.end()) continue;
                    for (std::size_t cc = 0; cc < c.nsummands(t); ++cc) {
                        const HomogPoly& dp = dt.at(k, cc);
                        if (dp.is_zero()) continue;
                        for (const auto& [de, dc] : dp.terms()) {
                            Exponents sum(e.size());
                            for (std::size_t v = 0; v < e.size(); ++v) sum[v] = e[v] + de[v];
                            add_lhs(t, r, cc, sum, it->second, dc);
                        }
                    }
                }
            }
        // right-hand side
        const PolyMat& rt = residual.at(t);
        for (std::size_t r = 0; r < rt.rows; ++r)
            for (std::size_t cc = 0; cc < rt.cols; ++cc)
                for (const auto& [e, coef] : rt.at(r, cc).terms())
                    eqs[std::make_tuple(t, r, cc, e)].rhs += coef;
    }

    RatMatrix a(eqs.size(), unknowns.size());
    std::vector<Rat> b;
    b.reserve(eqs.size());
    std::size_t row = 0;
    for (auto& [key, eq] : eqs) {
        for (auto& [ui, coef] : eq.lhs) a.at(row, ui) = coef;
        b.push_back(eq.rhs);
        ++row;
    }
    auto sol = exactalg::solve(a, b);
    if (!sol) return false;
    (void)nv;
    return true;
}

LBComplex monad(const HyperplaneData& h, const LBComplex& g) {
    return push_i(h, pull_istar(h, g));
}

LBMap monad_comparison(const HyperplaneData& h, const LBComplex& g) {
    // G (x) Cone(O(-1) -s-> O) -> i_* i^* G
    LBMap smap;
    smap.source = LBComplex::line_bundle(h.ambient_m(), -1);
    smap.target = LBComplex::line_bundle(h.ambient_m(), 0);
    {
        PolyMat m(1, 1, h.n);
        m.at(0, 0) = h.section();
        smap.components.emplace(0, std::move(m));
    }
    LBComplex ks = cone_lb(smap);
    LBMap cmp;
    cmp.source = lbcx::tensor(g, ks); // degree t: [G^t | G^{t+1}(-1)]
    cmp.target = monad(h, g);         // degree t: [G^t | G^{t+1}(-1)]
    for (int t = cmp.source.lo; t <= cmp.source.hi(); ++t) {
        std::size_t b1 = g.nsummands(t), b2 = g.nsummands(t + 1);
        PolyMat m(b1 + b2, b1 + b2, h.n);
        put_identity(m, 0, 0, b1, h.n);
        if (b2) {
            put_block(m, b1, 0, w_correction(h, g.diff(t)));
            put_identity(m, b1, b1, b2, h.n, (((t + 1) % 2) + 2) % 2 == 0 ? Rat(1) : Rat(-1));
        }
        cmp.components.emplace(t, std::move(m));
    }
    lbcx::require_valid(cmp, "monad_comparison");
    return cmp;
}

bool compare_monad(const HyperplaneData& h, const LBComplex& g, const lbcx::RgammaOptions& opts) {
    return lbcx::is_equivalence(monad_comparison(h, g), opts);
}

exactalg::RationalChainComplex stalk_at_coordinate_point(const LBComplex& g, int alpha) {
    if (alpha < 1 || alpha > g.m + 1)
        throw std::invalid_argument("stalk_at_coordinate_point: alpha out of range");
    std::vector<Rat> pt(static_cast<std::size_t>(g.m + 1), Rat(0));
    pt[static_cast<std::size_t>(alpha - 1)] = 1;
    return lbcx::eval_at_point(g, pt);
}

namespace {

std::string gen_name(bool on_hyper, int j) {
    std::ostringstream os;
    os << (on_hyper ? "O_Y(" : "O(") << -j << ")";
    return os.str();
}

} // namespace

SphericalReport check_spherical(const HyperplaneData& h, int window, const lbcx::RgammaOptions& opts) {
    SphericalReport rep;
    rep.n = h.n;
    if (window < 0) window = h.n;
    auto record = [&](const std::string& check, const std::string& obj, bool pass) {
        rep.checks.push_back({check, obj, pass});
    };

    for (int j = 0; j < window; ++j) {
        LBComplex g = LBComplex::line_bundle(h.ambient_m(), -j);
        std::string nm = gen_name(false, j);

        LBMap theta = compare_psi_right(h, g);
        record("SF1", nm, lbcx::is_equivalence(theta, opts));
        LBMap chi = compare_psi_left(h, g);
        record("twist-psi-left", nm, lbcx::is_equivalence(chi, opts));
        record("SF2", nm, lbcx::is_equivalence(sf2_composite(h, g), opts));
        record("SF4", nm, lbcx::is_equivalence(sf4_composite(h, g), opts));

        // T_{Psi,r} T_{Psi,l} ~= id through the zigzag
        //   T_{Psi,r}(T_{Psi,l} G) -> T_{Psi,l}(G)(1) <- G.
        LBComplex tpsil = twist_functor(h, TwistKind::PsiLeft, g);
        bool leg1 = lbcx::is_equivalence(compare_psi_right(h, tpsil), opts);
        bool leg2 = lbcx::is_equivalence(lbcx::twist_map(chi, 1), opts);
        record("inverse-psi", nm, leg1 && leg2);

        // Triangle identities evaluated on i^! G and i^* G.
        {
            LBComplex f0 = pull_ishriek(h, g);
            LBMap comp = lbcx::compose(pull_ishriek_map(h, counit_right(h, g)), unit_right(h, f0));
            record("triangle-right-Sr", nm, homotopic_to_identity(comp));
        }
        {
            LBComplex f1 = pull_istar(h, g);
            LBMap comp = lbcx::compose(counit_left(h, f1), pull_istar_map(h, unit_left(h, g)));
            record("triangle-left-Sl", nm, homotopic_to_identity(comp));
        }

        if (j == 0) {
            rep.witnesses.emplace_back("T-psi-right@" + nm, theta);
            rep.witnesses.emplace_back("T-psi-left@" + nm, chi);
        }
    }

    for (int j = 0; j < std::max(1, window - 1); ++j) {
        LBComplex f = LBComplex::line_bundle(h.hyper_m(), -j);
        std::string nm = gen_name(true, j);

        LBMap pi = compare_phi_right(h, f);
        record("SF3", nm, lbcx::is_equivalence(pi, opts));
        record("twist-phi-left", nm, lbcx::is_equivalence(compare_phi_left(h, f), opts));

        // Triangle identities evaluated on i_* F.
        {
            LBMap comp = lbcx::compose(counit_right(h, push_i(h, f)), push_i_map(h, unit_right(h, f)));
            record("triangle-right-S", nm, homotopic_to_identity(comp));
        }
        {
            LBMap comp = lbcx::compose(push_i_map(h, counit_left(h, f)), unit_left(h, push_i(h, f)));
            record("triangle-left-S", nm, homotopic_to_identity(comp));
        }
        if (j == 0) rep.witnesses.emplace_back("T-phi-right@" + nm, pi);
    }

    rep.all_pass = true;
    for (const auto& e : rep.checks) rep.all_pass = rep.all_pass && e.pass;
    return rep;
}

json SphericalReport::to_json(bool include_witnesses) const {
    json j;
    j["n"] = n;
    j["all_pass"] = all_pass;
    json cs = json::array();
    for (const auto& e : checks) cs.push_back({{"check", e.check}, {"object", e.object}, {"pass", e.pass}});
    j["checks"] = std::move(cs);
    if (include_witnesses) {
        json ws = json::object();
        for (const auto& [name, m] : witnesses) ws[name] = m.to_json();
        j["witnesses"] = std::move(ws);
    }
    return j;
}

} // namespace homcat::hyper
