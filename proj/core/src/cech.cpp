#include "homcat/cech.hpp"

#include "homcat/cohp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace homcat::lbcx {

namespace {

using exactalg::RatMatrix;
using exactalg::RationalChainComplex;

int popcount(unsigned x) { return __builtin_popcount(x); }

// Monomials with sum = total, floor -E inside the chart set, >= 0 outside.
void enumerate_window(int nvars, int total, unsigned imask, int E,
                      const std::function<void(const Exponents&)>& visit) {
    Exponents cur(static_cast<std::size_t>(nvars));
    std::function<void(int, int)> rec = [&](int v, int rest) {
        int flo = (imask >> v) & 1 ? -E : 0;
        if (v == nvars - 1) {
            if (rest >= flo) {
                cur[static_cast<std::size_t>(v)] = rest;
                visit(cur);
            }
            return;
        }
        int tail_min = 0;
        for (int w = v + 1; w < nvars; ++w) tail_min += ((imask >> w) & 1) ? -E : 0;
        for (int e = flo; rest - e >= tail_min; ++e) {
            cur[static_cast<std::size_t>(v)] = e;
            rec(v + 1, rest - e);
        }
    };
    if (nvars == 0) return;
    rec(0, total);
}

struct Key {
    int i;
    int s;
    unsigned imask;
    Exponents e;
    bool operator==(const Key& o) const {
        return i == o.i && s == o.s && imask == o.imask && e == o.e;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = std::hash<int>()(k.i) * 1000003u ^ std::hash<int>()(k.s) * 97u ^ k.imask;
        for (int x : k.e) h = h * 1099511628211ull ^ static_cast<std::size_t>(x + 512);
        return h;
    }
};

struct Basis {
    int tlo = 0;
    std::vector<std::vector<Key>> elems; // by total degree t - tlo
    std::vector<std::unordered_map<Key, int, KeyHash>> index;

    int dim(int t) const {
        if (t < tlo || t >= tlo + static_cast<int>(elems.size())) return 0;
        return static_cast<int>(elems[static_cast<std::size_t>(t - tlo)].size());
    }
    int find(int t, const Key& k) const {
        if (t < tlo || t >= tlo + static_cast<int>(elems.size())) return -1;
        auto& m = index[static_cast<std::size_t>(t - tlo)];
        auto it = m.find(k);
        return it == m.end() ? -1 : it->second;
    }
};

Basis enumerate_basis(const LBComplex& c, int j, int E) {
    Basis b;
    int m = c.m;
    b.tlo = c.lo;
    int thi = c.hi() + m;
    b.elems.resize(static_cast<std::size_t>(thi - b.tlo + 1));
    b.index.resize(b.elems.size());
    for (int i = c.lo; i <= c.hi(); ++i) {
        auto tw = c.twists(i);
        for (int s = 0; s < static_cast<int>(tw.size()); ++s) {
            int d = tw[static_cast<std::size_t>(s)] + j;
            for (unsigned imask = 1; imask < (1u << (m + 1)); ++imask) {
                int t = i + popcount(imask) - 1;
                auto& lvl = b.elems[static_cast<std::size_t>(t - b.tlo)];
                auto& idx = b.index[static_cast<std::size_t>(t - b.tlo)];
                enumerate_window(m + 1, d, imask, E, [&](const Exponents& e) {
                    Key k{i, s, imask, e};
                    idx.emplace(k, static_cast<int>(lvl.size()));
                    lvl.push_back(std::move(k));
                });
            }
        }
    }
    return b;
}

using SparseCol = std::vector<std::pair<int, Rat>>; // sorted by row

// Columns of the total differential out of total degree t.
std::vector<SparseCol> differential_columns(const LBComplex& c, int j, const Basis& b, int t) {
    (void)j;
    std::vector<SparseCol> cols;
    int n = b.dim(t);
    cols.resize(static_cast<std::size_t>(n));
    if (t < b.tlo || t - b.tlo >= static_cast<int>(b.elems.size())) return cols;
    const auto& lvl = b.elems[static_cast<std::size_t>(t - b.tlo)];
    int m = c.m;
    for (int ci = 0; ci < n; ++ci) {
        const Key& k = lvl[static_cast<std::size_t>(ci)];
        std::map<int, Rat> acc;
        // Cech inclusions, alternating signs.
        for (int beta = 0; beta <= m; ++beta) {
            if ((k.imask >> beta) & 1) continue;
            int below = popcount(k.imask & ((1u << beta) - 1));
            Rat sign = (below % 2 == 0) ? 1 : -1;
            Key tgt{k.i, k.s, k.imask | (1u << beta), k.e};
            int r = b.find(t + 1, tgt);
            if (r >= 0) acc[r] += sign;
        }
        // Internal differential with the total-complex sign (-1)^p.
        int p = popcount(k.imask) - 1;
        Rat psign = (p % 2 == 0) ? 1 : -1;
        PolyMat d = c.diff(k.i);
        for (std::size_t s2 = 0; s2 < d.rows; ++s2) {
            const HomogPoly& poly = d.at(s2, static_cast<std::size_t>(k.s));
            if (poly.is_zero()) continue;
            for (const auto& [exp, coef] : poly.terms()) {
                Exponents e2 = k.e;
                for (std::size_t v = 0; v < e2.size(); ++v) e2[v] += exp[v];
                Key tgt{k.i + 1, static_cast<int>(s2), k.imask, e2};
                int r = b.find(t + 1, tgt);
                if (r >= 0) {
                    acc[r] += psign * coef;
                    if (acc[r] == 0) acc.erase(r);
                }
            }
        }
        SparseCol col;
        col.reserve(acc.size());
        for (auto& [r, v] : acc)
            if (v != 0) col.emplace_back(r, v);
        cols[static_cast<std::size_t>(ci)] = std::move(col);
    }
    return cols;
}

long long sparse_rank(std::vector<SparseCol> cols) {
    std::unordered_map<int, int> owner; // pivot row -> column index
    long long rk = 0;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        SparseCol& col = cols[ci];
        while (!col.empty()) {
            int piv = col.back().first;
            auto it = owner.find(piv);
            if (it == owner.end()) {
                owner.emplace(piv, static_cast<int>(ci));
                ++rk;
                break;
            }
            const SparseCol& red = cols[static_cast<std::size_t>(it->second)];
            Rat f = col.back().second / red.back().second;
            // col -= f * red (merge of sorted vectors)
            SparseCol out;
            out.reserve(col.size() + red.size());
            std::size_t a = 0, bidx = 0;
            while (a < col.size() || bidx < red.size()) {
                if (bidx == red.size() || (a < col.size() && col[a].first < red[bidx].first)) {
                    out.push_back(col[a++]);
                } else if (a == col.size() || red[bidx].first < col[a].first) {
                    out.emplace_back(red[bidx].first, -f * red[bidx].second);
                    ++bidx;
                } else {
                    Rat v = col[a].second - f * red[bidx].second;
                    if (v != 0) out.emplace_back(col[a].first, v);
                    ++a;
                    ++bidx;
                }
            }
            col = std::move(out);
        }
    }
    return rk;
}

bool all_diffs_zero(const LBComplex& c) {
    for (int i = c.lo; i < c.hi(); ++i)
        if (!c.diff(i).is_zero()) return false;
    return true;
}

// #{ f in Z^{m+1} : sum f = T, 0 <= f_k <= E-1 } by inclusion-exclusion.
long long bounded_count(int m, int T, int E) {
    if (T < 0) return 0;
    Int total = 0;
    for (int jj = 0; jj <= m + 1; ++jj) {
        int rem = T - jj * E;
        if (rem < 0) break;
        Int term = cohp::binomial(Int(rem) + m, m) * cohp::binomial(Int(m) + 1, jj);
        total += (jj % 2 == 0) ? term : -term;
    }
    return static_cast<long long>(total);
}

std::map<int, long long> dims_split_path(const LBComplex& c, int j, int E) {
    std::map<int, long long> h;
    int m = c.m;
    for (int i = c.lo; i <= c.hi(); ++i)
        for (int d0 : c.twists(i)) {
            int d = d0 + j;
            if (d >= 0) h[i] += static_cast<long long>(cohp::binomial(Int(d) + m, m));
            long long neg = bounded_count(m, -d - (m + 1), E);
            if (neg) h[i + m] += neg;
        }
    for (auto it = h.begin(); it != h.end();)
        it = (it->second == 0) ? h.erase(it) : std::next(it);
    return h;
}

std::map<int, long long> dims_general_path(const LBComplex& c, int j, int E) {
    LBComplex cj = twist(c, j);
    Basis b = enumerate_basis(cj, 0, E);
    int tlo = b.tlo, thi = tlo + static_cast<int>(b.elems.size()) - 1;
    std::map<int, long long> ranks;
    for (int t = tlo; t <= thi; ++t)
        ranks[t] = sparse_rank(differential_columns(cj, 0, b, t));
    std::map<int, long long> h;
    for (int t = tlo; t <= thi; ++t) {
        long long v = b.dim(t) - ranks[t] - (t > tlo ? ranks[t - 1] : 0);
        if (v != 0) h[t] = v;
    }
    return h;
}

std::map<int, long long> dims_at(const LBComplex& c, int j, int E) {
    if (all_diffs_zero(c)) return dims_split_path(c, j, E);
    return dims_general_path(c, j, E);
}

bool euler_certificate(const LBComplex& c, int j, const std::map<int, long long>& h) {
    Rat lhs = 0;
    for (auto& [t, v] : h) lhs += ((t % 2 + 2) % 2 == 0 ? Rat(v) : Rat(-v));
    Rat rhs = 0;
    for (int i = c.lo; i <= c.hi(); ++i) {
        Rat sign = ((i % 2 + 2) % 2 == 0) ? 1 : -1;
        for (int d : c.twists(i)) rhs += sign * cohp::hilbert_chi(c.m, d + j);
    }
    return lhs == rhs;
}

} // namespace

int cech_floor_start(const LBComplex& c, int j) {
    int e0 = 1;
    for (int i = c.lo; i <= c.hi(); ++i)
        for (int d : c.twists(i)) e0 = std::max(e0, -(d + j) - c.m);
    return e0;
}

RgammaResult rgamma(const LBComplex& c, int j, const RgammaOptions& opts) {
    require_valid(c, "rgamma");
    RgammaResult res;
    if (c.empty()) {
        res.e_used = 1;
        res.stabilized = true;
        res.euler_ok = true;
        return res;
    }
    if (c.m < 0) throw std::invalid_argument("rgamma: complex over empty space");
    int e0 = std::min(cech_floor_start(c, j), std::max(1, opts.e_cap));
    auto prev = dims_at(c, j, e0);
    for (int E = e0; E < opts.e_cap; ++E) {
        auto next = dims_at(c, j, E + 1);
        if (prev == next && euler_certificate(c, j, prev)) {
            res.h = std::move(next);
            res.e_used = E + 1;
            res.stabilized = true;
            res.euler_ok = true;
            return res;
        }
        prev = std::move(next);
    }
    res.h = std::move(prev);
    res.e_used = opts.e_cap;
    res.stabilized = false;
    res.euler_ok = euler_certificate(c, j, res.h);
    std::ostringstream os;
    os << "rgamma did not stabilize below the floor cap E = " << opts.e_cap
       << " (twist offset j = " << j << ", euler certificate "
       << (res.euler_ok ? "holds" : "fails") << ")";
    res.diagnostic = os.str();
    return res;
}

bool is_zero_object(const LBComplex& c, const RgammaOptions& opts) {
    if (c.empty()) return true;
    for (int j = 0; j <= c.m; ++j) {
        RgammaResult r = rgamma(c, j, opts);
        if (!r.stabilized) throw std::runtime_error("is_zero_object: " + r.diagnostic);
        if (!r.h.empty()) return false;
    }
    return true;
}

bool is_equivalence(const LBMap& f, const RgammaOptions& opts) {
    require_valid(f, "is_equivalence");
    return is_zero_object(cone_lb(f), opts);
}

std::map<int, long long> rhom_dims(const LBComplex& f, const LBComplex& g,
                                   const RgammaOptions& opts) {
    if (f.m != g.m) throw std::invalid_argument("rhom_dims: different projective spaces");
    RgammaResult r = rgamma(tensor(sheaf_dual(f), g), 0, opts);
    if (!r.stabilized) throw std::runtime_error("rhom_dims: " + r.diagnostic);
    return r.h;
}

RationalChainComplex cech_complex(const LBComplex& c, int j, int E) {
    if (c.empty()) return RationalChainComplex();
    LBComplex cj = twist(c, j);
    Basis b = enumerate_basis(cj, 0, E);
    int tlo = b.tlo, thi = tlo + static_cast<int>(b.elems.size()) - 1;
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int t = tlo; t <= thi; ++t) dims.push_back(static_cast<std::size_t>(b.dim(t)));
    for (int t = tlo; t < thi; ++t) {
        auto cols = differential_columns(cj, 0, b, t);
        RatMatrix m(static_cast<std::size_t>(b.dim(t + 1)), cols.size());
        for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (auto& [r, v] : cols[ci]) m.at(static_cast<std::size_t>(r), ci) = v;
        diffs.push_back(std::move(m));
    }
    return RationalChainComplex(tlo, std::move(dims), std::move(diffs));
}

exactalg::ComplexMap cech_map(const LBMap& f, int j, int E) {
    require_valid(f, "cech_map");
    LBComplex sj = twist(f.source, j), tj = twist(f.target, j);
    RationalChainComplex sc = cech_complex(f.source, j, E);
    RationalChainComplex tc = cech_complex(f.target, j, E);
    Basis sb = enumerate_basis(sj, 0, E);
    Basis tb = enumerate_basis(tj, 0, E);
    std::map<int, RatMatrix> comps;
    for (int t = sc.lo(); t <= sc.hi(); ++t) {
        RatMatrix m(tc.dim(t), sc.dim(t));
        if (t >= sb.tlo && t - sb.tlo < static_cast<int>(sb.elems.size())) {
            const auto& lvl = sb.elems[static_cast<std::size_t>(t - sb.tlo)];
            for (int ci = 0; ci < static_cast<int>(lvl.size()); ++ci) {
                const Key& k = lvl[static_cast<std::size_t>(ci)];
                PolyMat fc = f.component(k.i);
                for (std::size_t s2 = 0; s2 < fc.rows; ++s2) {
                    const HomogPoly& poly = fc.at(s2, static_cast<std::size_t>(k.s));
                    if (poly.is_zero()) continue;
                    for (const auto& [exp, coef] : poly.terms()) {
                        Exponents e2 = k.e;
                        for (std::size_t v = 0; v < e2.size(); ++v) e2[v] += exp[v];
                        Key tgt{k.i, static_cast<int>(s2), k.imask, e2};
                        int r = tb.find(t, tgt);
                        if (r >= 0)
                            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(ci)) += coef;
                    }
                }
            }
        }
        comps.emplace(t, std::move(m));
    }
    return exactalg::ComplexMap(std::move(sc), std::move(tc), std::move(comps));
}

} // namespace homcat::lbcx
