#include "homcat/chain.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <stdexcept>

namespace homcat::exactalg {

using nlohmann::json;

RationalChainComplex::RationalChainComplex(int lo, std::vector<std::size_t> dims,
                                           std::vector<RatMatrix> diffs)
    : lo_(lo), hi_(lo + static_cast<int>(dims.size()) - 1), dims_(std::move(dims)),
      diffs_(std::move(diffs)) {
    if (dims_.empty()) { lo_ = 0; hi_ = -1; return; }
    if (diffs_.size() + 1 != dims_.size())
        throw std::invalid_argument("RationalChainComplex: need one differential per adjacent pair");
    check();
}

RationalChainComplex RationalChainComplex::skyscraper(int degree, std::size_t dim) {
    return RationalChainComplex(degree, {dim}, {});
}

void RationalChainComplex::check() const {
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != dims_[k + 1] || diffs_[k].cols() != dims_[k])
            throw std::invalid_argument("RationalChainComplex: differential shape mismatch");
        if (k + 1 < diffs_.size() && !(diffs_[k + 1] * diffs_[k]).is_zero())
            throw std::invalid_argument("RationalChainComplex: d o d != 0");
    }
}

std::size_t RationalChainComplex::dim(int i) const {
    if (i < lo_ || i > hi_) return 0;
    return dims_[static_cast<std::size_t>(i - lo_)];
}

RatMatrix RationalChainComplex::diff(int i) const {
    if (i < lo_ || i >= hi_) return RatMatrix(dim(i + 1), dim(i));
    return diffs_[static_cast<std::size_t>(i - lo_)];
}

long long RationalChainComplex::euler_char() const {
    long long chi = 0;
    for (int i = lo_; i <= hi_; ++i)
        chi += (((i % 2) + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(i));
    return chi;
}

bool RationalChainComplex::operator==(const RationalChainComplex& o) const {
    int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
    for (int i = a; i <= b; ++i) {
        if (dim(i) != o.dim(i)) return false;
        if (!(diff(i) == o.diff(i))) return false;
    }
    return true;
}

json RationalChainComplex::to_json() const {
    json j;
    j["range"] = {lo_, hi_};
    json dims = json::object(), diffs = json::object();
    for (int i = lo_; i <= hi_; ++i) dims[std::to_string(i)] = dim(i);
    for (int i = lo_; i < hi_; ++i) {
        RatMatrix d = diff(i);
        json rows = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(rat_to_string(d.at(r, c)));
            rows.push_back(std::move(row));
        }
        diffs[std::to_string(i)] = std::move(rows);
    }
    j["dims"] = std::move(dims);
    j["diffs"] = std::move(diffs);
    return j;
}

RationalChainComplex RationalChainComplex::from_json(const json& j) {
    if (!j.contains("range") || !j["range"].is_array() || j["range"].size() != 2)
        throw std::invalid_argument("complex JSON: missing range [lo,hi]");
    int lo = j["range"][0].get<int>(), hi = j["range"][1].get<int>();
    if (lo > hi) return RationalChainComplex();
    std::vector<std::size_t> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    for (auto& [k, v] : j.at("dims").items()) {
        int i = std::stoi(k);
        if (i < lo || i > hi) throw std::invalid_argument("complex JSON: dim degree out of range");
        dims[static_cast<std::size_t>(i - lo)] = v.get<std::size_t>();
    }
    std::vector<RatMatrix> diffs;
    for (int i = lo; i < hi; ++i) {
        RatMatrix d(dims[static_cast<std::size_t>(i - lo + 1)], dims[static_cast<std::size_t>(i - lo)]);
        auto key = std::to_string(i);
        if (j.contains("diffs") && j["diffs"].contains(key)) {
            const json& rows = j["diffs"][key];
            if (rows.size() != d.rows()) throw std::invalid_argument("complex JSON: differential row count");
            for (std::size_t r = 0; r < d.rows(); ++r) {
                if (rows[r].size() != d.cols()) throw std::invalid_argument("complex JSON: differential col count");
                for (std::size_t c = 0; c < d.cols(); ++c)
                    d.at(r, c) = rat_from_string(rows[r][c].get<std::string>());
            }
        }
        diffs.push_back(std::move(d));
    }
    return RationalChainComplex(lo, std::move(dims), std::move(diffs));
}

ComplexMap::ComplexMap(RationalChainComplex src, RationalChainComplex tgt,
                       std::map<int, RatMatrix> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
    int a = std::min(source.lo(), target.lo()), b = std::max(source.hi(), target.hi());
    for (int i = a; i <= b; ++i) {
        RatMatrix fi = component(i);
        if (fi.rows() != target.dim(i) || fi.cols() != source.dim(i))
            throw std::invalid_argument("ComplexMap: component shape mismatch");
        // d_T f_i = f_{i+1} d_S
        if (!(target.diff(i) * fi - component(i + 1) * source.diff(i)).is_zero())
            throw std::invalid_argument("ComplexMap: does not commute with differentials");
    }
}

RatMatrix ComplexMap::component(int i) const {
    auto it = components.find(i);
    if (it != components.end()) return it->second;
    return RatMatrix(target.dim(i), source.dim(i));
}

ComplexMap ComplexMap::zero(const RationalChainComplex& src, const RationalChainComplex& tgt) {
    return ComplexMap(src, tgt, {});
}

ComplexMap ComplexMap::identity(const RationalChainComplex& c) {
    std::map<int, RatMatrix> comps;
    for (int i = c.lo(); i <= c.hi(); ++i)
        comps.emplace(i, RatMatrix::identity(c.dim(i)));
    return ComplexMap(c, c, std::move(comps));
}

CohomologySpace cohomology(const RationalChainComplex& c, int i) {
    CohomologySpace h;
    auto rki_out = rank_kernel_image(c.diff(i));
    auto rki_in = rank_kernel_image(c.diff(i - 1));
    std::size_t zdim = rki_out.kernel.size();
    std::size_t bdim = rki_in.rank;
    if (zdim < bdim) throw std::logic_error("cohomology: image not inside kernel?");
    h.dim = zdim - bdim;
    if (h.dim == 0) return h;

    // Extend the image basis to a basis of the kernel; greedy rank growth.
    std::size_t n = c.dim(i);
    std::vector<std::vector<Rat>> cols = rki_in.image;
    RatMatrix probe(n, bdim + h.dim);
    std::size_t filled = 0;
    for (const auto& v : cols) {
        for (std::size_t r = 0; r < n; ++r) probe.at(r, filled) = v[r];
        ++filled;
    }
    std::size_t cur_rank = bdim;
    for (const auto& z : rki_out.kernel) {
        if (h.basis.size() == h.dim) break;
        for (std::size_t r = 0; r < n; ++r) probe.at(r, filled) = z[r];
        RatMatrix test(n, filled + 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t cc = 0; cc <= filled; ++cc) test.at(r, cc) = probe.at(r, cc);
        if (rank(test) > cur_rank) {
            ++cur_rank;
            ++filled;
            h.basis.push_back(z);
        }
    }
    if (h.basis.size() != h.dim) throw std::logic_error("cohomology: failed to lift basis");
    return h;
}

std::map<int, std::size_t> cohomology_dims(const RationalChainComplex& c) {
    std::map<int, std::size_t> out;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        std::size_t ki = c.dim(i) - rank(c.diff(i));
        std::size_t bi = rank(c.diff(i - 1));
        if (ki > bi) out[i] = ki - bi;
    }
    return out;
}

RationalChainComplex cone(const ComplexMap& f) {
    const auto& s = f.source;
    const auto& t = f.target;
    if (s.empty() && t.empty()) return RationalChainComplex();
    int lo = std::min(s.empty() ? t.lo() : s.lo() - 1, t.empty() ? s.lo() - 1 : t.lo());
    int hi = std::max(s.empty() ? t.hi() : s.hi() - 1, t.empty() ? s.hi() - 1 : t.hi());
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(s.dim(i + 1) + t.dim(i));
    for (int i = lo; i < hi; ++i) {
        std::size_t sr = s.dim(i + 2), tr = t.dim(i + 1);
        std::size_t sc = s.dim(i + 1), tc = t.dim(i);
        RatMatrix d(sr + tr, sc + tc);
        RatMatrix ds = s.diff(i + 1), dt = t.diff(i), fc = f.component(i + 1);
        for (std::size_t r = 0; r < sr; ++r)
            for (std::size_t c = 0; c < sc; ++c) d.at(r, c) = -ds.at(r, c);
        for (std::size_t r = 0; r < tr; ++r) {
            for (std::size_t c = 0; c < sc; ++c) d.at(sr + r, c) = fc.at(r, c);
            for (std::size_t c = 0; c < tc; ++c) d.at(sr + r, sc + c) = dt.at(r, c);
        }
        diffs.push_back(std::move(d));
    }
    return RationalChainComplex(lo, std::move(dims), std::move(diffs));
}

RationalChainComplex shift(const RationalChainComplex& c, int k) {
    if (c.empty()) return c;
    int lo = c.lo() - k, hi = c.hi() - k;
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(c.dim(i + k));
    for (int i = lo; i < hi; ++i) {
        RatMatrix d = c.diff(i + k);
        diffs.push_back((k % 2 == 0) ? d : -d);
    }
    return RationalChainComplex(lo, std::move(dims), std::move(diffs));
}

RationalChainComplex hom_complex(const RationalChainComplex& c, const RationalChainComplex& d) {
    if (c.empty() || d.empty()) return RationalChainComplex();
    int klo = d.lo() - c.hi(), khi = d.hi() - c.lo();

    // Basis of Hom^k: blocks by source degree i, each block row-major (r, col).
    auto block_dims = [&](int k) {
        std::vector<std::pair<int, std::size_t>> blocks;
        for (int i = c.lo(); i <= c.hi(); ++i) {
            std::size_t sz = c.dim(i) * d.dim(i + k);
            if (sz) blocks.emplace_back(i, sz);
        }
        return blocks;
    };
    auto offset_of = [&](const std::vector<std::pair<int, std::size_t>>& blocks, int i) {
        std::size_t off = 0;
        for (auto& [bi, sz] : blocks) {
            if (bi == i) return off;
            off += sz;
        }
        return static_cast<std::size_t>(-1);
    };

    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int k = klo; k <= khi; ++k) {
        std::size_t total = 0;
        for (auto& [i, sz] : block_dims(k)) total += sz;
        dims.push_back(total);
    }
    for (int k = klo; k < khi; ++k) {
        auto src_blocks = block_dims(k);
        auto tgt_blocks = block_dims(k + 1);
        std::size_t sdim = dims[static_cast<std::size_t>(k - klo)];
        std::size_t tdim = dims[static_cast<std::size_t>(k - klo + 1)];
        RatMatrix m(tdim, sdim);
        bool odd = ((k % 2) + 2) % 2 == 1;
        std::size_t soff = 0;
        for (auto& [i, sz] : src_blocks) {
            std::size_t nc = c.dim(i), nd = d.dim(i + k);
            RatMatrix dd = d.diff(i + k);   // d.dim(i+k+1) x nd
            RatMatrix dc = c.diff(i - 1);   // nc x c.dim(i-1)
            // post-composition d_D o phi: lands in block i of Hom^{k+1}
            std::size_t t_post = offset_of(tgt_blocks, i);
            if (t_post != static_cast<std::size_t>(-1)) {
                std::size_t nd2 = d.dim(i + k + 1);
                for (std::size_t r = 0; r < nd; ++r)
                    for (std::size_t col = 0; col < nc; ++col)
                        for (std::size_t r2 = 0; r2 < nd2; ++r2)
                            if (dd.at(r2, r) != 0)
                                m.at(t_post + r2 * nc + col, soff + r * nc + col) += dd.at(r2, r);
            }
            // pre-composition -(-1)^k phi o d_C: lands in block i-1
            std::size_t t_pre = offset_of(tgt_blocks, i - 1);
            if (t_pre != static_cast<std::size_t>(-1)) {
                std::size_t nc2 = c.dim(i - 1);
                Rat sign = odd ? Rat(1) : Rat(-1); // -(-1)^k
                for (std::size_t r = 0; r < nd; ++r)
                    for (std::size_t col = 0; col < nc; ++col)
                        for (std::size_t col2 = 0; col2 < nc2; ++col2)
                            if (dc.at(col, col2) != 0)
                                m.at(t_pre + r * nc2 + col2, soff + r * nc + col) += sign * dc.at(col, col2);
            }
            soff += sz;
        }
        diffs.push_back(std::move(m));
    }
    return RationalChainComplex(klo, std::move(dims), std::move(diffs));
}

namespace {

struct HomLayout {
    const RationalChainComplex& c;
    const RationalChainComplex& d;
    std::size_t offset(int k, int i) const { // block of source degree i inside Hom^k
        std::size_t off = 0;
        for (int ii = c.lo(); ii < i; ++ii) off += c.dim(ii) * d.dim(ii + k);
        return off;
    }
};

} // namespace

ComplexMap hom_postcompose(const RationalChainComplex& c, const ComplexMap& g) {
    RationalChainComplex src = hom_complex(c, g.source);
    RationalChainComplex tgt = hom_complex(c, g.target);
    HomLayout ls{c, g.source}, lt{c, g.target};
    std::map<int, RatMatrix> comps;
    for (int k = src.lo(); k <= src.hi(); ++k) {
        RatMatrix m(tgt.dim(k), src.dim(k));
        for (int i = c.lo(); i <= c.hi(); ++i) {
            std::size_t nc = c.dim(i);
            std::size_t nd = g.source.dim(i + k), nd2 = g.target.dim(i + k);
            if (!nc || !nd || !nd2) continue;
            RatMatrix gc = g.component(i + k);
            std::size_t so = ls.offset(k, i), to = lt.offset(k, i);
            for (std::size_t r2 = 0; r2 < nd2; ++r2)
                for (std::size_t r = 0; r < nd; ++r)
                    if (gc.at(r2, r) != 0)
                        for (std::size_t col = 0; col < nc; ++col)
                            m.at(to + r2 * nc + col, so + r * nc + col) += gc.at(r2, r);
        }
        comps.emplace(k, std::move(m));
    }
    return ComplexMap(std::move(src), std::move(tgt), std::move(comps));
}

ComplexMap hom_precompose(const ComplexMap& f, const RationalChainComplex& d) {
    RationalChainComplex src = hom_complex(f.target, d);
    RationalChainComplex tgt = hom_complex(f.source, d);
    HomLayout ls{f.target, d}, lt{f.source, d};
    std::map<int, RatMatrix> comps;
    for (int k = src.lo(); k <= src.hi(); ++k) {
        RatMatrix m(tgt.dim(k), src.dim(k));
        for (int i = f.source.lo(); i <= f.source.hi(); ++i) {
            std::size_t nc = f.target.dim(i), nc2 = f.source.dim(i);
            std::size_t nd = d.dim(i + k);
            if (!nc || !nc2 || !nd) continue;
            RatMatrix fc = f.component(i);
            std::size_t so = ls.offset(k, i), to = lt.offset(k, i);
            for (std::size_t r = 0; r < nd; ++r)
                for (std::size_t col = 0; col < nc; ++col)
                    for (std::size_t col2 = 0; col2 < nc2; ++col2)
                        if (fc.at(col, col2) != 0)
                            m.at(to + r * nc2 + col2, so + r * nc + col) += fc.at(col, col2);
        }
        comps.emplace(k, std::move(m));
    }
    return ComplexMap(std::move(src), std::move(tgt), std::move(comps));
}

bool is_acyclic(const RationalChainComplex& c) {
    return cohomology_dims(c).empty();
}

bool is_quasi_iso(const ComplexMap& f) {
    return is_acyclic(cone(f));
}

RationalChainComplex direct_sum(const RationalChainComplex& a, const RationalChainComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(a.dim(i) + b.dim(i));
    for (int i = lo; i < hi; ++i) {
        RatMatrix d(a.dim(i + 1) + b.dim(i + 1), a.dim(i) + b.dim(i));
        RatMatrix da = a.diff(i), db = b.diff(i);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t c = 0; c < da.cols(); ++c) d.at(r, c) = da.at(r, c);
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t c = 0; c < db.cols(); ++c) d.at(da.rows() + r, da.cols() + c) = db.at(r, c);
        diffs.push_back(std::move(d));
    }
    return RationalChainComplex(lo, std::move(dims), std::move(diffs));
}

namespace {

struct TensorIndex {
    // Basis of (A (x) B)^t: pairs (p, q=t-p), p ascending, entry index ia*dimB(q)+ib.
    static std::size_t dim(const RationalChainComplex& a, const RationalChainComplex& b, int t) {
        std::size_t n = 0;
        for (int p = a.lo(); p <= a.hi(); ++p) n += a.dim(p) * b.dim(t - p);
        return n;
    }
    static std::size_t offset(const RationalChainComplex& a, const RationalChainComplex& b, int t, int p) {
        std::size_t off = 0;
        for (int pp = a.lo(); pp < p; ++pp) off += a.dim(pp) * b.dim(t - pp);
        return off;
    }
};

} // namespace

RationalChainComplex tensor(const RationalChainComplex& a, const RationalChainComplex& b) {
    if (a.empty() || b.empty()) return RationalChainComplex();
    int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
    for (int t = lo; t <= hi; ++t) dims.push_back(TensorIndex::dim(a, b, t));
    for (int t = lo; t < hi; ++t) {
        RatMatrix m(TensorIndex::dim(a, b, t + 1), TensorIndex::dim(a, b, t));
        for (int p = a.lo(); p <= a.hi(); ++p) {
            int q = t - p;
            std::size_t na = a.dim(p), nb = b.dim(q);
            if (na == 0 || nb == 0) continue;
            std::size_t soff = TensorIndex::offset(a, b, t, p);
            // d_a (x) id : (p,q) -> (p+1,q)
            RatMatrix da = a.diff(p);
            if (a.dim(p + 1)) {
                std::size_t toff = TensorIndex::offset(a, b, t + 1, p + 1);
                for (std::size_t r = 0; r < da.rows(); ++r)
                    for (std::size_t c = 0; c < na; ++c)
                        if (da.at(r, c) != 0)
                            for (std::size_t ib = 0; ib < nb; ++ib)
                                m.at(toff + r * nb + ib, soff + c * nb + ib) += da.at(r, c);
            }
            // (-1)^p id (x) d_b : (p,q) -> (p,q+1)
            RatMatrix db = b.diff(q);
            if (b.dim(q + 1)) {
                std::size_t toff = TensorIndex::offset(a, b, t + 1, p);
                Rat sign = (((p % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
                std::size_t nb2 = b.dim(q + 1);
                for (std::size_t ia = 0; ia < na; ++ia)
                    for (std::size_t r = 0; r < nb2; ++r)
                        for (std::size_t c = 0; c < nb; ++c)
                            if (db.at(r, c) != 0)
                                m.at(toff + ia * nb2 + r, soff + ia * nb + c) += sign * db.at(r, c);
            }
        }
        diffs.push_back(std::move(m));
    }
    return RationalChainComplex(lo, std::move(dims), std::move(diffs));
}

ComplexMap tensor_map(const ComplexMap& f, const ComplexMap& g) {
    RationalChainComplex src = tensor(f.source, g.source);
    RationalChainComplex tgt = tensor(f.target, g.target);
    std::map<int, RatMatrix> comps;
    for (int t = src.lo(); t <= src.hi(); ++t) {
        RatMatrix m(tgt.dim(t), src.dim(t));
        for (int p = f.source.lo(); p <= f.source.hi(); ++p) {
            int q = t - p;
            std::size_t na = f.source.dim(p), nb = g.source.dim(q);
            if (na == 0 || nb == 0) continue;
            std::size_t na2 = f.target.dim(p), nb2 = g.target.dim(q);
            if (na2 == 0 || nb2 == 0) continue;
            std::size_t soff = TensorIndex::offset(f.source, g.source, t, p);
            std::size_t toff = TensorIndex::offset(f.target, g.target, t, p);
            RatMatrix fp = f.component(p), gq = g.component(q);
            for (std::size_t r1 = 0; r1 < na2; ++r1)
                for (std::size_t c1 = 0; c1 < na; ++c1)
                    if (fp.at(r1, c1) != 0)
                        for (std::size_t r2 = 0; r2 < nb2; ++r2)
                            for (std::size_t c2 = 0; c2 < nb; ++c2)
                                if (gq.at(r2, c2) != 0)
                                    m.at(toff + r1 * nb2 + r2, soff + c1 * nb + c2) +=
                                        fp.at(r1, c1) * gq.at(r2, c2);
        }
        comps.emplace(t, std::move(m));
    }
    return ComplexMap(std::move(src), std::move(tgt), std::move(comps));
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
    std::map<int, RatMatrix> comps;
    int lo = std::min(f.source.lo(), g.target.lo());
    int hi = std::max(f.source.hi(), g.target.hi());
    for (int i = lo; i <= hi; ++i) comps.emplace(i, g.component(i) * f.component(i));
    return ComplexMap(f.source, g.target, std::move(comps));
}

ComplexMap shift_map(const ComplexMap& f, int k) {
    RationalChainComplex src = shift(f.source, k), tgt = shift(f.target, k);
    std::map<int, RatMatrix> comps;
    for (int i = src.lo(); i <= src.hi(); ++i) comps.emplace(i, f.component(i + k));
    return ComplexMap(std::move(src), std::move(tgt), std::move(comps));
}

} // namespace homcat::exactalg
