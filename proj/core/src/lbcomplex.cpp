#include "homcat/lbcomplex.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace homcat::lbcx {

using nlohmann::json;

bool PolyMat::is_zero() const {
    for (const auto& p : e)
        if (!p.is_zero()) return false;
    return true;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("PolyMat: shape mismatch in product");
    PolyMat r(rows, o.cols, nvars);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("PolyMat: shape mismatch in sum");
    PolyMat r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = r.e[i] + o.e[i];
    return r;
}

PolyMat PolyMat::operator-() const {
    PolyMat r = *this;
    for (auto& p : r.e) p = -p;
    return r;
}

PolyMat PolyMat::transposed() const {
    PolyMat r(cols, rows, nvars);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMat PolyMat::scaled(const Rat& k) const {
    PolyMat r = *this;
    for (auto& p : r.e) p = p.scaled(k);
    return r;
}

LBComplex LBComplex::line_bundle(int m, int d, int degree) {
    LBComplex c;
    c.m = m;
    c.lo = degree;
    c.terms = {{d}};
    return c;
}

std::vector<int> LBComplex::twists(int i) const {
    if (i < lo || i > hi()) return {};
    return terms[static_cast<std::size_t>(i - lo)];
}

PolyMat LBComplex::diff(int i) const {
    if (i >= lo && i < hi()) return diffs[static_cast<std::size_t>(i - lo)];
    return PolyMat(nsummands(i + 1), nsummands(i), m + 1);
}

Violation validate(const LBComplex& c) {
    Violation v;
    if (c.m >= 0 || c.empty()) {
        // shapes and grading first, then d^2
        if (!c.empty() && c.diffs.size() + 1 != c.terms.size()) {
            v.ok = false;
            v.message = "differential count does not match term count";
            return v;
        }
        for (int i = c.lo; i < c.hi(); ++i) {
            const PolyMat& d = c.diff(i);
            auto src = c.twists(i), tgt = c.twists(i + 1);
            if (d.rows != tgt.size() || d.cols != src.size()) {
                v.ok = false;
                std::ostringstream os;
                os << "differential at degree " << i << " has shape " << d.rows << "x" << d.cols
                   << ", expected " << tgt.size() << "x" << src.size();
                v.message = os.str();
                return v;
            }
            for (std::size_t r = 0; r < d.rows; ++r)
                for (std::size_t cc = 0; cc < d.cols; ++cc) {
                    const HomogPoly& p = d.at(r, cc);
                    if (p.is_zero()) continue;
                    if (p.nvars() != c.m + 1) {
                        v.ok = false;
                        v.message = "entry with wrong variable count at degree " + std::to_string(i);
                        return v;
                    }
                    int want = tgt[r] - src[cc];
                    if (p.degree() != want) {
                        v.ok = false;
                        std::ostringstream os;
                        os << "grading violation at degree " << i << ", entry (" << r << "," << cc
                           << "): degree " << p.degree() << ", expected " << want;
                        v.message = os.str();
                        return v;
                    }
                }
        }
        for (int i = c.lo; i + 1 < c.hi(); ++i) {
            if (!(c.diff(i + 1) * c.diff(i)).is_zero()) {
                v.ok = false;
                v.message = "d o d != 0 out of degree " + std::to_string(i);
                return v;
            }
        }
    } else if (!c.empty()) {
        v.ok = false;
        v.message = "complex over empty space must be zero";
    }
    return v;
}

void require_valid(const LBComplex& c, const std::string& what) {
    Violation v = validate(c);
    if (!v.ok) throw std::logic_error(what + ": " + v.message);
}

LBComplex twist(const LBComplex& c, int k) {
    LBComplex r = c;
    for (auto& ts : r.terms)
        for (auto& d : ts) d += k;
    return r;
}

LBComplex shift_lb(const LBComplex& c, int k) {
    LBComplex r = c;
    r.lo = c.lo - k;
    if (k % 2 != 0)
        for (auto& d : r.diffs) d = -d;
    return r;
}

namespace {

std::size_t tensor_offset(const LBComplex& a, const LBComplex& b, int t, int p) {
    std::size_t off = 0;
    for (int pp = a.lo; pp < p; ++pp) off += a.nsummands(pp) * b.nsummands(t - pp);
    return off;
}

} // namespace

LBComplex tensor(const LBComplex& a, const LBComplex& b) {
    if (a.m != b.m) throw std::invalid_argument("tensor: different projective spaces");
    LBComplex r;
    r.m = a.m;
    if (a.empty() || b.empty()) return LBComplex::zero(a.m);
    r.lo = a.lo + b.lo;
    int hi = a.hi() + b.hi();
    for (int t = r.lo; t <= hi; ++t) {
        std::vector<int> ts;
        for (int p = a.lo; p <= a.hi(); ++p)
            for (int da : a.twists(p))
                for (int db : b.twists(t - p)) ts.push_back(da + db);
        r.terms.push_back(std::move(ts));
    }
    int nv = a.m + 1;
    for (int t = r.lo; t < hi; ++t) {
        PolyMat m(r.nsummands(t + 1), r.nsummands(t), nv);
        for (int p = a.lo; p <= a.hi(); ++p) {
            int q = t - p;
            std::size_t na = a.nsummands(p), nb = b.nsummands(q);
            if (na == 0 || nb == 0) continue;
            std::size_t soff = tensor_offset(a, b, t, p);
            PolyMat da = a.diff(p);
            if (a.nsummands(p + 1)) {
                std::size_t toff = tensor_offset(a, b, t + 1, p + 1);
                for (std::size_t rr = 0; rr < da.rows; ++rr)
                    for (std::size_t cc = 0; cc < na; ++cc)
                        if (!da.at(rr, cc).is_zero())
                            for (std::size_t ib = 0; ib < nb; ++ib)
                                m.at(toff + rr * nb + ib, soff + cc * nb + ib) =
                                    m.at(toff + rr * nb + ib, soff + cc * nb + ib) + da.at(rr, cc);
            }
            PolyMat db = b.diff(q);
            if (b.nsummands(q + 1)) {
                std::size_t toff = tensor_offset(a, b, t + 1, p);
                std::size_t nb2 = b.nsummands(q + 1);
                bool neg = ((p % 2) + 2) % 2 == 1;
                for (std::size_t ia = 0; ia < na; ++ia)
                    for (std::size_t rr = 0; rr < nb2; ++rr)
                        for (std::size_t cc = 0; cc < nb; ++cc)
                            if (!db.at(rr, cc).is_zero()) {
                                HomogPoly x = neg ? -db.at(rr, cc) : db.at(rr, cc);
                                m.at(toff + ia * nb2 + rr, soff + ia * nb + cc) =
                                    m.at(toff + ia * nb2 + rr, soff + ia * nb + cc) + x;
                            }
            }
        }
        r.diffs.push_back(std::move(m));
    }
    return r;
}

LBComplex sheaf_dual(const LBComplex& c) {
    LBComplex r;
    r.m = c.m;
    if (c.empty()) return LBComplex::zero(c.m);
    r.lo = -c.hi();
    int hi = -c.lo;
    for (int i = r.lo; i <= hi; ++i) {
        std::vector<int> ts;
        for (int d : c.twists(-i)) ts.push_back(-d);
        r.terms.push_back(std::move(ts));
    }
    auto eps = [](int i) {
        long long t = (static_cast<long long>(i) * (i + 1)) / 2;
        return ((t % 2) + 2) % 2 == 0;
    };
    for (int i = r.lo; i < hi; ++i) {
        PolyMat d = c.diff(-i - 1).transposed();
        r.diffs.push_back(eps(i) ? d : -d);
    }
    return r;
}

LBComplex direct_sum(const LBComplex& a, const LBComplex& b) {
    if (a.m != b.m) throw std::invalid_argument("direct_sum: different projective spaces");
    if (a.empty()) return b;
    if (b.empty()) return a;
    LBComplex r;
    r.m = a.m;
    r.lo = std::min(a.lo, b.lo);
    int hi = std::max(a.hi(), b.hi());
    for (int i = r.lo; i <= hi; ++i) {
        std::vector<int> ts = a.twists(i);
        for (int d : b.twists(i)) ts.push_back(d);
        r.terms.push_back(std::move(ts));
    }
    for (int i = r.lo; i < hi; ++i) {
        PolyMat m(r.nsummands(i + 1), r.nsummands(i), a.m + 1);
        PolyMat da = a.diff(i), db = b.diff(i);
        for (std::size_t rr = 0; rr < da.rows; ++rr)
            for (std::size_t cc = 0; cc < da.cols; ++cc) m.at(rr, cc) = da.at(rr, cc);
        for (std::size_t rr = 0; rr < db.rows; ++rr)
            for (std::size_t cc = 0; cc < db.cols; ++cc)
                m.at(da.rows + rr, da.cols + cc) = db.at(rr, cc);
        r.diffs.push_back(std::move(m));
    }
    return r;
}

exactalg::RationalChainComplex eval_at_point(const LBComplex& c, const std::vector<Rat>& point) {
    if (c.empty()) return exactalg::RationalChainComplex();
    std::vector<std::size_t> dims;
    std::vector<exactalg::RatMatrix> diffs;
    for (int i = c.lo; i <= c.hi(); ++i) dims.push_back(c.nsummands(i));
    for (int i = c.lo; i < c.hi(); ++i) {
        PolyMat d = c.diff(i);
        exactalg::RatMatrix m(d.rows, d.cols);
        for (std::size_t r = 0; r < d.rows; ++r)
            for (std::size_t cc = 0; cc < d.cols; ++cc)
                if (!d.at(r, cc).is_zero()) m.at(r, cc) = d.at(r, cc).eval(point);
        diffs.push_back(std::move(m));
    }
    return exactalg::RationalChainComplex(c.lo, std::move(dims), std::move(diffs));
}

PolyMat LBMap::component(int i) const {
    auto it = components.find(i);
    if (it != components.end()) return it->second;
    return PolyMat(target.nsummands(i), source.nsummands(i), source.m + 1);
}

Violation validate_map(const LBMap& f) {
    Violation v = validate(f.source);
    if (!v.ok) return v;
    v = validate(f.target);
    if (!v.ok) return v;
    if (f.source.m != f.target.m) {
        v.ok = false;
        v.message = "map between different projective spaces";
        return v;
    }
    int lo = std::min(f.source.lo, f.target.lo) - 1;
    int hi = std::max(f.source.hi(), f.target.hi()) + 1;
    for (int i = lo; i <= hi; ++i) {
        PolyMat fi = f.component(i);
        auto src = f.source.twists(i), tgt = f.target.twists(i);
        if (fi.rows != tgt.size() || fi.cols != src.size()) {
            v.ok = false;
            v.message = "component shape mismatch at degree " + std::to_string(i);
            return v;
        }
        for (std::size_t r = 0; r < fi.rows; ++r)
            for (std::size_t c = 0; c < fi.cols; ++c) {
                const HomogPoly& p = fi.at(r, c);
                if (!p.is_zero() && p.degree() != tgt[r] - src[c]) {
                    v.ok = false;
                    v.message = "component grading violation at degree " + std::to_string(i);
                    return v;
                }
            }
    }
    for (int i = lo; i < hi; ++i) {
        PolyMat lhs = f.target.diff(i) * f.component(i);
        PolyMat rhs = f.component(i + 1) * f.source.diff(i);
        if (!(lhs + (-rhs)).is_zero()) {
            v.ok = false;
            v.message = "map does not commute with differentials at degree " + std::to_string(i);
            return v;
        }
    }
    return v;
}

void require_valid(const LBMap& f, const std::string& what) {
    Violation v = validate_map(f);
    if (!v.ok) throw std::logic_error(what + ": " + v.message);
}

LBMap identity_map(const LBComplex& c) {
    LBMap f;
    f.source = c;
    f.target = c;
    for (int i = c.lo; i <= c.hi(); ++i) {
        std::size_t n = c.nsummands(i);
        PolyMat m(n, n, c.m + 1);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = HomogPoly::constant(c.m + 1, 1);
        f.components.emplace(i, std::move(m));
    }
    return f;
}

LBMap zero_map(const LBComplex& src, const LBComplex& tgt) {
    LBMap f;
    f.source = src;
    f.target = tgt;
    return f;
}

LBMap dual_map(const LBMap& f) {
    LBMap r;
    r.source = sheaf_dual(f.target);
    r.target = sheaf_dual(f.source);
    for (int i = r.source.lo; i <= r.source.hi(); ++i) {
        PolyMat c = f.component(-i).transposed();
        r.components.emplace(i, std::move(c));
    }
    return r;
}

LBMap compose(const LBMap& g, const LBMap& f) {
    LBMap r;
    r.source = f.source;
    r.target = g.target;
    int lo = std::min(f.source.lo, g.target.lo);
    int hi = std::max(f.source.hi(), g.target.hi());
    for (int i = lo; i <= hi; ++i) r.components.emplace(i, g.component(i) * f.component(i));
    return r;
}

LBMap twist_map(const LBMap& f, int k) {
    LBMap r;
    r.source = twist(f.source, k);
    r.target = twist(f.target, k);
    r.components = f.components;
    return r;
}

LBMap shift_map(const LBMap& f, int k) {
    LBMap r;
    r.source = shift_lb(f.source, k);
    r.target = shift_lb(f.target, k);
    for (int i = r.source.lo; i <= r.source.hi(); ++i) {
        PolyMat c = f.component(i + k);
        r.components.emplace(i, std::move(c));
    }
    return r;
}

LBMap tensor_map_lb(const LBMap& f, const LBMap& g) {
    LBMap r;
    r.source = tensor(f.source, g.source);
    r.target = tensor(f.target, g.target);
    int nv = f.source.m + 1;
    for (int t = r.source.lo; t <= r.source.hi(); ++t) {
        PolyMat m(r.target.nsummands(t), r.source.nsummands(t), nv);
        for (int p = f.source.lo; p <= f.source.hi(); ++p) {
            int q = t - p;
            std::size_t na = f.source.nsummands(p), nb = g.source.nsummands(q);
            std::size_t na2 = f.target.nsummands(p), nb2 = g.target.nsummands(q);
            if (!na || !nb || !na2 || !nb2) continue;
            std::size_t soff = tensor_offset(f.source, g.source, t, p);
            std::size_t toff = tensor_offset(f.target, g.target, t, p);
            PolyMat fp = f.component(p), gq = g.component(q);
            for (std::size_t r1 = 0; r1 < na2; ++r1)
                for (std::size_t c1 = 0; c1 < na; ++c1)
                    if (!fp.at(r1, c1).is_zero())
                        for (std::size_t r2 = 0; r2 < nb2; ++r2)
                            for (std::size_t c2 = 0; c2 < nb; ++c2)
                                if (!gq.at(r2, c2).is_zero())
                                    m.at(toff + r1 * nb2 + r2, soff + c1 * nb + c2) =
                                        m.at(toff + r1 * nb2 + r2, soff + c1 * nb + c2) +
                                        fp.at(r1, c1) * gq.at(r2, c2);
        }
        r.components.emplace(t, std::move(m));
    }
    return r;
}

LBComplex cone_lb(const LBMap& f) {
    const LBComplex& s = f.source;
    const LBComplex& t = f.target;
    LBComplex r;
    r.m = s.m;
    if (s.empty() && t.empty()) return LBComplex::zero(s.m);
    int lo = s.empty() ? t.lo : (t.empty() ? s.lo - 1 : std::min(s.lo - 1, t.lo));
    int hi = s.empty() ? t.hi() : (t.empty() ? s.hi() - 1 : std::max(s.hi() - 1, t.hi()));
    r.lo = lo;
    for (int i = lo; i <= hi; ++i) {
        std::vector<int> ts = s.twists(i + 1);
        for (int d : t.twists(i)) ts.push_back(d);
        r.terms.push_back(std::move(ts));
    }
    int nv = s.m + 1;
    for (int i = lo; i < hi; ++i) {
        std::size_t sr = s.nsummands(i + 2), tr = t.nsummands(i + 1);
        std::size_t sc = s.nsummands(i + 1), tc = t.nsummands(i);
        PolyMat d(sr + tr, sc + tc, nv);
        PolyMat ds = s.diff(i + 1), dt = t.diff(i), fc = f.component(i + 1);
        for (std::size_t rr = 0; rr < sr; ++rr)
            for (std::size_t cc = 0; cc < sc; ++cc) d.at(rr, cc) = -ds.at(rr, cc);
        for (std::size_t rr = 0; rr < tr; ++rr) {
            for (std::size_t cc = 0; cc < sc; ++cc) d.at(sr + rr, cc) = fc.at(rr, cc);
            for (std::size_t cc = 0; cc < tc; ++cc) d.at(sr + rr, sc + cc) = dt.at(rr, cc);
        }
        r.diffs.push_back(std::move(d));
    }
    return r;
}

LBMap cone_inclusion(const LBMap& f) {
    LBComplex c = cone_lb(f);
    LBMap inc;
    inc.source = f.target;
    inc.target = c;
    int nv = f.source.m + 1;
    for (int i = c.lo; i <= c.hi(); ++i) {
        std::size_t so = f.source.nsummands(i + 1);
        std::size_t n = f.target.nsummands(i);
        PolyMat m(so + n, n, nv);
        for (std::size_t k = 0; k < n; ++k) m.at(so + k, k) = HomogPoly::constant(nv, 1);
        inc.components.emplace(i, std::move(m));
    }
    return inc;
}

LBMap cone_connecting(const LBMap& f) {
    LBComplex c = cone_lb(f);
    LBComplex s1 = shift_lb(f.source, 1);
    LBMap pr;
    pr.source = c;
    pr.target = s1;
    int nv = f.source.m + 1;
    for (int i = c.lo; i <= c.hi(); ++i) {
        std::size_t so = f.source.nsummands(i + 1);
        std::size_t tc = f.target.nsummands(i);
        PolyMat m(so, so + tc, nv);
        for (std::size_t k = 0; k < so; ++k) m.at(k, k) = HomogPoly::constant(nv, 1);
        pr.components.emplace(i, std::move(m));
    }
    return pr;
}

namespace {

json poly_to_json(const HomogPoly& p) {
    json o;
    o["deg"] = p.is_zero() ? 0 : p.degree();
    json coeffs = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::ostringstream key;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) key << ",";
            key << e[k];
        }
        coeffs[key.str()] = rat_to_string(c);
    }
    o["coeffs"] = std::move(coeffs);
    return o;
}

HomogPoly poly_from_json(const json& o, int nvars) {
    HomogPoly p(nvars);
    if (!o.contains("coeffs")) return p;
    for (auto& [key, val] : o["coeffs"].items()) {
        Exponents e;
        std::stringstream ss(key);
        std::string item;
        while (std::getline(ss, item, ',')) e.push_back(std::stoi(item));
        if (e.size() != static_cast<std::size_t>(nvars))
            throw std::invalid_argument("poly JSON: exponent arity mismatch");
        p.add_term(e, rat_from_string(val.get<std::string>()));
    }
    return p;
}

json polymat_to_json(const PolyMat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMat polymat_from_json(const json& rows, std::size_t nr, std::size_t nc, int nvars) {
    PolyMat m(nr, nc, nvars);
    if (rows.size() != nr) throw std::invalid_argument("matrix JSON: row count mismatch");
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = poly_from_json(rows[r][c], nvars);
    }
    return m;
}

} // namespace

json LBComplex::to_json() const {
    json j;
    j["m"] = m;
    j["range"] = {lo, hi()};
    json ts = json::object(), ds = json::object();
    for (int i = lo; i <= hi(); ++i) ts[std::to_string(i)] = twists(i);
    for (int i = lo; i < hi(); ++i) ds[std::to_string(i)] = polymat_to_json(diff(i));
    j["terms"] = std::move(ts);
    j["diffs"] = std::move(ds);
    return j;
}

LBComplex LBComplex::from_json(const json& j) {
    LBComplex c;
    if (!j.contains("m") || !j.contains("range"))
        throw std::invalid_argument("complex JSON: missing m or range");
    c.m = j["m"].get<int>();
    int lo = j["range"][0].get<int>(), hi = j["range"][1].get<int>();
    if (lo > hi) return c;
    c.lo = lo;
    c.terms.assign(static_cast<std::size_t>(hi - lo + 1), {});
    if (j.contains("terms"))
        for (auto& [k, v] : j["terms"].items()) {
            int i = std::stoi(k);
            if (i < lo || i > hi) throw std::invalid_argument("complex JSON: term degree out of range");
            c.terms[static_cast<std::size_t>(i - lo)] = v.get<std::vector<int>>();
        }
    for (int i = lo; i < hi; ++i) {
        std::size_t nr = c.nsummands(i + 1), nc = c.nsummands(i);
        auto key = std::to_string(i);
        if (j.contains("diffs") && j["diffs"].contains(key))
            c.diffs.push_back(polymat_from_json(j["diffs"][key], nr, nc, c.m + 1));
        else
            c.diffs.push_back(PolyMat(nr, nc, c.m + 1));
    }
    return c;
}

json LBMap::to_json() const {
    json j;
    j["source"] = source.to_json();
    j["target"] = target.to_json();
    json comps = json::object();
    int lo = std::min(source.lo, target.lo), hi = std::max(source.hi(), target.hi());
    for (int i = lo; i <= hi; ++i) {
        PolyMat c = component(i);
        if (c.rows && c.cols) comps[std::to_string(i)] = polymat_to_json(c);
    }
    j["components"] = std::move(comps);
    return j;
}

LBMap LBMap::from_json(const json& j) {
    LBMap f;
    f.source = LBComplex::from_json(j.at("source"));
    f.target = LBComplex::from_json(j.at("target"));
    if (j.contains("components"))
        for (auto& [k, v] : j["components"].items()) {
            int i = std::stoi(k);
            f.components.emplace(i, polymat_from_json(v, f.target.nsummands(i), f.source.nsummands(i),
                                                      f.source.m + 1));
        }
    return f;
}

} // namespace homcat::lbcx
