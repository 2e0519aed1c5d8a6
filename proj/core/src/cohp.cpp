#include "homcat/cohp.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcat::cohp {

Int binomial(Int n, int k) {
    if (k < 0) return 0;
    Int r = 1;
    for (int t = 1; t <= k; ++t) {
        r *= (n - (k - t));
        r /= t;
    }
    return r;
}

Int h_dim(int m, int i, int d) {
    if (m < 0) throw std::invalid_argument("h_dim: m must be >= 0");
    Int total = 0;
    if (i == 0 && d >= 0) total += binomial(Int(d) + m, m);
    if (i == m && d <= -m - 1) total += binomial(Int(-d) - 1, m);
    return total;
}

namespace {

// Enumerates exponent vectors with entries >= floor_each summing to total,
// lexicographic order.
void enumerate(int nvars, int total, int floor_each, LaurentMonomial& cur,
               std::vector<LaurentMonomial>& out) {
    if (nvars == 1) {
        if (total >= floor_each) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    int rest_min = floor_each * (nvars - 1);
    for (int e = floor_each; total - e >= rest_min; ++e) {
        cur.push_back(e);
        enumerate(nvars - 1, total - e, floor_each, cur, out);
        cur.pop_back();
    }
}

} // namespace

LineBundleCohBasis h_basis(int m, int i, int d) {
    LineBundleCohBasis b;
    b.m = m;
    b.d = d;
    b.i = i;
    LaurentMonomial cur;
    if (i == 0 && d >= 0) enumerate(m + 1, d, 0, cur, b.basis);
    if (i == m && d <= -m - 1) {
        // Entries all <= -1 summing to d; substitute e = -1 - f with f >= 0.
        std::vector<LaurentMonomial> pos;
        enumerate(m + 1, -d - (m + 1), 0, cur, pos);
        for (auto& f : pos) {
            LaurentMonomial e(f.size());
            for (std::size_t k = 0; k < f.size(); ++k) e[k] = -1 - f[k];
            b.basis.push_back(std::move(e));
        }
    }
    std::sort(b.basis.begin(), b.basis.end());
    return b;
}

Rat hilbert_chi(int m, int d) {
    // (d+1)(d+2)...(d+m) / m!
    Rat r = 1;
    for (int t = 1; t <= m; ++t) r *= Rat(d + t, t);
    return r;
}

CohClass cup_product(int m, int i, const CohClass& a, const CohClass& b) {
    CohClass out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            if (ea.size() != static_cast<std::size_t>(m + 1) || eb.size() != ea.size())
                throw std::invalid_argument("cup_product: wrong number of exponents");
            LaurentMonomial e(ea.size());
            bool has_nonneg = false;
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
                if (e[k] >= 0) has_nonneg = true;
            }
            if (i == m && m > 0 && has_nonneg) continue; // support rule in top degree
            Rat c = ca * cb;
            if (c == 0) continue;
            out[e] += c;
            if (out[e] == 0) out.erase(e);
        }
    return out;
}

exactalg::RatMatrix serre_pair(int m, int d) {
    if (d < 0) throw std::invalid_argument("serre_pair: d must be >= 0");
    auto b0 = h_basis(m, 0, d);
    auto bm = h_basis(m, m, -d - m - 1);
    exactalg::RatMatrix p(b0.basis.size(), bm.basis.size());
    for (std::size_t r = 0; r < b0.basis.size(); ++r)
        for (std::size_t c = 0; c < bm.basis.size(); ++c) {
            bool hits = true;
            for (int k = 0; k <= m; ++k)
                if (b0.basis[r][static_cast<std::size_t>(k)] + bm.basis[c][static_cast<std::size_t>(k)] != -1) {
                    hits = false;
                    break;
                }
            if (hits) p.at(r, c) = 1;
        }
    return p;
}

} // namespace homcat::cohp
