#include "homcat/fan.hpp"

#include "homcat/ratmatrix.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace homcat::fanskeleton {

using exactalg::RatMatrix;

namespace {

Rat mod1(const Rat& x) {
    Rat r = x - Rat(rat_floor(x));
    return r;
}

std::string vec_str(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

} // namespace

FanData build_projective_fan(int n, int elim) {
    if (n < 1) throw std::invalid_argument("build_projective_fan: n must be >= 1");
    if (elim == 0) elim = n;
    if (elim < 1 || elim > n) throw std::invalid_argument("build_projective_fan: bad eliminated index");
    FanData f;
    f.n = n;
    f.elim = elim;
    f.rays.assign(static_cast<std::size_t>(n), QVec(static_cast<std::size_t>(n - 1), Rat(0)));
    int pos = 0;
    for (int a = 1; a <= n; ++a) {
        if (a == elim) continue;
        f.rays[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(pos)] = 1;
        ++pos;
    }
    for (int k = 0; k < n - 1; ++k)
        f.rays[static_cast<std::size_t>(elim - 1)][static_cast<std::size_t>(k)] = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        FanCone c;
        for (int a = 1; a <= n; ++a)
            if (mask & (1u << (a - 1))) c.subset.push_back(a);
        for (int a = 1; a <= n; ++a)
            if (!(mask & (1u << (a - 1)))) c.generators.push_back(f.rays[static_cast<std::size_t>(a - 1)]);
        f.cones.push_back(std::move(c));
    }
    return f;
}

ConeInfo cone_for_subset(const FanData& f, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("cone_for_subset: empty subset");
    std::vector<int> j = subset;
    std::sort(j.begin(), j.end());
    ConeInfo info;
    for (int a = 1; a <= f.n; ++a)
        if (!std::binary_search(j.begin(), j.end(), a))
            info.generators.push_back(f.rays[static_cast<std::size_t>(a - 1)]);
    for (std::size_t k = 0; k + 1 < j.size(); ++k) {
        std::vector<Rat> v(static_cast<std::size_t>(f.n), Rat(0));
        v[static_cast<std::size_t>(j[k] - 1)] = 1;
        v[static_cast<std::size_t>(j[k + 1] - 1)] = -1;
        info.orth_basis.push_back(std::move(v));
    }
    return info;
}

std::optional<std::vector<Rat>> open_cone_coefficients(const FanData& f,
                                                       const std::vector<int>& subset,
                                                       const QVec& p) {
    ConeInfo info = cone_for_subset(f, subset);
    std::size_t dim = static_cast<std::size_t>(f.n - 1);
    if (p.size() != dim) throw std::invalid_argument("open_cone_coefficients: bad point arity");
    if (info.generators.empty()) {
        for (const auto& x : p)
            if (x != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    RatMatrix a(dim, info.generators.size());
    for (std::size_t c = 0; c < info.generators.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) a.at(r, c) = info.generators[c][r];
    auto sol = exactalg::solve(a, p);
    if (!sol) return std::nullopt;
    // verify by substitution, then strict positivity
    std::vector<Rat> res = a.apply(*sol);
    for (std::size_t r = 0; r < dim; ++r)
        if (res[r] != p[r]) return std::nullopt;
    for (const auto& lam : *sol)
        if (!(lam > 0)) return std::nullopt;
    return sol;
}

std::vector<int> containing_cone(const FanData& f, const QVec& p) {
    for (const auto& c : f.cones)
        if (open_cone_coefficients(f, c.subset, p)) return c.subset;
    throw std::logic_error("containing_cone: point escaped the complete fan");
}

SkeletonPoint make_point(const std::vector<Rat>& radii, const std::vector<Rat>& turns) {
    if (radii.size() != turns.size()) throw std::invalid_argument("make_point: arity mismatch");
    SkeletonPoint p;
    p.r = radii;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0) throw std::invalid_argument("make_point: negative radius");
        if (radii[i] > 0)
            p.theta.push_back(mod1(turns[i]));
        else
            p.theta.push_back(std::nullopt);
    }
    return p;
}

std::vector<int> minimal_radius_set(const SkeletonPoint& p) {
    Rat rmin = p.r.at(0);
    for (const auto& x : p.r) rmin = std::min(rmin, x);
    std::vector<int> im;
    for (std::size_t i = 0; i < p.r.size(); ++i)
        if (p.r[i] == rmin) im.push_back(static_cast<int>(i) + 1);
    return im;
}

namespace {

void check_point_shape(const FanData& f, const SkeletonPoint& p) {
    if (static_cast<int>(p.r.size()) != f.n || p.theta.size() != p.r.size())
        throw std::invalid_argument("skeleton point arity mismatch");
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        if (p.r[i] < 0) throw std::invalid_argument("negative radius");
        if ((p.r[i] > 0) != p.theta[i].has_value())
            throw std::invalid_argument("angle must be stored exactly where the radius is positive");
    }
}

} // namespace

StratumDescriptor classify_point(const FanData& f, const SkeletonPoint& p,
                                 const std::vector<Rat>& thetas) {
    check_point_shape(f, p);
    StratumDescriptor out;
    std::vector<int> im = minimal_radius_set(p);
    auto in_im = [&](int a) { return std::binary_search(im.begin(), im.end(), a); };

    bool zero_fiber = (p.r[static_cast<std::size_t>(im[0] - 1)] == 0);
    // Off the minimal-radius set all angles must vanish, on either stratum kind.
    for (int a = 1; a <= f.n; ++a) {
        if (in_im(a)) continue;
        if (*p.theta[static_cast<std::size_t>(a - 1)] != 0) return out; // not on the skeleton
    }
    if (zero_fiber) {
        out.kind = StratumKind::ZeroFiber;
        out.subset = im;
        out.codim = f.n + static_cast<int>(im.size());
        return out;
    }
    Rat sum = 0;
    for (const auto& t : p.theta) sum += *t;
    sum = mod1(sum);
    for (const auto& th : thetas)
        if (mod1(th) == sum) {
            out.kind = StratumKind::Open;
            out.subset = im;
            out.codim = f.n;
            out.theta = th;
            return out;
        }
    return out;
}

QVec h0_map(const FanData& f, const std::vector<Rat>& r) {
    if (static_cast<int>(r.size()) != f.n) throw std::invalid_argument("h0_map: arity mismatch");
    bool has_zero = false;
    for (const auto& x : r) {
        if (x < 0) throw std::invalid_argument("h0_map: negative radius");
        if (x == 0) has_zero = true;
    }
    if (!has_zero) throw std::invalid_argument("h0_map: point not on the zero fiber (all radii positive)");
    QVec out(static_cast<std::size_t>(f.n - 1), Rat(0));
    for (int a = 1; a <= f.n; ++a)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] -= r[static_cast<std::size_t>(a - 1)] * f.rays[static_cast<std::size_t>(a - 1)][k];
    return out;
}

GMapResult g_map(const FanData& f, const SkeletonPoint& p, const Rat& tau) {
    GMapResult res;
    check_point_shape(f, p);
    if (!(tau > -1 && tau < 1)) throw std::invalid_argument("g_map: tau must lie in (-2pi, 2pi)");
    std::vector<int> im = minimal_radius_set(p);
    auto in_im = [&](int a) { return std::binary_search(im.begin(), im.end(), a); };

    for (int a = 1; a <= f.n; ++a) {
        if (in_im(a)) continue;
        if (*p.theta[static_cast<std::size_t>(a - 1)] != 0) {
            res.violation = "theta_" + std::to_string(a) + " = " +
                            rat_to_string(*p.theta[static_cast<std::size_t>(a - 1)]) +
                            " but must vanish off the minimal-radius set";
            return res;
        }
    }

    bool zero_fiber = (p.r[static_cast<std::size_t>(im[0] - 1)] == 0);
    std::vector<Rat> lift_abs(p.r.size(), Rat(0)); // |tau_a| in turns
    if (!zero_fiber) {
        Rat sum = 0;
        for (std::size_t i = 0; i < p.r.size(); ++i) {
            if (!p.theta[i]) continue;
            Rat th = *p.theta[i];
            Rat lift = (tau >= 0) ? th : (th == 0 ? Rat(0) : th - 1);
            sum += lift;
            lift_abs[i] = (tau >= 0) ? lift : -lift;
        }
        if (sum != tau) {
            res.violation = "sum of lifted angles is " + rat_to_string(sum) + ", expected tau = " +
                            rat_to_string(tau);
            return res;
        }
    }

    Rat w = 1;
    for (const auto& x : p.r) w *= x;
    QVec g(static_cast<std::size_t>(f.n - 1), Rat(0));
    for (int a = 1; a <= f.n; ++a) {
        Rat coeff = w * lift_abs[static_cast<std::size_t>(a - 1)] - p.r[static_cast<std::size_t>(a - 1)];
        for (std::size_t k = 0; k < g.size(); ++k)
            g[k] += coeff * f.rays[static_cast<std::size_t>(a - 1)][k];
    }
    res.ok = true;
    res.g = std::move(g);
    res.w = w;
    return res;
}

namespace {

struct Inverter {
    const FanData& fan;
    Rat tau_abs;

    // Representative nu with nu_elim = 0: c = sum nu_a ebar_a.
    std::vector<Rat> representative(const QVec& c) const {
        std::vector<Rat> nu(static_cast<std::size_t>(fan.n), Rat(0));
        int pos = 0;
        for (int a = 1; a <= fan.n; ++a) {
            if (a == fan.elim) continue;
            nu[static_cast<std::size_t>(a - 1)] = c[static_cast<std::size_t>(pos)];
            ++pos;
        }
        return nu;
    }

    // Unique lambda with F(lambda) = sum_a max(nu_a + lambda, 0) = target > 0.
    // F is piecewise linear: on the segment starting at the k-th smallest
    // breakpoint -nu_(k) it equals k*lambda + (sum of the k largest nu).
    Rat positive_part_level(const std::vector<Rat>& nu, const Rat& target) const {
        if (!(target > 0)) throw std::invalid_argument("positive_part_level: target must be positive");
        std::vector<Rat> sorted = nu;
        std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
        Rat partial = 0;
        for (std::size_t k = 1; k <= sorted.size(); ++k) {
            partial += sorted[k - 1];
            Rat lo = -sorted[k - 1];
            Rat cand = (target - partial) / static_cast<int>(k);
            bool above = cand >= lo;
            bool below = (k == sorted.size()) || (cand <= -sorted[k]);
            if (above && below) return cand;
        }
        throw std::logic_error("positive_part_level: no segment matched");
    }
};

struct RatSampler {
    std::mt19937_64 rng;
    explicit RatSampler(std::uint64_t seed) : rng(seed) {}
    Rat positive() {
        std::uniform_int_distribution<int> num(1, 12), den(1, 5);
        return Rat(num(rng), den(rng));
    }
    Rat any() {
        std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
        return Rat(num(rng), den(rng));
    }
    int index(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng);
    }
    std::vector<int> nonempty_subset(int n) {
        std::uniform_int_distribution<unsigned> d(1, (1u << n) - 1);
        unsigned mask = d(rng);
        std::vector<int> s;
        for (int a = 1; a <= n; ++a)
            if (mask & (1u << (a - 1))) s.push_back(a);
        return s;
    }
};

} // namespace

BijectivityReport verify_section_bijectivity(int n, const Rat& tau, int samples,
                                             std::uint64_t seed) {
    BijectivityReport rep;
    if (n < 1) throw std::invalid_argument("verify_section_bijectivity: n must be >= 1");
    if (!(tau > -1 && tau < 1)) throw std::invalid_argument("tau must lie in (-2pi, 2pi)");
    FanData fan = build_projective_fan(n);
    RatSampler smp(seed ^ 0x9e3779b97f4a7c15ull);
    Rat tau_abs = tau >= 0 ? tau : -tau;
    Inverter inv{fan, tau_abs};

    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.counterexample = msg;
        return rep;
    };

    // Forward round-trips on the zero fiber.
    int n_l0 = samples / 4 + 1;
    for (int it = 0; it < n_l0; ++it) {
        std::vector<int> zero_set = smp.nonempty_subset(n);
        std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
        for (int a = 1; a <= n; ++a)
            if (!std::binary_search(zero_set.begin(), zero_set.end(), a))
                r[static_cast<std::size_t>(a - 1)] = smp.positive();
        QVec c = h0_map(fan, r);
        // invert: -c lies in the relatively open cone indexed by the zero set
        QVec neg(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
        std::vector<int> sub = containing_cone(fan, neg);
        if (sub != zero_set)
            return fail("h0 inversion recovered the wrong stratum for radii " + vec_str(r));
        auto coeff = open_cone_coefficients(fan, sub, neg);
        std::vector<Rat> r2(static_cast<std::size_t>(n), Rat(0));
        std::size_t pos = 0;
        for (int a = 1; a <= n; ++a)
            if (!std::binary_search(sub.begin(), sub.end(), a)) r2[static_cast<std::size_t>(a - 1)] = (*coeff)[pos++];
        if (r2 != r) return fail("h0 round-trip mismatch for radii " + vec_str(r));
        ++rep.forward_samples;
    }

    // Forward round-trips on the open part.
    int n_open = samples / 2 + 1;
    for (int it = 0; it < n_open; ++it) {
        std::vector<int> im = smp.nonempty_subset(n);
        std::vector<int> support;
        if (tau != 0) {
            // random nonempty subset of im
            do {
                support.clear();
                for (int a : im)
                    if (smp.index(0, 1)) support.push_back(a);
            } while (support.empty());
        }
        std::vector<Rat> tabs(static_cast<std::size_t>(n), Rat(0));
        if (!support.empty()) {
            Rat total = 0;
            std::vector<Rat> raw;
            for (std::size_t k = 0; k < support.size(); ++k) {
                raw.push_back(smp.positive());
                total += raw.back();
            }
            for (std::size_t k = 0; k < support.size(); ++k)
                tabs[static_cast<std::size_t>(support[k] - 1)] = raw[k] * tau_abs / total;
        }
        Rat rmin = smp.positive();
        std::vector<Rat> r(static_cast<std::size_t>(n), rmin);
        std::vector<Rat> mu(static_cast<std::size_t>(n), Rat(0));
        for (int a = 1; a <= n; ++a)
            if (!std::binary_search(im.begin(), im.end(), a)) {
                mu[static_cast<std::size_t>(a - 1)] = smp.positive();
                r[static_cast<std::size_t>(a - 1)] = rmin + mu[static_cast<std::size_t>(a - 1)];
            }
        std::vector<Rat> turns(static_cast<std::size_t>(n), Rat(0));
        for (int a = 1; a <= n; ++a) {
            Rat t = tabs[static_cast<std::size_t>(a - 1)];
            if (tau >= 0)
                turns[static_cast<std::size_t>(a - 1)] = t;
            else
                turns[static_cast<std::size_t>(a - 1)] = (t == 0) ? Rat(0) : 1 - t; // theta = -|t| mod 1
        }
        SkeletonPoint pt = make_point(r, turns);
        GMapResult gm = g_map(fan, pt, tau);
        if (!gm.ok) return fail("forward sample rejected: " + gm.violation);
        // Invert (c, w).
        std::vector<Rat> nu = inv.representative(gm.g);
        if (tau == 0) {
            // nu_a + lambda = -r_a must hold for one constant lambda.
            Rat lam = -r[0] - nu[0];
            for (int a = 0; a < n; ++a)
                if (nu[static_cast<std::size_t>(a)] + lam != -r[static_cast<std::size_t>(a)])
                    return fail("tau = 0 inversion inconsistent for radii " + vec_str(r));
            Rat prod = 1;
            for (const auto& x : r) prod *= x;
            if (prod != gm.w) return fail("tau = 0 product certificate failed");
        } else {
            Rat lamstar = inv.positive_part_level(nu, gm.w * tau_abs);
            std::vector<int> a2, z2;
            std::vector<Rat> tabs2(static_cast<std::size_t>(n), Rat(0)), mu2(static_cast<std::size_t>(n), Rat(0));
            for (int a = 1; a <= n; ++a) {
                Rat v = nu[static_cast<std::size_t>(a - 1)] + lamstar;
                if (v > 0) {
                    a2.push_back(a);
                    tabs2[static_cast<std::size_t>(a - 1)] = v / gm.w;
                } else if (v == 0) {
                    z2.push_back(a);
                } else {
                    mu2[static_cast<std::size_t>(a - 1)] = -v;
                }
            }
            if (a2 != support || tabs2 != tabs || mu2 != mu)
                return fail("open-stratum inversion recovered wrong data for radii " + vec_str(r));
            std::vector<int> im2 = a2;
            im2.insert(im2.end(), z2.begin(), z2.end());
            std::sort(im2.begin(), im2.end());
            if (im2 != im) return fail("open-stratum inversion recovered wrong minimal set");
            // radial equation certificate: G(rmin) = w with G strictly monotone
            Rat G = 1;
            for (int a = 1; a <= n; ++a) {
                if (std::binary_search(im2.begin(), im2.end(), a))
                    G *= rmin;
                else
                    G *= rmin + mu2[static_cast<std::size_t>(a - 1)];
            }
            if (G != gm.w) return fail("radial certificate failed for radii " + vec_str(r));
        }
        ++rep.forward_samples;
    }

    // Target-side samples: certify a unique preimage over random (c, w).
    int n_tgt = samples / 4 + 1;
    for (int it = 0; it < n_tgt; ++it) {
        QVec c(static_cast<std::size_t>(n - 1));
        for (auto& x : c) x = smp.any();
        bool zero_w = (smp.index(0, 3) == 0);
        if (zero_w) {
            QVec neg(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
            std::vector<int> sub = containing_cone(fan, neg);
            auto coeff = open_cone_coefficients(fan, sub, neg);
            std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
            std::size_t pos = 0;
            for (int a = 1; a <= n; ++a)
                if (!std::binary_search(sub.begin(), sub.end(), a)) r[static_cast<std::size_t>(a - 1)] = (*coeff)[pos++];
            if (h0_map(fan, r) != c) return fail("target-side h0 reconstruction failed at c = " + vec_str(c));
        } else {
            Rat w = smp.positive();
            std::vector<Rat> nu = inv.representative(c);
            if (tau == 0) {
                // unique lambda < -max(nu) with prod(-nu_a - lambda) = w; exact bracket
                Rat maxnu = nu[0];
                for (const auto& v : nu) maxnu = std::max(maxnu, v);
                Rat lam = -maxnu - 1;
                auto G = [&](const Rat& l) {
                    Rat g = 1;
                    for (const auto& v : nu) g *= (-v - l);
                    return g;
                };
                int guard = 0;
                while (G(lam) < w && guard++ < 512) lam = lam - (1 + (lam < 0 ? -lam : lam));
                if (G(lam) < w) return fail("tau = 0 radial bracket failed");
                // strictly monotone on (-inf, -maxnu): existence + uniqueness certified;
                // reconstructed class equals c identically (nu is defined mod constants).
            } else {
                Rat lamstar = inv.positive_part_level(nu, w * tau_abs);
                std::vector<Rat> mu;
                int im_count = 0;
                Rat pos_total = 0;
                for (const auto& v : nu) {
                    Rat x = v + lamstar;
                    if (x > 0) {
                        ++im_count;
                        pos_total += x;
                    } else if (x == 0) {
                        ++im_count;
                    } else {
                        mu.push_back(-x);
                    }
                }
                if (pos_total != w * tau_abs)
                    return fail("level-set certificate failed at c = " + vec_str(c));
                // radial equation x^{im} prod(x + mu) = w has a unique positive root
                auto G = [&](const Rat& x) {
                    Rat g = 1;
                    for (int k = 0; k < im_count; ++k) g *= x;
                    for (const auto& m : mu) g *= (x + m);
                    return g;
                };
                Rat hi = 1 + w;
                int guard = 0;
                while (G(hi) < w && guard++ < 512) hi *= 2;
                if (!(G(0) == 0) || G(hi) < w)
                    return fail("radial bracket failed at c = " + vec_str(c));
            }
        }
        ++rep.target_samples;
    }

    rep.pass = true;
    return rep;
}

SimplexSupport simplex_support(int n, const Rat& tau) {
    SimplexSupport s;
    if (n < 1) throw std::invalid_argument("simplex_support: n must be >= 1");
    if (tau == 0) {
        s.skyscraper = true;
        s.vertices = {std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))};
        s.dim = 0;
        return s;
    }
    for (int a = 0; a < n; ++a) {
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[static_cast<std::size_t>(a)] = tau;
        s.vertices.push_back(std::move(v));
    }
    s.dim = n - 1;
    return s;
}

} // namespace homcat::fanskeleton
