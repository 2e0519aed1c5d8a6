// Acceptance battery: every criterion runs at its stated tolerance (all
// exact, zero tolerance) and prints one PASS/FAIL line. Exit code 0 iff all
// criteria pass.

#include "homcat/cech.hpp"
#include "homcat/cellccc.hpp"
#include "homcat/cohp.hpp"
#include "homcat/fan.hpp"
#include "homcat/hyper.hpp"
#include "homcat/lbcomplex.hpp"
#include "homcat/schober.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace homcat;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << ms << " ms)"
              << (detail.empty() ? "" : "  [" + detail + "]") << std::endl;
    if (!ok) ++failures;
}

// independent monomial enumeration oracle (plain recursion, no shared code
// path with cohp beyond the type)
long long count_monomials(int nvars, int total, bool nonneg) {
    if (nvars == 0) return total == 0 ? 1 : 0;
    long long acc = 0;
    if (nonneg) {
        for (int e = 0; e <= total; ++e) acc += count_monomials(nvars - 1, total - e, true);
    } else {
        for (int e = -1; e >= total + (nvars - 1); --e)
            acc += count_monomials(nvars - 1, total - e, false);
    }
    return acc;
}

lbcx::LBComplex koszul_full(int m) {
    // Koszul complex of (x_0..x_m) on P^m via iterated cones of the Euler-type
    // sections: tensor of the two-term complexes [O(-1) -x_a-> O].
    lbcx::LBComplex acc = lbcx::LBComplex::line_bundle(m, 0);
    for (int a = 0; a <= m; ++a) {
        lbcx::LBMap f;
        f.source = lbcx::LBComplex::line_bundle(m, -1);
        f.target = lbcx::LBComplex::line_bundle(m, 0);
        lbcx::PolyMat c(1, 1, m + 1);
        c.at(0, 0) = lbcx::HomogPoly::variable(m + 1, a);
        f.components.emplace(0, std::move(c));
        acc = lbcx::tensor(acc, lbcx::cone_lb(f));
    }
    return acc;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;

    criterion("1 spherical-functor suite, n in {2,3,4}, generators O(-j)", [](std::string& d) {
        bool ok = true;
        long long n4_ms = 0;
        for (int n : {2, 3, 4}) {
            auto t0 = clock::now();
            hyper::HyperplaneData h(n);
            auto rep = hyper::check_spherical(h);
            ok = ok && rep.all_pass;
            for (const auto& [name, w] : rep.witnesses) ok = ok && lbcx::is_equivalence(w);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
            if (n == 4) n4_ms = ms;
        }
        d = "n = 4 took " + std::to_string(n4_ms) + " ms";
        return ok && n4_ms < 120000;
    });

    criterion("2 main-theorem monad and coordinate-stalk vanishing, n in {2,3,4}", [](std::string&) {
        bool ok = true;
        for (int n : {2, 3, 4}) {
            hyper::HyperplaneData h(n);
            for (int j = 0; j < n; ++j) {
                auto g = lbcx::LBComplex::line_bundle(n - 1, -j);
                ok = ok && hyper::compare_monad(h, g);
                auto mg = hyper::monad(h, g);
                for (int a = 1; a <= n; ++a)
                    ok = ok && exactalg::is_acyclic(hyper::stalk_at_coordinate_point(mg, a));
            }
        }
        return ok;
    });

    criterion("3 monodromy bookkeeping: ledger and the psi-left twist", [](std::string&) {
        auto e = schober::ledger_compose(schober::ledger_entry(Rat(1, 2)),
                                         schober::ledger_entry(Rat(1, 2)));
        bool ok = (e.winding() == 1 && e.theta() == 0 && e.shift() == 2);
        auto cd = schober::ledger_to_coherent(e);
        ok = ok && cd.twist == -1 && cd.shift == 2;
        // hyper side: T_{Psi,l} ~ (x) O(-1) on the generator window
        for (int n : {2, 3}) {
            hyper::HyperplaneData h(n);
            for (int j = 0; j < n; ++j)
                ok = ok &&
                     lbcx::is_equivalence(hyper::compare_psi_left(h, lbcx::LBComplex::line_bundle(n - 1, -j)));
        }
        return ok;
    });

    criterion("4 cohomology engine vs enumeration oracle, m <= 4, |d| <= 8", [](std::string& d) {
        auto t0 = clock::now();
        bool ok = true;
        for (int m = 0; m <= 4; ++m)
            for (int dd = -8; dd <= 8; ++dd) {
                long long h0 = (dd >= 0) ? count_monomials(m + 1, dd, true) : 0;
                long long hm = (dd <= -m - 1) ? count_monomials(m + 1, dd, false) : 0;
                if (m == 0) {
                    h0 = 1; // on a point every twist has one section
                    hm = 0;
                }
                ok = ok && (Int(h0) == cohp::h_dim(m, 0, dd));
                if (m > 0) ok = ok && (Int(hm) == cohp::h_dim(m, m, dd));
                for (int i = 1; i < m; ++i) ok = ok && (cohp::h_dim(m, i, dd) == 0);
                // the Cech engine agrees and is concentrated in {0, m}
                auto r = lbcx::rgamma(lbcx::LBComplex::line_bundle(m, dd));
                ok = ok && r.stabilized && r.euler_ok;
                for (auto& [deg, v] : r.h) ok = ok && (deg == 0 || deg == m);
                ok = ok && ((r.h.count(0) ? r.h.at(0) : 0) == (m == 0 ? h0 + hm : h0));
                if (m > 0) ok = ok && ((r.h.count(m) ? r.h.at(m) : 0) == hm);
            }
        for (int m = 1; m <= 3; ++m) {
            auto r = lbcx::rgamma(koszul_full(m));
            ok = ok && r.stabilized && r.h.empty();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        d = std::to_string(ms) + " ms";
        return ok && ms < 60000;
    });

    criterion("5 Cech stabilization battery: 100 random complexes", [](std::string&) {
        std::mt19937_64 rng(20260810);
        std::uniform_int_distribution<int> mdist(1, 3), tdist(-6, 6), cdist(-2, 2), kind(0, 2),
            degd(1, 2);
        bool ok = true;
        for (int it = 0; it < 100; ++it) {
            int m = mdist(rng);
            lbcx::LBComplex c;
            int which = kind(rng);
            if (which == 0) {
                c = lbcx::direct_sum(lbcx::LBComplex::line_bundle(m, tdist(rng)),
                                     lbcx::LBComplex::line_bundle(m, tdist(rng), 1));
            } else if (which == 1) {
                int deg = degd(rng);
                int a = std::max(-6, std::min(6 - deg, tdist(rng)));
                lbcx::LBMap f;
                f.source = lbcx::LBComplex::line_bundle(m, a);
                f.target = lbcx::LBComplex::line_bundle(m, a + deg);
                lbcx::PolyMat comp(1, 1, m + 1);
                lbcx::HomogPoly p(m + 1);
                for (int v = 0; v <= m; ++v) {
                    lbcx::Exponents e(static_cast<std::size_t>(m + 1), 0);
                    e[static_cast<std::size_t>(v)] = deg;
                    p.add_term(e, cdist(rng));
                }
                if (p.is_zero()) {
                    lbcx::Exponents e(static_cast<std::size_t>(m + 1), 0);
                    e[0] = deg;
                    p.add_term(e, 1);
                }
                comp.at(0, 0) = p;
                f.components.emplace(0, std::move(comp));
                c = lbcx::cone_lb(f);
            } else {
                int a = std::max(-6, std::min(4, tdist(rng)));
                c.m = m;
                c.lo = 0;
                c.terms = {{a}, {a + 1, a + 1}, {a + 2}};
                lbcx::PolyMat d0(2, 1, m + 1), d1(1, 2, m + 1);
                lbcx::HomogPoly f0 = lbcx::HomogPoly::variable(m + 1, 0);
                lbcx::HomogPoly g0 = lbcx::HomogPoly::variable(m + 1, std::min(1, m));
                d0.at(0, 0) = g0;
                d0.at(1, 0) = -f0;
                d1.at(0, 0) = f0;
                d1.at(0, 1) = g0;
                c.diffs = {d0, d1};
            }
            if (!lbcx::validate(c).ok) return false;
            auto r = lbcx::rgamma(c);
            ok = ok && r.stabilized && r.euler_ok;
        }
        return ok;
    });

    criterion("6 perverse disk quiver battery: 1000 random data", [](std::string& d) {
        auto t0 = clock::now();
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> dim(0, 3), val(-3, 3);
        std::function<Rat(const exactalg::RatMatrix&)> det_cof =
            [&](const exactalg::RatMatrix& m) -> Rat {
            std::size_t n = m.rows();
            if (n == 0) return 1;
            Rat acc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (m.at(0, c) == 0) continue;
                exactalg::RatMatrix sub(n - 1, n - 1);
                for (std::size_t i = 1; i < n; ++i) {
                    std::size_t jj = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != c) sub.at(i - 1, jj++) = m.at(i, j);
                }
                Rat t = m.at(0, c) * det_cof(sub);
                acc += (c % 2 == 0) ? t : -t;
            }
            return acc;
        };
        bool ok = true;
        for (int it = 0; it < 1000; ++it) {
            schober::PerverseDiskDatum dd;
            dd.phi_dim = static_cast<std::size_t>(dim(rng));
            dd.psi_dim = static_cast<std::size_t>(dim(rng));
            dd.p = exactalg::RatMatrix(dd.psi_dim, dd.phi_dim);
            dd.q = exactalg::RatMatrix(dd.phi_dim, dd.psi_dim);
            for (std::size_t i = 0; i < dd.psi_dim; ++i)
                for (std::size_t j = 0; j < dd.phi_dim; ++j) dd.p.at(i, j) = val(rng);
            for (std::size_t i = 0; i < dd.phi_dim; ++i)
                for (std::size_t j = 0; j < dd.psi_dim; ++j) dd.q.at(i, j) = val(rng);
            auto mphi = exactalg::RatMatrix::identity(dd.phi_dim) - dd.q * dd.p;
            auto mpsi = exactalg::RatMatrix::identity(dd.psi_dim) - dd.p * dd.q;
            bool oracle = det_cof(mphi) != 0 && det_cof(mpsi) != 0;
            ok = ok && (schober::check_perverse(dd).ok == oracle);
            ok = ok && ((dd.p * mphi) == (mpsi * dd.p));
            ok = ok && (schober::has_no_origin_sections(dd) ==
                        exactalg::rank_kernel_image(dd.p).kernel.empty());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        d = std::to_string(ms) + " ms";
        return ok && ms < 10000;
    });

    criterion("7 M(r) degeneration: interval modules vs the A_{r-1} oracle, r <= 5",
              [](std::string&) {
                  bool ok = true;
                  for (int r = 2; r <= 5; ++r)
                      for (int a = 1; a <= r - 1; ++a)
                          for (int b = a; b <= r - 1; ++b)
                              for (int c = 1; c <= r - 1; ++c)
                                  for (int dd = c; dd <= r - 1; ++dd) {
                                      auto x = schober::interval_diagram(r, a, b);
                                      auto y = schober::interval_diagram(r, c, dd);
                                      auto hm = schober::diagram_hom_dims(x, y);
                                      long long hom = (a <= c && c <= b && b <= dd) ? 1 : 0;
                                      long long chi = 0;
                                      for (int j = std::max(a, c); j <= std::min(b, dd); ++j) ++chi;
                                      long long arrows = 0;
                                      for (int j = 2; j <= r - 1; ++j)
                                          if (j >= a && j <= b && j - 1 >= c && j - 1 <= dd) ++arrows;
                                      long long ext1 = hom - (chi - arrows);
                                      ok = ok && ((hm.count(0) ? hm.at(0) : 0) == hom);
                                      ok = ok && ((hm.count(1) ? hm.at(1) : 0) == ext1);
                                      for (auto& [deg, v] : hm)
                                          ok = ok && (deg == 0 || deg == 1);
                                  }
                  return ok;
              });

    criterion("8 coherent-constructible comparison at n = 2", [](std::string&) {
        bool ok = cellccc::ccc_compare().pass;
        for (int lam : {1, 2, 5}) ok = ok && cellccc::local_system_check(Rat(lam)).pass;
        return ok;
    });

    criterion("9 skeleton geometry: strata, h0 and the canonical section", [](std::string& d) {
        auto t0 = clock::now();
        bool ok = true;
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<int> num(1, 9), den(1, 4);
        // codimension formula on every stratum, n <= 4
        for (int n = 1; n <= 4; ++n) {
            auto fan = fanskeleton::build_projective_fan(n);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> js;
                for (int a = 1; a <= n; ++a)
                    if (mask & (1u << (a - 1))) js.push_back(a);
                // a zero-fiber point with zero set exactly J
                std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0)), th(static_cast<std::size_t>(n), Rat(0));
                for (int a = 1; a <= n; ++a)
                    if (!(mask & (1u << (a - 1)))) r[static_cast<std::size_t>(a - 1)] = Rat(num(rng), den(rng)) + 1;
                auto dz = fanskeleton::classify_point(fan, fanskeleton::make_point(r, th), {Rat(0)});
                ok = ok && dz.kind == fanskeleton::StratumKind::ZeroFiber && dz.subset == js &&
                     dz.codim == n + static_cast<int>(js.size());
                // an open point with minimal set exactly J and total angle 0
                std::vector<Rat> r2(static_cast<std::size_t>(n), Rat(1)), th2(static_cast<std::size_t>(n), Rat(0));
                for (int a = 1; a <= n; ++a)
                    if (!(mask & (1u << (a - 1)))) r2[static_cast<std::size_t>(a - 1)] = Rat(2) + num(rng);
                auto dopen = fanskeleton::classify_point(fan, fanskeleton::make_point(r2, th2), {Rat(0)});
                ok = ok && dopen.kind == fanskeleton::StratumKind::Open && dopen.subset == js &&
                     dopen.codim == n;
            }
        }
        // h0 containment on 1000 samples
        {
            auto fan = fanskeleton::build_projective_fan(3);
            std::uniform_int_distribution<int> mask(1, 7);
            for (int it = 0; it < 1000; ++it) {
                unsigned zs = static_cast<unsigned>(mask(rng));
                std::vector<Rat> r(3, Rat(0));
                std::vector<int> js;
                for (int a = 1; a <= 3; ++a) {
                    if (zs & (1u << (a - 1)))
                        js.push_back(a);
                    else
                        r[static_cast<std::size_t>(a - 1)] = Rat(num(rng), den(rng));
                }
                auto c = fanskeleton::h0_map(fan, r);
                fanskeleton::QVec neg{-c[0], -c[1]};
                ok = ok && fanskeleton::open_cone_coefficients(fan, js, neg).has_value();
            }
        }
        // exact section bijectivity for (n, tau) in {2,3} x {0, +-pi/2, +-pi}
        for (int n : {2, 3})
            for (const Rat& tau : {Rat(0), Rat(1, 4), Rat(-1, 4), Rat(1, 2), Rat(-1, 2)}) {
                auto rep = fanskeleton::verify_section_bijectivity(n, tau, 1000, 20260810);
                ok = ok && rep.pass;
            }
        // conic invariance of classify_point
        {
            auto fan = fanskeleton::build_projective_fan(3);
            std::uniform_int_distribution<int> rv(0, 4), av(0, 3);
            for (int it = 0; it < 200; ++it) {
                std::vector<Rat> r{Rat(rv(rng)), Rat(rv(rng)), Rat(rv(rng))};
                if (r[0] == 0 && r[1] == 0 && r[2] == 0) r[0] = 1;
                std::vector<Rat> th{Rat(av(rng), 4), Rat(av(rng), 4), Rat(av(rng), 4)};
                auto p = fanskeleton::make_point(r, th);
                auto base = fanskeleton::classify_point(fan, p, {Rat(0), Rat(1, 4)});
                Rat scale = Rat(num(rng), den(rng));
                std::vector<Rat> rs = r;
                for (auto& x : rs) x *= scale;
                auto scaled = fanskeleton::classify_point(fan, fanskeleton::make_point(rs, th),
                                                          {Rat(0), Rat(1, 4)});
                ok = ok && base.kind == scaled.kind && base.subset == scaled.subset &&
                     base.codim == scaled.codim;
            }
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        d = std::to_string(ms) + " ms";
        return ok && ms < 60000;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
