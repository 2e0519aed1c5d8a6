#include "homcat/schober.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>
#include <random>

using namespace homcat;
using namespace homcat::schober;
using exactalg::RatMatrix;

namespace {

PerverseDiskDatum datum(std::size_t phi, std::size_t psi, std::vector<int> pv, std::vector<int> qv) {
    PerverseDiskDatum d;
    d.phi_dim = phi;
    d.psi_dim = psi;
    d.p = RatMatrix(psi, phi);
    d.q = RatMatrix(phi, psi);
    for (std::size_t i = 0; i < psi; ++i)
        for (std::size_t j = 0; j < phi; ++j) d.p.at(i, j) = pv[i * phi + j];
    for (std::size_t i = 0; i < phi; ++i)
        for (std::size_t j = 0; j < psi; ++j) d.q.at(i, j) = qv[i * psi + j];
    return d;
}

// cofactor-expansion determinant, an oracle independent of the Gauss route
Rat det_cofactor(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rat acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        RatMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        Rat term = m.at(0, c) * det_cofactor(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("perverse disk data") {
    auto ok = datum(1, 1, {1}, {0});
    CHECK(check_perverse(ok).ok);
    auto m = monodromies(ok);
    CHECK(m.m_phi.at(0, 0) == 1);
    CHECK(m.m_psi.at(0, 0) == 1);

    auto bad = datum(1, 1, {1}, {1});
    auto c = check_perverse(bad);
    CHECK_FALSE(c.ok);
    CHECK(c.failing == "m_Phi");

    auto two = datum(1, 1, {2}, {1});
    auto m2 = monodromies(two);
    CHECK(m2.m_phi.at(0, 0) == -1);
    CHECK(m2.m_psi.at(0, 0) == -1);
    CHECK(m2.m_phi_inv.at(0, 0) == -1);
}

TEST_CASE("random data against the determinant oracle and intertwining") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(0, 3), val(-3, 3);
    for (int it = 0; it < 100; ++it) {
        PerverseDiskDatum d;
        d.phi_dim = static_cast<std::size_t>(dim(rng));
        d.psi_dim = static_cast<std::size_t>(dim(rng));
        d.p = RatMatrix(d.psi_dim, d.phi_dim);
        d.q = RatMatrix(d.phi_dim, d.psi_dim);
        for (std::size_t i = 0; i < d.psi_dim; ++i)
            for (std::size_t j = 0; j < d.phi_dim; ++j) d.p.at(i, j) = val(rng);
        for (std::size_t i = 0; i < d.phi_dim; ++i)
            for (std::size_t j = 0; j < d.psi_dim; ++j) d.q.at(i, j) = val(rng);
        RatMatrix m_phi = RatMatrix::identity(d.phi_dim) - d.q * d.p;
        RatMatrix m_psi = RatMatrix::identity(d.psi_dim) - d.p * d.q;
        bool oracle = det_cofactor(m_phi) != 0 && det_cofactor(m_psi) != 0;
        CHECK(check_perverse(d).ok == oracle);
        // algebraic identity p (1 - qp) = (1 - pq) p holds regardless
        CHECK((d.p * m_phi) == (m_psi * d.p));
    }
}

TEST_CASE("origin sections") {
    CHECK_FALSE(has_no_origin_sections(datum(1, 0, {}, {})));     // the skyscraper itself
    CHECK(has_no_origin_sections(datum(2, 3, {1, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(has_no_origin_sections(datum(1, 2, {0, 0}, {0, 0})));
    // agreement with the kernel computation
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(0, 3), val(-2, 2);
    for (int it = 0; it < 60; ++it) {
        std::size_t phi = static_cast<std::size_t>(dim(rng)), psi = static_cast<std::size_t>(dim(rng));
        RatMatrix p(psi, phi);
        for (std::size_t i = 0; i < psi; ++i)
            for (std::size_t j = 0; j < phi; ++j) p.at(i, j) = val(rng);
        PerverseDiskDatum d;
        d.phi_dim = phi;
        d.psi_dim = psi;
        d.p = p;
        d.q = RatMatrix(phi, psi);
        CHECK(has_no_origin_sections(d) == exactalg::rank_kernel_image(p).kernel.empty());
    }
}

TEST_CASE("monodromy ledger") {
    auto pi = ledger_entry(Rat(1, 2));
    auto tau2pi = ledger_compose(pi, pi);
    CHECK(tau2pi.winding() == 1);
    CHECK(tau2pi.theta() == 0);
    CHECK(tau2pi.shift() == 2);
    auto cd = ledger_to_coherent(tau2pi);
    CHECK(cd.twist == -1);
    CHECK(cd.shift == 2);

    // inverse and unit
    auto z = ledger_compose(pi, ledger_entry(Rat(-1, 2)));
    CHECK(z.tau == 0);
    CHECK(ledger_to_coherent(z).twist == 0);
    CHECK(ledger_to_coherent(z).shift == 0);

    // associativity
    auto l1 = ledger_compose(ledger_compose(ledger_entry(Rat(1, 4)), ledger_entry(Rat(1, 4))),
                             ledger_entry(Rat(1, 2)));
    auto l2 = ledger_compose(ledger_entry(Rat(1, 4)),
                             ledger_compose(ledger_entry(Rat(1, 4)), ledger_entry(Rat(1, 2))));
    CHECK(l1.tau == l2.tau);

    // tau = -4pi
    auto m2 = ledger_entry(Rat(-2));
    CHECK(ledger_to_coherent(m2).twist == 2);
    CHECK(ledger_to_coherent(m2).shift == -4);

    // homomorphism to (twist, shift) on full loops
    auto a = ledger_entry(Rat(3)), b = ledger_entry(Rat(-1));
    auto ab = ledger_compose(a, b);
    CHECK(ledger_to_coherent(ab).twist ==
          ledger_to_coherent(a).twist + ledger_to_coherent(b).twist);
    CHECK(ledger_to_coherent(ab).shift ==
          ledger_to_coherent(a).shift + ledger_to_coherent(b).shift);

    CHECK_THROWS_AS(ledger_to_coherent(ledger_entry(Rat(1, 3))), std::invalid_argument);
}

TEST_CASE("diagram validation") {
    // r = 1: a bare M_0
    SchoberDiagram bare;
    bare.n = 2;
    bare.r = 1;
    bare.m0 = lbcx::LBComplex::line_bundle(0, 0);
    CHECK(validate_diagram(bare).ok);

    // n = 1, r = 3 interval chain
    auto iv = interval_diagram(3, 1, 2);
    CHECK(validate_diagram(iv).ok);

    // n = 1 with a nonzero M_0 is rejected
    SchoberDiagram badn1 = iv;
    badn1.m0 = lbcx::LBComplex::line_bundle(0, 0);
    CHECK_FALSE(validate_diagram(badn1).ok);

    // a grading-violating structure map is reported
    SchoberDiagram badmap = iv;
    lbcx::PolyMat comp(1, 1, 1);
    comp.at(0, 0) = lbcx::HomogPoly::variable(1, 0); // degree-1 entry between equal twists
    badmap.maps[1].components.clear();
    badmap.maps[1].components.emplace(0, comp);
    auto v = validate_diagram(badmap);
    CHECK_FALSE(v.ok);
    CHECK(!v.message.empty());
}

TEST_CASE("diagram Hom degenerates to quiver representations at n = 1") {
    // single-vertex diagram: End is one-dimensional
    auto d2 = interval_diagram(2, 1, 1);
    auto t = diagram_hom_dims(d2, d2);
    CHECK(t == std::map<int, long long>{{0, 1}});

    // all interval pairs for r <= 4 against the combinatorial oracle
    for (int r = 2; r <= 4; ++r)
        for (int a = 1; a <= r - 1; ++a)
            for (int b = a; b <= r - 1; ++b)
                for (int c = 1; c <= r - 1; ++c)
                    for (int dd = c; dd <= r - 1; ++dd) {
                        auto X = interval_diagram(r, a, b), Y = interval_diagram(r, c, dd);
                        auto hm = diagram_hom_dims(X, Y);
                        long long hom = (a <= c && c <= b && b <= dd) ? 1 : 0;
                        long long chi = 0;
                        for (int j = std::max(a, c); j <= std::min(b, dd); ++j) ++chi;
                        long long arrows = 0;
                        for (int j = 2; j <= r - 1; ++j)
                            if (j >= a && j <= b && j - 1 >= c && j - 1 <= dd) ++arrows;
                        long long ext1 = hom - (chi - arrows);
                        INFO("r=", r, " [", a, ",", b, "] -> [", c, ",", dd, "]");
                        CHECK((hm.count(0) ? hm.at(0) : 0) == hom);
                        CHECK((hm.count(1) ? hm.at(1) : 0) == ext1);
                        CHECK(hm.size() == static_cast<std::size_t>((hom != 0) + (ext1 != 0)));
                    }
}

TEST_CASE("diagram Hom is additive under direct sums of diagrams") {
    auto x = interval_diagram(3, 1, 1);
    auto y = interval_diagram(3, 2, 2);
    // direct sum of interval diagrams, built by hand
    SchoberDiagram s;
    s.n = 1;
    s.r = 3;
    s.m0 = lbcx::LBComplex::zero(-1);
    for (int j = 0; j < 2; ++j)
        s.ms.push_back(lbcx::direct_sum(x.ms[static_cast<std::size_t>(j)],
                                        y.ms[static_cast<std::size_t>(j)]));
    // maps: block diagonal (all zero here except none overlapping)
    for (int j = 0; j < 2; ++j) {
        lbcx::LBComplex tgt = (j == 0) ? lbcx::LBComplex::zero(0) : s.ms[0];
        s.maps.push_back(lbcx::zero_map(s.ms[static_cast<std::size_t>(j)], tgt));
    }
    auto ts = diagram_hom_dims(s, s);
    auto xx = diagram_hom_dims(x, x);
    auto xy = diagram_hom_dims(x, y);
    auto yx = diagram_hom_dims(y, x);
    auto yy = diagram_hom_dims(y, y);
    std::map<int, long long> total;
    for (auto* t : {&xx, &xy, &yx, &yy})
        for (auto& [d, v] : *t) total[d] += v;
    CHECK(ts == total);
}

TEST_CASE("a mixed diagram at n = 2 matches the Euler bookkeeping") {
    hyper::HyperplaneData h(2);
    SchoberDiagram d;
    d.n = 2;
    d.r = 2;
    d.m0 = lbcx::LBComplex::line_bundle(0, 0);
    d.ms = {lbcx::LBComplex::line_bundle(1, 0)};
    auto p0 = hyper::push_i(h, d.m0);
    lbcx::LBMap rho;
    rho.source = d.ms[0];
    rho.target = p0;
    lbcx::PolyMat comp(1, 1, 2);
    comp.at(0, 0) = lbcx::HomogPoly::constant(2, 1); // O -> degree-0 part of the pair
    rho.components.emplace(0, std::move(comp));
    d.maps = {rho};
    REQUIRE(validate_diagram(d).ok);
    auto t = diagram_hom_dims(d, d);
    long long chi = 0;
    for (auto& [deg, v] : t) chi += (deg % 2 == 0 ? v : -v);
    // chi(End(pt)) + chi(End(O)) - chi(Hom(O, pt)) = 0 + 1 - 1
    CHECK(chi == 0);
}

TEST_CASE("diagram JSON round-trip") {
    auto iv = interval_diagram(3, 1, 2);
    auto j = iv.to_json();
    auto back = SchoberDiagram::from_json(j);
    CHECK(validate_diagram(back).ok);
    CHECK(diagram_hom_dims(back, back) == diagram_hom_dims(iv, iv));
}
