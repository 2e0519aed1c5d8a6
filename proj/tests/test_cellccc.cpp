#include "homcat/cellccc.hpp"

#include "homcat/cech.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace homcat;
using namespace homcat::cellccc;

TEST_CASE("generator Ext tables match the coherent side") {
    auto u = build_generator(Generator::Unit);
    auto t = build_generator(Generator::Twist);
    CHECK(cell_hom_dims(u, u) == std::map<int, long long>{{0, 1}});
    CHECK(cell_hom_dims(u, t).empty());
    CHECK(cell_hom_dims(t, u) == std::map<int, long long>{{0, 2}});
    CHECK(cell_hom_dims(t, t) == std::map<int, long long>{{0, 1}});
}

TEST_CASE("membership window") {
    CHECK(in_sh_lambda(build_generator(Generator::Unit)));
    CHECK(in_sh_lambda(build_generator(Generator::Twist)));
    CHECK(in_sh_lambda(local_system(Rat(3))));
    // a sheaf singular at a vertex away from e fails the window
    auto bad = refine(build_generator(Generator::Twist), make_circle({Rat(0), Rat(1, 2)}));
    // squash the generization at the new vertex to zero
    bad.gen_right[1] = exactalg::ComplexMap::zero(bad.vstalk[1], bad.estalk[1]);
    CHECK_FALSE(in_sh_lambda(bad));
}

TEST_CASE("End of the constant sheaf is the circle cohomology") {
    auto c = local_system(Rat(1));
    CHECK(cell_hom_dims(c, c) == std::map<int, long long>{{0, 1}, {1, 1}});
}

TEST_CASE("refinement does not change Ext tables") {
    auto u = build_generator(Generator::Unit);
    auto t = build_generator(Generator::Twist);
    auto finer = make_circle({Rat(0), Rat(1, 3), Rat(2, 3)});
    auto ur = refine(u, finer), tr = refine(t, finer);
    CHECK(in_sh_lambda(tr));
    CHECK(cell_hom_dims(ur, ur) == cell_hom_dims(u, u));
    CHECK(cell_hom_dims(tr, tr) == cell_hom_dims(t, t));
    CHECK(cell_hom_dims(tr, ur) == cell_hom_dims(t, u));
    // identity refinement
    auto same = refine(u, u.circle);
    CHECK(cell_hom_dims(same, same) == cell_hom_dims(u, u));
    // mixed structures refine on the fly
    CHECK(cell_hom_dims(tr, u) == cell_hom_dims(t, u));
    // a structure that forgets the marked point is rejected
    CHECK_THROWS_AS(make_circle({Rat(1, 4), Rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(refine(u, CellCircle{{Rat(1, 5)}}), std::invalid_argument);
}

TEST_CASE("convolution unit laws") {
    auto u = build_generator(Generator::Unit);
    auto t = build_generator(Generator::Twist);
    auto uu = convolve(u, u);
    CHECK(cell_hom_dims(uu, uu) == std::map<int, long long>{{0, 1}});
    CHECK(in_sh_lambda(uu));

    auto ut = convolve(u, t);
    CHECK(cell_hom_dims(ut, ut) == cell_hom_dims(t, t));
    CHECK(cell_hom_dims(ut, u) == cell_hom_dims(t, u));

    auto w = unit_law_witness(t);
    std::string why;
    CHECK(validate_cell_map(w, &why));
    CHECK(is_cellwise_qiso(w));

    auto w2 = unit_law_witness(local_system(Rat(5)));
    CHECK(is_cellwise_qiso(w2));
}

TEST_CASE("convolution is commutative at the Ext level") {
    auto u = build_generator(Generator::Unit);
    auto t = build_generator(Generator::Twist);
    auto tt1 = convolve(t, t);
    auto tu = convolve(t, u);
    CHECK(cell_hom_dims(tu, tu) == cell_hom_dims(t, t));
    for (auto* gen : {&u, &t}) {
        CHECK(cell_hom_dims(*gen, tt1) == cell_hom_dims(*gen, convolve(t, t)));
        CHECK(cell_hom_dims(convolve(*gen, t), convolve(t, *gen)) ==
              cell_hom_dims(convolve(t, *gen), convolve(*gen, t)));
    }
}

TEST_CASE("twist convolution matches O(-2) and membership survives") {
    auto u = build_generator(Generator::Unit);
    auto t = build_generator(Generator::Twist);
    auto tt = convolve(t, t);
    CHECK(in_sh_lambda(tt));
    auto om2 = lbcx::LBComplex::line_bundle(1, -2);
    auto o = lbcx::LBComplex::line_bundle(1, 0);
    auto om1 = lbcx::LBComplex::line_bundle(1, -1);
    CHECK(cell_hom_dims(u, tt) == lbcx::rhom_dims(o, om2));
    CHECK(cell_hom_dims(tt, u) == lbcx::rhom_dims(om2, o));
    CHECK(cell_hom_dims(t, tt) == lbcx::rhom_dims(om1, om2));
    CHECK(cell_hom_dims(tt, t) == lbcx::rhom_dims(om2, om1));

    // a refined factor computes the same convolution tables
    auto tref = refine(t, make_circle({Rat(0), Rat(1, 2)}));
    auto tt2 = convolve(tref, t);
    CHECK(cell_hom_dims(u, tt2) == cell_hom_dims(u, tt));
    CHECK(cell_hom_dims(tt2, u) == cell_hom_dims(tt, u));
}

TEST_CASE("the full comparison grid") {
    auto rep = ccc_compare();
    for (const auto& l : rep.lines) INFO(l);
    CHECK(rep.pass);
}

TEST_CASE("local systems against torsion sheaves") {
    for (int lam : {1, 2, 5}) CHECK(local_system_check(Rat(lam)).pass);
    CHECK_THROWS_AS(local_system(Rat(0)), std::invalid_argument);
    // distinct monodromies are Hom-orthogonal in both orders
    CHECK(cell_hom_dims(local_system(Rat(2)), local_system(Rat(3))).empty());
    CHECK(cell_hom_dims(local_system(Rat(3)), local_system(Rat(2))).empty());
}

TEST_CASE("cell sheaf JSON round-trip") {
    auto t = build_generator(Generator::Twist);
    auto j = t.to_json();
    auto back = CellSheafComplex::from_json(j);
    CHECK(cell_hom_dims(back, back) == cell_hom_dims(t, t));
    CHECK(in_sh_lambda(back));
}
