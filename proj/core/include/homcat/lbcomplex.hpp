#pragma once

#include "homcat/chain.hpp"
#include "homcat/poly.hpp"

#include <nlohmann/json_fwd.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homcat::lbcx {

// Matrix of homogeneous polynomials; entry (r, c) maps source summand c to
// target summand r.
struct PolyMat {
    std::size_t rows = 0, cols = 0;
    int nvars = 1;
    std::vector<HomogPoly> e;

    PolyMat() = default;
    PolyMat(std::size_t r, std::size_t c, int nv)
        : rows(r), cols(c), nvars(nv), e(r * c, HomogPoly(nv)) {}

    HomogPoly& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const HomogPoly& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    bool is_zero() const;
    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-() const;
    PolyMat transposed() const;
    PolyMat scaled(const Rat& k) const;
};

struct Violation {
    bool ok = true;
    std::string message; // first failing entry when !ok
};

// Bounded complex of direct sums of line bundles O(d) on P^m with
// homogeneous-polynomial differentials; the model of Coh(P^m).
struct LBComplex {
    int m = 0;                          // projective dimension (m+1 variables)
    int lo = 0;                         // lowest degree with a term
    std::vector<std::vector<int>> terms; // terms[k] = twists in degree lo+k
    std::vector<PolyMat> diffs;          // diffs[k]: degree lo+k -> lo+k+1

    static LBComplex zero(int m) { LBComplex c; c.m = m; return c; }
    static LBComplex line_bundle(int m, int d, int degree = 0);

    bool empty() const { return terms.empty(); }
    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    std::vector<int> twists(int i) const;
    std::size_t nsummands(int i) const { return twists(i).size(); }
    PolyMat diff(int i) const;

    nlohmann::json to_json() const;
    static LBComplex from_json(const nlohmann::json& j);
};

// Grading compatibility and d^2 = 0, exactly; reports the first failure.
Violation validate(const LBComplex& c);
void require_valid(const LBComplex& c, const std::string& what);

LBComplex twist(const LBComplex& c, int k);
LBComplex shift_lb(const LBComplex& c, int k);
LBComplex tensor(const LBComplex& a, const LBComplex& b);
LBComplex sheaf_dual(const LBComplex& c);
LBComplex direct_sum(const LBComplex& a, const LBComplex& b);

// Termwise evaluation of the differentials at a rational point (the stalk at
// that point as a complex of vector spaces).
exactalg::RationalChainComplex eval_at_point(const LBComplex& c, const std::vector<Rat>& point);

struct LBMap {
    LBComplex source, target; // same m
    std::map<int, PolyMat> components;

    PolyMat component(int i) const;
    nlohmann::json to_json() const;
    static LBMap from_json(const nlohmann::json& j);
};

Violation validate_map(const LBMap& f);
void require_valid(const LBMap& f, const std::string& what);

LBMap identity_map(const LBComplex& c);
LBMap zero_map(const LBComplex& src, const LBComplex& tgt);
LBMap dual_map(const LBMap& f); // sheaf_dual(target) -> sheaf_dual(source)
LBMap compose(const LBMap& g, const LBMap& f);
LBMap twist_map(const LBMap& f, int k);
LBMap shift_map(const LBMap& f, int k);
LBMap tensor_map_lb(const LBMap& f, const LBMap& g);

LBComplex cone_lb(const LBMap& f);
// Canonical triangle maps around a cone.
LBMap cone_inclusion(const LBMap& f);  // target -> Cone(f)
LBMap cone_connecting(const LBMap& f); // Cone(f) -> source[1]

} // namespace homcat::lbcx
