#pragma once

#include "homcat/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace homcat::lbcx {

using homcat::Rat;

using Exponents = std::vector<int>; // one entry per variable, all >= 0

// Homogeneous polynomial with exact rational coefficients, or the zero
// polynomial. All monomials share one total degree (checked on mutation).
class HomogPoly {
public:
    explicit HomogPoly(int nvars = 1) : nvars_(nvars) {}

    static HomogPoly zero(int nvars) { return HomogPoly(nvars); }
    static HomogPoly constant(int nvars, const Rat& c);
    static HomogPoly variable(int nvars, int v); // x_v
    static HomogPoly monomial(int nvars, Exponents e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of a nonzero polynomial; -1 for zero.
    int degree() const;
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& c);

    HomogPoly operator+(const HomogPoly& o) const;
    HomogPoly operator-(const HomogPoly& o) const;
    HomogPoly operator-() const;
    HomogPoly operator*(const HomogPoly& o) const;
    HomogPoly scaled(const Rat& k) const;
    bool operator==(const HomogPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& point) const;

    std::string str() const; // human-readable, for diagnostics

private:
    int nvars_;
    std::map<Exponents, Rat> terms_;
};

// x_elim := sum_a repl[a] * x_a (repl[elim] ignored), then the elim variable
// is dropped and the remaining ones are reindexed in order.
HomogPoly substitute_eliminate(const HomogPoly& p, int elim, const std::vector<Rat>& repl);

// Inverse reindexing: inserts the elim variable with exponent 0.
HomogPoly lift_include(const HomogPoly& p, int elim);

// Exact division p = q * s by a linear form s with nonzero coefficient on
// x_var; throws if the remainder is nonzero.
HomogPoly divide_exact_linear(const HomogPoly& p, const HomogPoly& s, int var);

} // namespace homcat::lbcx
