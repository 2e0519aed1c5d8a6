#include "homcat/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homcat::lbcx {

namespace {
int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
} // namespace

HomogPoly HomogPoly::constant(int nvars, const Rat& c) {
    HomogPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

HomogPoly HomogPoly::variable(int nvars, int v) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(nvars, std::move(e), 1);
}

HomogPoly HomogPoly::monomial(int nvars, Exponents e, const Rat& c) {
    HomogPoly p(nvars);
    p.add_term(e, c);
    return p;
}

int HomogPoly::degree() const {
    if (terms_.empty()) return -1;
    return total(terms_.begin()->first);
}

void HomogPoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("HomogPoly: exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("HomogPoly: negative exponent");
    if (!terms_.empty() && total(e) != degree())
        throw std::invalid_argument("HomogPoly: mixed total degrees");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (nvars_ != o.nvars_) throw std::invalid_argument("HomogPoly: arity mismatch");
    if (degree() != o.degree())
        throw std::invalid_argument("HomogPoly: degree mismatch in sum");
    HomogPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + (-o); }

HomogPoly HomogPoly::operator-() const {
    HomogPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("HomogPoly: arity mismatch");
    HomogPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

HomogPoly HomogPoly::scaled(const Rat& k) const {
    HomogPoly r(nvars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Rat HomogPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("HomogPoly: point arity mismatch");
    Rat out = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int j = 0; j < e[k]; ++j) t *= point[k];
        out += t;
    }
    return out;
}

std::string HomogPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(c) << ")";
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) {
                os << "*x" << k;
                if (e[k] > 1) os << "^" << e[k];
            }
    }
    return os.str();
}

HomogPoly substitute_eliminate(const HomogPoly& p, int elim, const std::vector<Rat>& repl) {
    int n = p.nvars();
    if (static_cast<std::size_t>(n) != repl.size())
        throw std::invalid_argument("substitute_eliminate: replacement arity mismatch");
    // Linear form in the surviving variables, already reindexed.
    HomogPoly lin(n - 1);
    for (int a = 0, k = 0; a < n; ++a) {
        if (a == elim) continue;
        if (repl[static_cast<std::size_t>(a)] != 0)
            lin.add_term([&] {
                Exponents e(static_cast<std::size_t>(n - 1), 0);
                e[static_cast<std::size_t>(k)] = 1;
                return e;
            }(), repl[static_cast<std::size_t>(a)]);
        ++k;
    }
    HomogPoly out(n - 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents rest;
        rest.reserve(static_cast<std::size_t>(n - 1));
        for (int a = 0; a < n; ++a)
            if (a != elim) rest.push_back(e[static_cast<std::size_t>(a)]);
        HomogPoly term = HomogPoly::monomial(n - 1, rest, c);
        for (int j = 0; j < e[static_cast<std::size_t>(elim)]; ++j) term = term * lin;
        out = out + term;
    }
    return out;
}

HomogPoly lift_include(const HomogPoly& p, int elim) {
    HomogPoly out(p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2;
        e2.reserve(e.size() + 1);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (static_cast<int>(k) == elim) e2.push_back(0);
            e2.push_back(e[k]);
        }
        if (elim == p.nvars()) e2.push_back(0);
        out.add_term(e2, c);
    }
    return out;
}

HomogPoly divide_exact_linear(const HomogPoly& p, const HomogPoly& s, int var) {
    if (s.degree() != 1) throw std::invalid_argument("divide_exact_linear: divisor not linear");
    Rat lead = 0;
    for (const auto& [e, c] : s.terms())
        if (e[static_cast<std::size_t>(var)] == 1) lead = c;
    if (lead == 0) throw std::invalid_argument("divide_exact_linear: divisor has no x_var term");

    HomogPoly q(p.nvars()), r = p;
    while (true) {
        // Highest x_var exponent remaining.
        int best = 0;
        Exponents beste;
        Rat bestc;
        for (const auto& [e, c] : r.terms())
            if (e[static_cast<std::size_t>(var)] > best) {
                best = e[static_cast<std::size_t>(var)];
                beste = e;
                bestc = c;
            }
        if (best == 0) break;
        Exponents ue = beste;
        ue[static_cast<std::size_t>(var)] -= 1;
        HomogPoly u = HomogPoly::monomial(p.nvars(), ue, bestc / lead);
        q = q.is_zero() ? u : q + u;
        r = r - u * s;
    }
    if (!r.is_zero())
        throw std::invalid_argument("divide_exact_linear: nonzero remainder");
    return q;
}

} // namespace homcat::lbcx
