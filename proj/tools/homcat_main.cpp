// homcat: batch verification front end for the exact homological-algebra
// engine. Every subcommand emits a deterministic report (markdown or JSON)
// and uses the exit-code contract: 0 all checks pass, 1 check failure,
// 2 malformed input.

#include "homcat/cech.hpp"
#include "homcat/cellccc.hpp"
#include "homcat/chain.hpp"
#include "homcat/cohp.hpp"
#include "homcat/fan.hpp"
#include "homcat/hyper.hpp"
#include "homcat/lbcomplex.hpp"
#include "homcat/report.hpp"
#include "homcat/schober.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace homcat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    bool as_json = false;
    std::string out_dir;
    std::uint64_t seed = 0;
    int e_cap = 64;
};

lbcx::RgammaOptions rgopts(const GlobalOpts& g) {
    lbcx::RgammaOptions o;
    o.e_cap = g.e_cap;
    return o;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_file(const fs::path& p, const std::string& data) {
    std::ofstream out(p);
    out << data;
}

int emit(cli::VerificationReport& rep, const GlobalOpts& g,
         const std::vector<std::pair<std::string, json>>& witnesses = {}) {
    if (!g.out_dir.empty()) {
        fs::create_directories(g.out_dir);
        for (const auto& [name, content] : witnesses) {
            fs::path p = fs::path(g.out_dir) / (name + ".json");
            write_file(p, content.dump(2));
            rep.witness_files.push_back(p.string());
        }
        write_file(fs::path(g.out_dir) / "report.json", rep.to_json().dump(2));
        write_file(fs::path(g.out_dir) / "report.md", rep.to_markdown());
    }
    if (g.as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_markdown();
    return rep.all_pass() ? 0 : 1;
}

std::string dims_str(const std::map<int, long long>& t) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [d, v] : t) {
        if (!first) os << ", ";
        os << d << ": " << v;
        first = false;
    }
    os << "}";
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// ---- fan / skeleton ----

int cmd_fan(int n, int elim, const GlobalOpts& g) {
    fanskeleton::FanData f = fanskeleton::build_projective_fan(n, elim);
    json j;
    j["n"] = f.n;
    j["eliminated"] = f.elim;
    json rays = json::array();
    for (const auto& r : f.rays) {
        json v = json::array();
        for (const auto& x : r) v.push_back(rat_to_string(x));
        rays.push_back(std::move(v));
    }
    j["rays"] = std::move(rays);
    json cones = json::array();
    for (const auto& c : f.cones) {
        json e;
        e["subset"] = c.subset;
        e["dim"] = c.generators.size();
        cones.push_back(std::move(e));
    }
    j["cones"] = std::move(cones);
    std::cout << j.dump(2) << "\n";
    if (!g.out_dir.empty()) {
        fs::create_directories(g.out_dir);
        write_file(fs::path(g.out_dir) / "fan.json", j.dump(2));
    }
    return 0;
}

fanskeleton::SkeletonPoint point_from_json(const json& j) {
    std::vector<Rat> r, th;
    for (const auto& x : j.at("r")) r.push_back(rat_from_string(x.get<std::string>()));
    for (const auto& x : j.at("theta")) th.push_back(rat_from_string(x.get<std::string>()));
    if (th.size() != r.size()) throw std::invalid_argument("point JSON: r/theta arity mismatch");
    return fanskeleton::make_point(r, th);
}

int cmd_classify(const std::string& point_file, const std::string& thetas, const GlobalOpts& g) {
    json pj = load_json(point_file);
    fanskeleton::SkeletonPoint p = point_from_json(pj);
    std::vector<Rat> th;
    std::stringstream ss(thetas);
    std::string item;
    while (std::getline(ss, item, ',')) th.push_back(rat_from_string(item));
    fanskeleton::FanData fan = fanskeleton::build_projective_fan(static_cast<int>(p.r.size()));
    auto d = fanskeleton::classify_point(fan, p, th);
    json out;
    switch (d.kind) {
        case fanskeleton::StratumKind::ZeroFiber: out["kind"] = "zero-fiber"; break;
        case fanskeleton::StratumKind::Open: out["kind"] = "open"; break;
        case fanskeleton::StratumKind::NotOnSkeleton: out["kind"] = "not-on-skeleton"; break;
    }
    out["subset"] = d.subset;
    out["codim"] = d.codim;
    if (d.theta) out["theta"] = rat_to_string(*d.theta);
    std::cout << out.dump(2) << "\n";
    (void)g;
    return 0;
}

int cmd_verify_section(int n, const std::string& tau_str, int samples, const GlobalOpts& g) {
    Timer timer;
    Rat tau = rat_from_string(tau_str);
    cli::VerificationReport rep;
    rep.command = "skeleton verify-section";
    rep.statement_tag = "section-homeomorphism";
    rep.inputs_digest = cli::digest("n=" + std::to_string(n) + ";tau=" + tau_str +
                                    ";samples=" + std::to_string(samples) +
                                    ";seed=" + std::to_string(g.seed));
    auto r = fanskeleton::verify_section_bijectivity(n, tau, samples, g.seed);
    rep.add("g x w round-trip", r.pass,
            r.pass ? std::to_string(r.forward_samples) + " forward + " +
                         std::to_string(r.target_samples) + " target samples"
                   : r.counterexample);
    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

// ---- cohp ----

int cmd_cohp_table(int m, int dmin, int dmax, const GlobalOpts& g) {
    Timer timer;
    cli::VerificationReport rep;
    rep.command = "cohp table";
    rep.statement_tag = "line-bundle-cohomology";
    rep.inputs_digest = cli::digest("m=" + std::to_string(m) + ";" + std::to_string(dmin) + ".." +
                                    std::to_string(dmax));
    json table = json::array();
    bool euler_ok = true, count_ok = true;
    for (int d = dmin; d <= dmax; ++d) {
        json row;
        row["d"] = d;
        Rat chi = 0;
        for (int i = 0; i <= m; ++i) {
            Int h = cohp::h_dim(m, i, d);
            row["h" + std::to_string(i)] = h.str();
            chi += (i % 2 == 0 ? Rat(h) : Rat(-h));
            count_ok = count_ok && (Int(cohp::h_basis(m, i, d).basis.size()) == h);
        }
        euler_ok = euler_ok && (chi == cohp::hilbert_chi(m, d));
        table.push_back(std::move(row));
    }
    rep.add("alternating sum equals the Hilbert polynomial", euler_ok);
    rep.add("basis counts equal the dimension formula", count_ok);
    rep.wall_ms = timer.ms();
    if (!g.as_json) {
        std::cout << "| d |";
        for (int i = 0; i <= m; ++i) std::cout << " h^" << i << " |";
        std::cout << "\n|---|";
        for (int i = 0; i <= m; ++i) std::cout << "---|";
        std::cout << "\n";
        for (const auto& row : table) {
            std::cout << "| " << row["d"] << " |";
            for (int i = 0; i <= m; ++i) std::cout << " " << row["h" + std::to_string(i)].get<std::string>() << " |";
            std::cout << "\n";
        }
        std::cout << "\n";
    }
    return emit(rep, g, {{"cohp_table", table}});
}

// ---- lbcx ----

int cmd_lbcx_is_zero(const std::string& file, const GlobalOpts& g) {
    Timer timer;
    lbcx::LBComplex c = lbcx::LBComplex::from_json(load_json(file));
    cli::VerificationReport rep;
    rep.command = "lbcx is-zero";
    rep.statement_tag = "derived-zero-object";
    rep.inputs_digest = cli::digest(c.to_json().dump());
    auto v = lbcx::validate(c);
    if (!v.ok) throw std::invalid_argument("invalid complex: " + v.message);
    bool z = lbcx::is_zero_object(c, rgopts(g));
    rep.add("object is zero in the derived category", z);
    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

int cmd_lbcx_rgamma(const std::string& file, int j, const GlobalOpts& g) {
    Timer timer;
    lbcx::LBComplex c = lbcx::LBComplex::from_json(load_json(file));
    cli::VerificationReport rep;
    rep.command = "lbcx rgamma";
    rep.statement_tag = "hypercohomology";
    rep.inputs_digest = cli::digest(c.to_json().dump() + ";j=" + std::to_string(j));
    auto r = lbcx::rgamma(c, j, rgopts(g));
    rep.add("stabilized in the exponent floor", r.stabilized,
            "E = " + std::to_string(r.e_used) + (r.stabilized ? "" : "; " + r.diagnostic));
    rep.add("Euler-characteristic certificate", r.euler_ok, "dims " + dims_str(r.h));
    rep.wall_ms = timer.ms();
    json w;
    w["h"] = json::object();
    for (auto& [d, v] : r.h) w["h"][std::to_string(d)] = v;
    w["e_used"] = r.e_used;
    return emit(rep, g, {{"rgamma", w}});
}

int cmd_lbcx_ext(const std::string& left, const std::string& right, const GlobalOpts& g) {
    Timer timer;
    lbcx::LBComplex a = lbcx::LBComplex::from_json(load_json(left));
    lbcx::LBComplex b = lbcx::LBComplex::from_json(load_json(right));
    cli::VerificationReport rep;
    rep.command = "lbcx ext-table";
    rep.statement_tag = "ext-table";
    rep.inputs_digest = cli::digest(a.to_json().dump() + "|" + b.to_json().dump());
    auto t = lbcx::rhom_dims(a, b, rgopts(g));
    rep.add("Ext table computed", true, dims_str(t));
    rep.wall_ms = timer.ms();
    json w;
    for (auto& [d, v] : t) w[std::to_string(d)] = v;
    return emit(rep, g, {{"ext_table", w}});
}

// ---- hyper ----

int cmd_spherical(int n, const GlobalOpts& g) {
    Timer timer;
    hyper::HyperplaneData h(n);
    auto sr = hyper::check_spherical(h, -1, rgopts(g));
    cli::VerificationReport rep;
    rep.command = "hyper spherical-check";
    rep.statement_tag = "SF1-SF4";
    rep.inputs_digest = cli::digest("n=" + std::to_string(n));
    for (const auto& c : sr.checks) rep.add(c.check + " @ " + c.object, c.pass);
    rep.wall_ms = timer.ms();
    std::vector<std::pair<std::string, json>> wit;
    for (const auto& [name, m] : sr.witnesses) {
        std::string fname = name;
        for (auto& ch : fname)
            if (ch == '(' || ch == ')' || ch == '@' || ch == '-') ch = '_';
        wit.emplace_back("witness_" + fname, m.to_json());
    }
    return emit(rep, g, wit);
}

int cmd_monad(int n, const std::string& object_file, const GlobalOpts& g) {
    Timer timer;
    hyper::HyperplaneData h(n);
    lbcx::LBComplex obj;
    if (object_file.empty())
        obj = lbcx::LBComplex::line_bundle(h.ambient_m(), 0);
    else
        obj = lbcx::LBComplex::from_json(load_json(object_file));
    cli::VerificationReport rep;
    rep.command = "hyper monad";
    rep.statement_tag = "monad-comparison";
    rep.inputs_digest = cli::digest("n=" + std::to_string(n) + ";" + obj.to_json().dump());
    rep.add("monad(G) ~ G (x) Cone(O(-1) -s-> O)", hyper::compare_monad(h, obj, rgopts(g)));
    auto mg = hyper::monad(h, obj);
    for (int a = 1; a <= n; ++a)
        rep.add("stalk at coordinate point " + std::to_string(a) + " acyclic",
                exactalg::is_acyclic(hyper::stalk_at_coordinate_point(mg, a)));
    rep.wall_ms = timer.ms();
    return emit(rep, g, {{"monad", mg.to_json()}});
}

int cmd_stalk(int alpha, const std::string& object_file, const GlobalOpts& g) {
    lbcx::LBComplex obj = lbcx::LBComplex::from_json(load_json(object_file));
    auto st = hyper::stalk_at_coordinate_point(obj, alpha);
    json out;
    out["stalk"] = st.to_json();
    out["acyclic"] = exactalg::is_acyclic(st);
    std::cout << out.dump(2) << "\n";
    if (!g.out_dir.empty()) {
        fs::create_directories(g.out_dir);
        write_file(fs::path(g.out_dir) / "stalk.json", out.dump(2));
    }
    return 0;
}

// ---- schober ----

int cmd_schober_check(const std::string& file, const GlobalOpts& g) {
    Timer timer;
    auto d = schober::PerverseDiskDatum::from_json(load_json(file));
    cli::VerificationReport rep;
    rep.command = "schober check";
    rep.statement_tag = "disk-quiver";
    rep.inputs_digest = cli::digest(d.to_json().dump());
    auto c = schober::check_perverse(d);
    rep.add("monodromies invertible", c.ok, c.ok ? "" : c.failing + " is singular");
    if (c.ok) {
        auto m = schober::monodromies(d);
        bool intertwine = (d.p * m.m_phi) == (m.m_psi * d.p);
        rep.add("p m_Phi = m_Psi p", intertwine);
        rep.add("no sections at the origin", schober::has_no_origin_sections(d));
    }
    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

int cmd_schober_ledger(const std::string& taus, const GlobalOpts& g) {
    Timer timer;
    cli::VerificationReport rep;
    rep.command = "schober ledger";
    rep.statement_tag = "monodromy-ledger";
    rep.inputs_digest = cli::digest(taus);
    std::vector<Rat> ts;
    std::stringstream ss(taus);
    std::string item;
    while (std::getline(ss, item, ',')) ts.push_back(rat_from_string(item));
    schober::MonodromyLedgerEntry acc = schober::ledger_entry(0);
    json steps = json::array();
    for (const auto& t : ts) {
        acc = schober::ledger_compose(acc, schober::ledger_entry(t));
        json s;
        s["tau"] = rat_to_string(acc.tau);
        s["winding"] = acc.winding().str();
        s["theta"] = rat_to_string(acc.theta());
        s["shift"] = acc.shift().str();
        steps.push_back(std::move(s));
    }
    rep.add("composition accumulated", true,
            "tau = " + rat_to_string(acc.tau) + ", winding " + acc.winding().str() + ", shift " +
                acc.shift().str());
    if (acc.theta() == 0) {
        auto cd = schober::ledger_to_coherent(acc);
        rep.add("coherent descriptor", true,
                "tensor O(" + cd.twist.str() + "), shift [" + cd.shift.str() + "]");
    } else {
        rep.add("coherent descriptor", true, "not a full loop; object lives on the cover");
    }
    rep.wall_ms = timer.ms();
    return emit(rep, g, {{"ledger", steps}});
}

int cmd_diagram_hom(const std::string& left, const std::string& right, const GlobalOpts& g) {
    Timer timer;
    auto x = schober::SchoberDiagram::from_json(load_json(left));
    auto y = schober::SchoberDiagram::from_json(load_json(right));
    cli::VerificationReport rep;
    rep.command = "schober diagram-hom";
    rep.statement_tag = "diagram-hom";
    rep.inputs_digest = cli::digest(x.to_json().dump() + "|" + y.to_json().dump());
    auto xv = schober::validate_diagram(x);
    auto yv = schober::validate_diagram(y);
    if (!xv.ok) throw std::invalid_argument("left diagram: " + xv.message);
    if (!yv.ok) throw std::invalid_argument("right diagram: " + yv.message);
    auto t = schober::diagram_hom_dims(x, y, rgopts(g));
    rep.add("Hom table computed", true, dims_str(t));
    rep.wall_ms = timer.ms();
    json w;
    for (auto& [d, v] : t) w[std::to_string(d)] = v;
    return emit(rep, g, {{"diagram_hom", w}});
}

// ---- cellccc ----

cellccc::CellSheafComplex named_sheaf(const std::string& name) {
    if (name == "unit") return cellccc::build_generator(cellccc::Generator::Unit);
    if (name == "twist") return cellccc::build_generator(cellccc::Generator::Twist);
    if (name.rfind("loc:", 0) == 0) return cellccc::local_system(rat_from_string(name.substr(4)));
    throw std::invalid_argument("unknown sheaf name (use unit, twist or loc:<rational>): " + name);
}

int cmd_ccc_compare(const GlobalOpts& g) {
    Timer timer;
    auto r = cellccc::ccc_compare();
    cli::VerificationReport rep;
    rep.command = "cellccc compare";
    rep.statement_tag = "CCC-n2";
    rep.inputs_digest = cli::digest("n=2");
    for (const auto& l : r.lines) rep.add(l.substr(5), l.rfind("ok", 0) == 0, "");
    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

int cmd_convolve(const std::string& left, const std::string& right, const GlobalOpts& g) {
    Timer timer;
    auto f = named_sheaf(left), h = named_sheaf(right);
    auto c = cellccc::convolve(f, h);
    cli::VerificationReport rep;
    rep.command = "cellccc convolve";
    rep.statement_tag = "convolution";
    rep.inputs_digest = cli::digest(left + "*" + right);
    rep.add("result stays in Sh_Lambda", cellccc::in_sh_lambda(c));
    rep.wall_ms = timer.ms();
    return emit(rep, g, {{"convolution", c.to_json()}});
}

int cmd_loc(const std::string& lambda, const GlobalOpts& g) {
    Timer timer;
    auto r = cellccc::local_system_check(rat_from_string(lambda));
    cli::VerificationReport rep;
    rep.command = "cellccc loc";
    rep.statement_tag = "local-systems";
    rep.inputs_digest = cli::digest(lambda);
    for (const auto& l : r.lines) rep.add(l.substr(5), l.rfind("ok", 0) == 0, "");
    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

// ---- full suite ----

int cmd_suite(int n, int samples, const GlobalOpts& g) {
    Timer timer;
    cli::VerificationReport rep;
    rep.command = "suite full";
    rep.statement_tag = "full-suite";
    rep.inputs_digest = cli::digest("n=" + std::to_string(n) + ";samples=" + std::to_string(samples) +
                                    ";seed=" + std::to_string(g.seed));

    // spherical structure
    hyper::HyperplaneData h(n);
    auto sr = hyper::check_spherical(h, -1, rgopts(g));
    rep.add("spherical axioms + twist identifications (SF1-SF4)", sr.all_pass);

    // monad and coordinate stalks
    bool monad_ok = true;
    for (int j = 0; j < n; ++j) {
        auto gobj = lbcx::LBComplex::line_bundle(h.ambient_m(), -j);
        monad_ok = monad_ok && hyper::compare_monad(h, gobj, rgopts(g));
        auto mg = hyper::monad(h, gobj);
        for (int a = 1; a <= n; ++a)
            monad_ok = monad_ok && exactalg::is_acyclic(hyper::stalk_at_coordinate_point(mg, a));
    }
    rep.add("monad comparison + coordinate-stalk vanishing", monad_ok);

    // cohomology engine on the ambient space
    int m = n - 1;
    bool coh_ok = true;
    for (int d = -2 * m - 4; d <= 2 * m + 4; ++d) {
        Rat chi = 0;
        for (int i = 0; i <= m; ++i) {
            Int hd = cohp::h_dim(m, i, d);
            coh_ok = coh_ok && (Int(cohp::h_basis(m, i, d).basis.size()) == hd);
            chi += (i % 2 == 0 ? Rat(hd) : Rat(-hd));
        }
        coh_ok = coh_ok && (chi == cohp::hilbert_chi(m, d));
        auto r = lbcx::rgamma(lbcx::LBComplex::line_bundle(m, d), 0, rgopts(g));
        coh_ok = coh_ok && r.stabilized && r.euler_ok;
        for (auto& [deg, v] : r.h)
            coh_ok = coh_ok && ((deg == 0 || deg == m) && Int(v) == cohp::h_dim(m, deg, d));
    }
    rep.add("line-bundle cohomology tables and Cech agreement", coh_ok);

    // monodromy ledger
    auto e = schober::ledger_compose(schober::ledger_entry(Rat(1, 2)), schober::ledger_entry(Rat(1, 2)));
    auto cd = schober::ledger_to_coherent(e);
    rep.add("A_pi * A_pi = A_{2pi} with shift 2, coherent (-1, [2])",
            e.winding() == 1 && e.shift() == 2 && cd.twist == -1 && cd.shift == 2);

    // skeleton geometry
    bool skel_ok = true;
    for (const Rat& tau : {Rat(0), Rat(1, 4), Rat(-1, 4), Rat(1, 2), Rat(-1, 2)})
        skel_ok = skel_ok && fanskeleton::verify_section_bijectivity(n, tau, samples, g.seed).pass;
    rep.add("section bijectivity over five slices", skel_ok);

    // random perverse data
    std::mt19937_64 rng(g.seed ^ 0xabcdef12345ull);
    std::uniform_int_distribution<int> dim(0, 3), val(-3, 3);
    bool perv_ok = true;
    for (int it = 0; it < 200; ++it) {
        schober::PerverseDiskDatum d;
        d.phi_dim = static_cast<std::size_t>(dim(rng));
        d.psi_dim = static_cast<std::size_t>(dim(rng));
        d.p = exactalg::RatMatrix(d.psi_dim, d.phi_dim);
        d.q = exactalg::RatMatrix(d.phi_dim, d.psi_dim);
        for (std::size_t r = 0; r < d.psi_dim; ++r)
            for (std::size_t c = 0; c < d.phi_dim; ++c) d.p.at(r, c) = val(rng);
        for (std::size_t r = 0; r < d.phi_dim; ++r)
            for (std::size_t c = 0; c < d.psi_dim; ++c) d.q.at(r, c) = val(rng);
        auto ck = schober::check_perverse(d);
        if (ck.ok) {
            auto mm = schober::monodromies(d);
            perv_ok = perv_ok && ((d.p * mm.m_phi) == (mm.m_psi * d.p));
        }
    }
    rep.add("disk-quiver battery (intertwining identity)", perv_ok);

    // A_{r-1} degeneration
    bool quiver_ok = true;
    for (int r = 2; r <= 4; ++r)
        for (int a = 1; a <= r - 1 && quiver_ok; ++a)
            for (int b = a; b <= r - 1 && quiver_ok; ++b) {
                auto X = schober::interval_diagram(r, a, b);
                auto t = schober::diagram_hom_dims(X, X, rgopts(g));
                quiver_ok = quiver_ok && (t.size() == 1 && t.count(0) && t[0] == 1);
            }
    rep.add("interval self-Hom degeneration at n = 1", quiver_ok);

    if (n == 2) {
        rep.add("coherent-constructible comparison (CCC-n2)", cellccc::ccc_compare().pass);
        rep.add("local-system / torsion check", cellccc::local_system_check(Rat(2)).pass);
    }

    rep.wall_ms = timer.ms();
    return emit(rep, g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homcat: exact verification of spherical-functor, skeleton and "
                 "coherent-constructible structure over projective space"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.as_json, "emit the report as JSON on stdout");
    app.add_option("--out", g.out_dir, "directory for reports and witness files");
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_option("--e-cap", g.e_cap, "hard cap on the Cech exponent floor");

    // fan
    auto* fan = app.add_subcommand("fan", "enumerate the projective fan");
    int fan_n = 2, fan_elim = 0;
    fan->add_option("--n", fan_n, "torus dimension")->required();
    fan->add_option("--elim", fan_elim, "eliminated coordinate (default n)");

    // skeleton
    auto* skel = app.add_subcommand("skeleton", "skeleton strata and the canonical section");
    auto* classify = skel->add_subcommand("classify", "classify a point against the strata");
    std::string point_file, theta_list = "0";
    classify->add_option("--point", point_file, "point JSON file {r: [...], theta: [...]}")->required();
    classify->add_option("--theta", theta_list, "comma-separated target angles (turns)");
    auto* vsec = skel->add_subcommand("verify-section", "exact bijectivity of g x w");
    int vs_n = 2, vs_samples = 200;
    std::string vs_tau = "0";
    vsec->add_option("--n", vs_n)->required();
    vsec->add_option("--tau", vs_tau, "rational turn in (-1, 1)");
    vsec->add_option("--samples", vs_samples);

    // cohp
    auto* cohp_cmd = app.add_subcommand("cohp", "line-bundle cohomology tables");
    auto* table = cohp_cmd->add_subcommand("table", "h^i(P^m, O(d)) table");
    int t_m = 1, t_dmin = -4, t_dmax = 4;
    table->add_option("--m", t_m)->required();
    table->add_option("--dmin", t_dmin);
    table->add_option("--dmax", t_dmax);

    // lbcx
    auto* lb = app.add_subcommand("lbcx", "line-bundle complexes");
    auto* isz = lb->add_subcommand("is-zero", "derived zero test");
    std::string isz_file;
    isz->add_option("--file", isz_file)->required();
    auto* rg = lb->add_subcommand("rgamma", "hypercohomology");
    std::string rg_file;
    int rg_j = 0;
    rg->add_option("--file", rg_file)->required();
    rg->add_option("--twist", rg_j, "twist offset j");
    auto* ext = lb->add_subcommand("ext-table", "Ext dims between two complexes");
    std::string ext_l, ext_r;
    ext->add_option("--left", ext_l)->required();
    ext->add_option("--right", ext_r)->required();

    // hyper
    auto* hy = app.add_subcommand("hyper", "the hyperplane spherical functor");
    auto* sph = hy->add_subcommand("spherical-check", "SF1-SF4 + twist identifications");
    int sph_n = 2;
    sph->add_option("--n", sph_n)->required();
    auto* mon = hy->add_subcommand("monad", "monad comparison and stalk vanishing");
    int mon_n = 2;
    std::string mon_file;
    mon->add_option("--n", mon_n)->required();
    mon->add_option("--object", mon_file, "LBComplex JSON (default O)");
    auto* stk = hy->add_subcommand("stalk", "stalk at a coordinate point");
    int stk_alpha = 1;
    std::string stk_file;
    stk->add_option("--alpha", stk_alpha)->required();
    stk->add_option("--object", stk_file)->required();

    // schober
    auto* sc = app.add_subcommand("schober", "disk quiver, ledger and diagrams");
    auto* sck = sc->add_subcommand("check", "perverse disk datum");
    std::string sck_file;
    sck->add_option("--file", sck_file)->required();
    auto* led = sc->add_subcommand("ledger", "monodromy ledger composition");
    std::string led_taus;
    led->add_option("--taus", led_taus, "comma-separated rational turns")->required();
    auto* dh = sc->add_subcommand("diagram-hom", "Hom table between two diagrams");
    std::string dh_l, dh_r;
    dh->add_option("--left", dh_l)->required();
    dh->add_option("--right", dh_r)->required();

    // cellccc
    auto* cc = app.add_subcommand("cellccc", "cellular model at n = 2");
    auto* cmpc = cc->add_subcommand("compare", "Ext-grid comparison with Coh(P^1)");
    auto* conv = cc->add_subcommand("convolve", "convolution of named sheaves");
    std::string conv_l = "unit", conv_r = "unit";
    conv->add_option("--left", conv_l)->required();
    conv->add_option("--right", conv_r)->required();
    auto* loc = cc->add_subcommand("loc", "local-system / torsion check");
    std::string loc_lambda = "1";
    loc->add_option("--lambda", loc_lambda)->required();

    // suite
    auto* suite = app.add_subcommand("suite", "batteries");
    auto* full = suite->add_subcommand("full", "the full battery for one dimension");
    int suite_n = 2, suite_samples = 100;
    full->add_option("--n", suite_n)->required();
    full->add_option("--samples", suite_samples);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fan) return cmd_fan(fan_n, fan_elim, g);
        if (*classify) return cmd_classify(point_file, theta_list, g);
        if (*vsec) return cmd_verify_section(vs_n, vs_tau, vs_samples, g);
        if (*table) return cmd_cohp_table(t_m, t_dmin, t_dmax, g);
        if (*isz) return cmd_lbcx_is_zero(isz_file, g);
        if (*rg) return cmd_lbcx_rgamma(rg_file, rg_j, g);
        if (*ext) return cmd_lbcx_ext(ext_l, ext_r, g);
        if (*sph) return cmd_spherical(sph_n, g);
        if (*mon) return cmd_monad(mon_n, mon_file, g);
        if (*stk) return cmd_stalk(stk_alpha, stk_file, g);
        if (*sck) return cmd_schober_check(sck_file, g);
        if (*led) return cmd_schober_ledger(led_taus, g);
        if (*dh) return cmd_diagram_hom(dh_l, dh_r, g);
        if (*cmpc) return cmd_ccc_compare(g);
        if (*conv) return cmd_convolve(conv_l, conv_r, g);
        if (*loc) return cmd_loc(loc_lambda, g);
        if (*full) return cmd_suite(suite_n, suite_samples, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
