// tools/latgaps.cpp — command-line front end.
//
// Subcommands: ball, orbit, gapcheck, spectrum, optimal, dioph, equidist.
// Every command is deterministic given its flags; output bytes do not
// depend on the worker count. Exit codes: 0 success, 2 usage error,
// 3 resource guard breached, 4 mathematical invariant violated.

#include "latgaps/ball.hpp"
#include "latgaps/equidist.hpp"
#include "latgaps/gaps.hpp"
#include "latgaps/io.hpp"
#include "latgaps/optimality.hpp"
#include "latgaps/rational_geometry.hpp"
#include "latgaps/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace latgaps;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitViolation = 4;

/// The gap theorem failed on real data; must never happen.
class GapViolation : public std::runtime_error {
public:
    explicit GapViolation(const std::string& what) : std::runtime_error(what) {}
};

double orbit_guard_from_env() {
    if (const char* env = std::getenv("LATTICE_GAPS_MAX_T")) {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end != env && value > 0.0) return value;
        throw std::domain_error("LATTICE_GAPS_MAX_T must be a positive number");
    }
    return kDefaultOrbitMaxRadius;
}

double resolve_symbol(const std::string& token) {
    if (token == "pi/2") return std::numbers::pi / 2.0;
    if (token == "pi") return std::numbers::pi;
    if (token == "phi") return std::numbers::phi;
    if (token == "sqrt2") return std::numbers::sqrt2;
    if (token == "e") return std::numbers::e;
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw std::domain_error("unknown coordinate token: '" + token +
                                "' (expected a decimal or pi/2, pi, phi, sqrt2, e)");
    }
}

struct PointOpts {
    std::vector<std::string> v;      // --v X Y (decimal strings)
    std::vector<std::string> v_sym;  // --v-sym TOKEN TOKEN

    Vec2R resolve() const {
        if (!v.empty() && !v_sym.empty()) {
            throw std::domain_error("--v and --v-sym are mutually exclusive");
        }
        const auto& src = v.empty() ? v_sym : v;
        if (src.size() != 2) throw std::domain_error("a base point needs two coordinates");
        const Vec2R out{resolve_symbol(src[0]), resolve_symbol(src[1])};
        if (out.x == 0.0 && out.y == 0.0) throw std::domain_error("base point must be nonzero");
        return out;
    }
};

void add_point_opts(CLI::App* cmd, PointOpts& opts) {
    cmd->add_option("--v", opts.v, "base point coordinates (two decimals)")->expected(2);
    cmd->add_option("--v-sym", opts.v_sym,
                    "base point with symbolic tokens (pi/2, pi, phi, sqrt2, e, or decimals)")
        ->expected(2);
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string with_suffix(const std::string& base, const std::string& suffix) {
    const auto dot = base.rfind('.');
    const auto slash = base.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return base + suffix + ".csv";
    }
    return base.substr(0, dot) + suffix + base.substr(dot);
}

// ---------------------------------------------------------------------- ball

struct BallArgs {
    std::string t = "";
    std::string t_sq = "";
    std::string format = "csv";
    std::string out = "-";
    int workers = 1;
};

int run_ball(const BallArgs& args) {
    Rational radius_sq;
    if (!args.t_sq.empty()) {
        radius_sq = Rational::parse(args.t_sq);
    } else if (!args.t.empty()) {
        const Rational t = Rational::parse(args.t);
        radius_sq = t * t;
    } else {
        throw std::domain_error("ball requires --T or --Tsq");
    }
    const auto spec = BallSpec::from_radius_sq(radius_sq);

    if (args.format == "csv") {
        std::string text = "a,b,c,d,norm_sq\n";
        for_each_in_ball(spec, [&](const UnimodularMatrix& g) {
            const auto& m = g.mat();
            text += fmt(m.a) + "," + fmt(m.b) + "," + fmt(m.c) + "," + fmt(m.d) + "," +
                    fmt(frobenius_norm_sq(m)) + "\n";
        });
        write_text(args.out, text);
        return kExitOk;
    }
    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["radius_sq"] = radius_sq.to_string();
        auto rows = nlohmann::ordered_json::array();
        std::uint64_t count = 0;
        for_each_in_ball(spec, [&](const UnimodularMatrix& g) {
            const auto& m = g.mat();
            rows.push_back({static_cast<std::int64_t>(m.a), static_cast<std::int64_t>(m.b),
                            static_cast<std::int64_t>(m.c), static_cast<std::int64_t>(m.d),
                            static_cast<std::int64_t>(frobenius_norm_sq(m))});
            ++count;
        });
        doc["count"] = count;
        doc["rows"] = std::move(rows);
        write_text(args.out, doc.dump(1) + "\n");
        return kExitOk;
    }
    throw std::domain_error("ball supports --format csv|json");
}

// --------------------------------------------------------------------- orbit

struct OrbitArgs {
    PointOpts point;
    double t = 1000.0;
    std::vector<double> clip = {-20.0, -20.0, 20.0, 20.0};
    std::vector<double> annulus;
    std::string format = "csv";
    std::string out = "-";
    int workers = 1;
};

int run_orbit(const OrbitArgs& args) {
    const Vec2R v = args.point.resolve();
    Clip clip = ClipRect{args.clip[0], args.clip[1], args.clip[2], args.clip[3]};
    if (!args.annulus.empty()) clip = ClipAnnulus{args.annulus[0], args.annulus[1]};
    const auto points = orbit_scatter(v, args.t, clip, args.workers, orbit_guard_from_env());

    if (args.format == "csv") {
        std::string text = "x,y\n";
        for (const auto& sp : points) text += fmt(sp.point.x) + "," + fmt(sp.point.y) + "\n";
        write_text(args.out, text);
        return kExitOk;
    }
    if (args.format == "svg") {
        double x0, y0, x1, y1;
        if (args.annulus.empty()) {
            x0 = args.clip[0]; y0 = args.clip[1]; x1 = args.clip[2]; y1 = args.clip[3];
        } else {
            x0 = y0 = -args.annulus[1];
            x1 = y1 = args.annulus[1];
        }
        SvgCanvas svg(x0, y0, x1, y1);
        svg.axes();
        for (const auto& sp : points) svg.circle(sp.point.x, sp.point.y);
        write_text(args.out, svg.document());
        return kExitOk;
    }
    throw std::domain_error("orbit supports --format csv|svg");
}

// ------------------------------------------------------------------ gapcheck

struct GapcheckArgs {
    PointOpts point;
    double t = 1000.0;
    std::vector<std::int64_t> line = {1, 0};
    double r_min = 1.0;
    double r_max = 0.0;  // defaults to ~1.9 T |v| below
    int r_steps = 64;
    std::string format = "csv";
    std::string out = "-";
    int workers = 1;
};

int run_gapcheck(const GapcheckArgs& args) {
    const Vec2R v = args.point.resolve();
    const IntPair line{args.line[0], args.line[1]};
    const double guard = orbit_guard_from_env();
    const double r_max = args.r_max > 0.0 ? args.r_max : 1.9 * args.t * v.norm();
    if (args.r_steps < 2) throw std::domain_error("--r-steps must be at least 2");

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(args.r_steps));
    for (int i = 0; i < args.r_steps; ++i) {
        grid.push_back(args.r_min + (r_max - args.r_min) * i / (args.r_steps - 1));
    }
    const GapCurve curve = gap_region_curves(v, args.t, line, grid);

    double band = 0.0;
    for (double g : curve.upper) band = std::max(band, g);
    band = band > 0.0 ? 4.0 * band : 1.0 / args.t;

    const auto points = line_scatter(v, args.t, line, args.r_min, r_max, band, args.workers, guard);

    // Exact per-target reports at the grid radii.
    std::vector<Vec2Q> targets;
    targets.reserve(grid.size());
    const double h = std::hypot(static_cast<double>(line.p), static_cast<double>(line.q));
    for (double r : grid) {
        const Rational scale = Rational::from_double(r / h);
        targets.push_back(Vec2Q{scale * Rational(BigInt(line.p)), scale * Rational(BigInt(line.q))});
    }
    const auto reports = verify_gaps(v, targets, args.t, args.workers, guard);

    // Pointwise window check: no orbit point strictly inside the curves.
    const auto window = check_gap_window(v, args.t, line, args.r_min, r_max, args.workers, guard);

    bool all_pass = window.violations == 0;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;

    if (args.format == "svg") {
        SvgCanvas svg(args.r_min, -band, r_max, band);
        svg.axes();
        for (const auto& pt : points) {
            if (pt.radius > 0.0) svg.circle(pt.radius, pt.slope, "#333333");
        }
        svg.polyline(curve.radius, curve.upper);
        svg.polyline(curve.radius, curve.lower);
        write_text(args.out, svg.document());
    } else if (args.format == "csv") {
        CsvTable pts({"r", "slope"});
        for (const auto& pt : points) pts.row({fmt(pt.radius), fmt(pt.slope)});
        CsvTable curves({"r", "slope_gap_plus", "slope_gap_minus", "euclid_gap"});
        for (std::size_t i = 0; i < curve.radius.size(); ++i) {
            curves.row({fmt(curve.radius[i]), fmt(curve.upper[i]), fmt(curve.lower[i]),
                        fmt(curve.upper[i] * curve.radius[i])});
        }
        CsvTable reps({"w_x", "w_y", "rho", "bound", "observed_min", "pass"});
        for (const auto& rep : reports) {
            reps.row({fmt(rep.w.x.to_double()), fmt(rep.w.y.to_double()),
                      fmt(rep.rho_w.to_double()), fmt(rep.bound), fmt(rep.observed_min),
                      fmt(rep.pass)});
        }
        if (args.out == "-") {
            std::cout << pts.text() << "\n" << curves.text() << "\n" << reps.text();
        } else {
            pts.write(with_suffix(args.out, "_points"));
            curves.write(with_suffix(args.out, "_curves"));
            reps.write(with_suffix(args.out, "_reports"));
        }
    } else {
        throw std::domain_error("gapcheck supports --format csv|svg");
    }

    std::cerr << "gapcheck: " << points.size() << " points in band, " << window.points_in_window
              << " in window, " << window.points_tested << " tested, " << window.violations
              << " violations, " << reports.size() << " targets "
              << (all_pass ? "all pass" : "FAILED") << "\n";
    if (!all_pass) throw GapViolation("orbit point inside the gap region");
    return kExitOk;
}

// ------------------------------------------------------------------ spectrum

struct SpectrumArgs {
    PointOpts point;
    double rho_min = 0.01;
    double rho_max = 100.0;
    int rho_steps = 100;
    bool log_spacing = false;
    std::string out = "-";
};

int run_spectrum(const SpectrumArgs& args) {
    const Vec2R v = args.point.resolve();
    if (args.rho_steps < 1) throw std::domain_error("--rho-steps must be positive");
    if (!(args.rho_min > 0.0) || !(args.rho_max >= args.rho_min)) {
        throw std::domain_error("need 0 < rho-min <= rho-max");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(args.rho_steps));
    if (args.rho_steps == 1) {
        grid.push_back(args.rho_min);
    } else if (args.log_spacing) {
        const double ratio = std::log(args.rho_max / args.rho_min);
        for (int i = 0; i < args.rho_steps; ++i) {
            grid.push_back(args.rho_min * std::exp(ratio * i / (args.rho_steps - 1)));
        }
    } else {
        for (int i = 0; i < args.rho_steps; ++i) {
            grid.push_back(args.rho_min +
                           (args.rho_max - args.rho_min) * i / (args.rho_steps - 1));
        }
    }
    CsvTable table({"rho", "D", "p_witness", "q_witness"});
    for (const auto& sample : spectrum_curve(v, grid)) {
        table.row({fmt(sample.rho), fmt(sample.value), fmt(sample.witness.p),
                   fmt(sample.witness.q)});
    }
    write_text(args.out, table.text());
    return kExitOk;
}

// ------------------------------------------------------------------- optimal

struct OptimalArgs {
    PointOpts point;
    double t = 100.0;
    std::int64_t q = 0;
    double eps = 0.1;
    std::string out = "-";
};

int run_optimal(const OptimalArgs& args) {
    const Vec2R v = args.point.resolve();
    CsvTable table({"kind", "parameter", "gamma_a", "gamma_b", "gamma_c", "gamma_d", "w_x", "w_y",
                    "dist", "bound", "slack", "alpha", "lambda", "rho_prime", "dist_ok",
                    "period_ok"});
    const auto shear = near_optimal_shear(v, args.t);
    const auto& sm = shear.gamma.mat();
    const std::int64_t shear_param =
        static_cast<std::int64_t>(sm.b != 0 ? sm.b : sm.c);
    table.row({"shear", fmt(shear_param), fmt(sm.a), fmt(sm.b), fmt(sm.c), fmt(sm.d),
               fmt(shear.w.x), fmt(shear.w.y), fmt(shear.dist), fmt(shear.bound),
               fmt(shear.slack), "", "", "", "", ""});
    if (args.q > 1) {
        const auto con = contracting_approx(v, args.q, args.t, args.eps);
        const auto& cm = con.gamma.mat();
        table.row({"contraction", fmt(con.N), fmt(cm.a), fmt(cm.b), fmt(cm.c), fmt(cm.d),
                   fmt(con.w.x), fmt(con.w.y), fmt(con.dist), fmt(con.spectrum_ref / args.t),
                   fmt(con.dist - con.spectrum_ref / args.t), fmt(con.alpha), fmt(con.lambda),
                   fmt(con.rho_prime), fmt(con.dist_ok), fmt(con.period_ok)});
    }
    write_text(args.out, table.text());
    return kExitOk;
}

// --------------------------------------------------------------------- dioph

struct DiophArgs {
    PointOpts point;
    std::int64_t q = 1;
    double t = 2000.0;
    int grid = 33;
    int workers = 1;
    std::string out = "-";
};

int run_dioph(const DiophArgs& args) {
    const Vec2R v = args.point.resolve();
    const double recovered =
        diophantine_recover(v, args.q, args.t, args.grid, args.workers, orbit_guard_from_env());
    const double truth = best_approximation_error(v.y / v.x, args.q);
    const double ratio = truth > 0.0 ? recovered / truth : 0.0;
    CsvTable table({"q", "T", "recovered", "truth", "ratio"});
    table.row({fmt(args.q), fmt(args.t), fmt(recovered), fmt(truth), fmt(ratio)});
    write_text(args.out, table.text());
    if (args.out != "-") {
        std::cerr << "dioph: q=" << args.q << " recovered=" << recovered << " truth=" << truth
                  << " ratio=" << ratio << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ equidist

struct EquidistArgs {
    PointOpts point;
    double t = 1000.0;
    std::vector<double> rsup = {1.0, 10.0};
    double rolloff = 0.15;
    std::vector<double> arc1 = {0.2, 1.0};
    std::vector<double> arc2 = {2.0, 2.8};
    std::vector<double> annulus = {1.0, 10.0};
    int workers = 1;
    std::string out = "-";
};

int run_equidist(const EquidistArgs& args) {
    const Vec2R v = args.point.resolve();
    const double guard = orbit_guard_from_env();
    TestFunction phi1, phi2;
    const double radial_roll = 0.15 * (args.rsup[1] - args.rsup[0]);
    phi1.radial = BumpProfile{args.rsup[0], args.rsup[1], radial_roll};
    phi1.angular = BumpProfile{args.arc1[0], args.arc1[1], args.rolloff};
    phi2.radial = phi1.radial;
    phi2.angular = BumpProfile{args.arc2[0], args.arc2[1], args.rolloff};
    phi1.validate();
    phi2.validate();
    const Annulus annulus{args.annulus[0], args.annulus[1]};

    CsvTable table({"T", "S_phi1", "S_phi2", "I_phi1", "I_phi2", "lhs_ratio", "rhs_ratio",
                    "rel_err", "c_hat1", "c_hat2", "annulus_count", "annulus_per_T"});
    const double i1 = target_integral(phi1);
    const double i2 = target_integral(phi2);
    for (const double t : {args.t / 4.0, args.t / 2.0, args.t}) {
        const TestFunction phis[] = {phi1, phi2};
        const auto stats = orbit_statistics<TestFunction>(v, t, phis, args.workers, guard);
        const auto count = annulus_count(v, t, annulus, args.workers, guard);
        const double lhs = stats[1].value > 0.0 ? stats[0].value / stats[1].value : 0.0;
        const double rhs = i1 / i2;
        const double rel = rhs != 0.0 && stats[1].value > 0.0 ? std::abs(lhs / rhs - 1.0) : 0.0;
        const double c1 = stats[0].value > 0.0 ? i1 / (v.norm() * stats[0].value) : 0.0;
        const double c2 = stats[1].value > 0.0 ? i2 / (v.norm() * stats[1].value) : 0.0;
        table.row({fmt(t), fmt(stats[0].value), fmt(stats[1].value), fmt(i1), fmt(i2), fmt(lhs),
                   fmt(rhs), fmt(rel), fmt(c1), fmt(c2), fmt(count),
                   fmt(static_cast<double>(count) / t)});
    }
    write_text(args.out, table.text());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL(2,Z) norm-ball orbits: periods, period spectra, gap bounds and"
                 " equidistribution statistics"};
    app.require_subcommand(1);
    int seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized sweeps (reserved; shipped commands are deterministic)");

    BallArgs ball_args;
    auto* ball_cmd = app.add_subcommand("ball", "enumerate the norm ball, CSV/JSON rows");
    ball_cmd->add_option("--T", ball_args.t, "ball radius (exact decimal or fraction)");
    ball_cmd->add_option("--Tsq", ball_args.t_sq, "squared radius (exact decimal or fraction)");
    ball_cmd->add_option("--format", ball_args.format, "csv|json")->capture_default_str();
    ball_cmd->add_option("--out", ball_args.out, "output path or -")->capture_default_str();
    ball_cmd->add_option("--workers", ball_args.workers, "worker threads")->capture_default_str();

    OrbitArgs orbit_args;
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit scatter inside a clip region");
    add_point_opts(orbit_cmd, orbit_args.point);
    orbit_cmd->add_option("--T", orbit_args.t, "ball radius")->capture_default_str();
    orbit_cmd->add_option("--clip", orbit_args.clip, "clip rectangle x0 y0 x1 y1")->expected(4);
    orbit_cmd->add_option("--annulus", orbit_args.annulus, "clip annulus r0 r1")->expected(2);
    orbit_cmd->add_option("--format", orbit_args.format, "csv|svg")->capture_default_str();
    orbit_cmd->add_option("--out", orbit_args.out, "output path or -")->capture_default_str();
    orbit_cmd->add_option("--workers", orbit_args.workers, "worker threads")->capture_default_str();

    GapcheckArgs gap_args;
    auto* gap_cmd = app.add_subcommand("gapcheck",
                                       "verify the gap bound along a rational line; exit 4 on violation");
    add_point_opts(gap_cmd, gap_args.point);
    gap_cmd->add_option("--T", gap_args.t, "ball radius")->capture_default_str();
    gap_cmd->add_option("--line", gap_args.line, "line direction P Q (coprime)")->expected(2);
    gap_cmd->add_option("--r-min", gap_args.r_min, "smallest radius")->capture_default_str();
    gap_cmd->add_option("--r-max", gap_args.r_max, "largest radius (default 1.9*T*|v|)");
    gap_cmd->add_option("--r-steps", gap_args.r_steps, "radius grid size")->capture_default_str();
    gap_cmd->add_option("--format", gap_args.format, "csv|svg")->capture_default_str();
    gap_cmd->add_option("--out", gap_args.out, "output path or -")->capture_default_str();
    gap_cmd->add_option("--workers", gap_args.workers, "worker threads")->capture_default_str();

    SpectrumArgs spec_args;
    auto* spec_cmd = app.add_subcommand("spectrum", "sample D_v over a period grid");
    add_point_opts(spec_cmd, spec_args.point);
    spec_cmd->add_option("--rho-min", spec_args.rho_min, "grid start")->capture_default_str();
    spec_cmd->add_option("--rho-max", spec_args.rho_max, "grid end")->capture_default_str();
    spec_cmd->add_option("--rho-steps", spec_args.rho_steps, "grid size")->capture_default_str();
    spec_cmd->add_flag("--rho-log", spec_args.log_spacing, "logarithmic grid spacing");
    spec_cmd->add_option("--out", spec_args.out, "output path or -")->capture_default_str();
    int spec_workers = 1;  // accepted for interface uniformity; sampling is pure
    spec_cmd->add_option("--workers", spec_workers, "worker threads")->capture_default_str();

    OptimalArgs opt_args;
    auto* opt_cmd = app.add_subcommand("optimal", "optimality certificates for the gap bound");
    add_point_opts(opt_cmd, opt_args.point);
    opt_cmd->add_option("--T", opt_args.t, "ball radius")->capture_default_str();
    opt_cmd->add_option("--q", opt_args.q, "denominator for the contraction certificate");
    opt_cmd->add_option("--eps", opt_args.eps, "tolerance factor")->capture_default_str();
    opt_cmd->add_option("--out", opt_args.out, "output path or -")->capture_default_str();
    int opt_workers = 1;
    opt_cmd->add_option("--workers", opt_workers, "worker threads")->capture_default_str();

    DiophArgs dio_args;
    auto* dio_cmd = app.add_subcommand("dioph", "recover the best rational approximation");
    add_point_opts(dio_cmd, dio_args.point);
    dio_cmd->add_option("--q", dio_args.q, "denominator")->capture_default_str();
    dio_cmd->add_option("--T", dio_args.t, "ball radius")->capture_default_str();
    dio_cmd->add_option("--grid", dio_args.grid, "period window grid size")->capture_default_str();
    dio_cmd->add_option("--workers", dio_args.workers, "worker threads")->capture_default_str();
    dio_cmd->add_option("--out", dio_args.out, "output path or -")->capture_default_str();

    EquidistArgs eq_args;
    auto* eq_cmd = app.add_subcommand("equidist", "ratio-form equidistribution statistics");
    add_point_opts(eq_cmd, eq_args.point);
    eq_cmd->add_option("--T", eq_args.t, "ball radius")->capture_default_str();
    eq_cmd->add_option("--rsup", eq_args.rsup, "radial support r0 r1")->expected(2);
    eq_cmd->add_option("--rolloff", eq_args.rolloff, "angular rolloff")->capture_default_str();
    eq_cmd->add_option("--arc1", eq_args.arc1, "first angular bump t0 t1")->expected(2);
    eq_cmd->add_option("--arc2", eq_args.arc2, "second angular bump t0 t1")->expected(2);
    eq_cmd->add_option("--annulus", eq_args.annulus, "annulus r0 r1")->expected(2);
    eq_cmd->add_option("--workers", eq_args.workers, "worker threads")->capture_default_str();
    eq_cmd->add_option("--out", eq_args.out, "output path or -")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ball_cmd->parsed()) return run_ball(ball_args);
        if (orbit_cmd->parsed()) return run_orbit(orbit_args);
        if (gap_cmd->parsed()) return run_gapcheck(gap_args);
        if (spec_cmd->parsed()) return run_spectrum(spec_args);
        if (opt_cmd->parsed()) return run_optimal(opt_args);
        if (dio_cmd->parsed()) return run_dioph(dio_args);
        if (eq_cmd->parsed()) return run_equidist(eq_args);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const GapViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitViolation;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const OverflowError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
