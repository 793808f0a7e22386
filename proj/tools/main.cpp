// dipspec: spectral counting for two-dimensional dipole-type Schrodinger and
// Dirac operators. Subcommands expose the Mathieu channel decomposition, the
// imaginary-order Bessel zeros, eigenvalue counting by two independent
// routes, accumulation-slope extraction, and the eigenvalue-count bounds.
//
// Exit codes: 0 ok, 1 usage, 2 numerical non-convergence, 3 inadequate grid.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipspec/bessel_im.hpp"
#include "dipspec/bounds.hpp"
#include "dipspec/channels.hpp"
#include "dipspec/mathieu.hpp"
#include "dipspec/oracle_radial.hpp"
#include "output.hpp"

namespace {

using namespace dipspec;
using cli::Cell;
using cli::Json;
using cli::Table;

struct GlobalOptions {
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 12345;
    Tolerances tol;

    cli::OutputSink sink() const { return {format, out_path}; }
    Json config_json() const {
        Json j;
        j["format"] = format;
        j["out"] = out_path;
        j["seed"] = seed;
        j["tol_eig"] = tol.eig_tol;
        j["tol_root"] = tol.root_tol;
        j["tol_quad"] = tol.quad_tol;
        return j;
    }
};

void add_global_options(CLI::App& app, GlobalOptions& g) {
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Output path (default stdout)");
    app.add_option("--seed", g.seed, "Random seed for randomized checks")->capture_default_str();
    app.add_option("--tol-eig", g.tol.eig_tol, "Absolute eigenvalue tolerance")
        ->capture_default_str();
    app.add_option("--tol-root", g.tol.root_tol, "Relative root tolerance")
        ->capture_default_str();
    app.add_option("--tol-quad", g.tol.quad_tol, "Relative quadrature tolerance")
        ->capture_default_str();
}

// "lo..hi" in scientific notation, expanded log-uniformly by the callers.
std::pair<double, double> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("range", "expected lo..hi, got '" + text + "'");
    const double lo = std::stod(text.substr(0, pos));
    const double hi = std::stod(text.substr(pos + 2));
    if (!(lo > 0.0 && hi > 0.0 && lo <= hi))
        throw CLI::ValidationError("range", "need 0 < lo <= hi in '" + text + "'");
    return {lo, hi};
}

std::pair<int, int> parse_int_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

// ---------------------------------------------------------------- mathieu --

int cmd_mathieu(const GlobalOptions& g, double b, double a, int n_eigs, bool trace_only) {
    const mathieu::MathieuSpectrum sp = mathieu::spectrum(b, n_eigs, g.tol);
    const mathieu::McLachlanGroundState mc = mathieu::ground_state_mclachlan(std::abs(b), g.tol);
    const double trace = mathieu::trace_sqrt_neg(std::abs(b), a, g.tol);

    Json config = g.config_json();
    config["command"] = "mathieu";
    config["b"] = b;
    config["a"] = a;
    config["n"] = n_eigs;

    Table t;
    if (trace_only) {
        t.columns = {"trace_sqrt_neg"};
        t.add_row({trace});
    } else {
        t.columns = {"index",          "eigenvalue",
                     "converged",      "truncation",
                     "mclachlan_three_term", "mclachlan_cf",
                     "trace_sqrt_neg"};
        for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i)
            t.add_row({static_cast<long long>(i), sp.eigenvalues[i],
                       std::string(sp.converged ? "true" : "false"),
                       static_cast<long long>(sp.truncation), mc.three_term_value,
                       mc.continued_fraction_value, trace});
    }

    Json extras;
    extras["eigenvalues"] = sp.eigenvalues;
    extras["converged"] = sp.converged;
    extras["truncation"] = sp.truncation;
    extras["mclachlan_three_term"] = mc.three_term_value;
    extras["mclachlan_cf"] = mc.continued_fraction_value;
    extras["trace_sqrt_neg"] = trace;

    Json diag;
    diag["ground_state"] = sp.eigenvalues.front();
    g.sink().write(t, config, extras, diag);
    return 0;
}

// ------------------------------------------------------------------ zeros --

int cmd_zeros(const GlobalOptions& g, double nu, const std::string& n_range) {
    const auto [n_lo, n_hi] = parse_int_range(n_range);
    if (n_lo < 1 || n_hi < n_lo) throw CLI::ValidationError("--n", "need 1 <= lo <= hi");

    Table t;
    t.columns = {"n", "asymptotic", "refined", "gap"};
    int refined_count = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        double asym = 0.0;
        try {
            asym = bessel::zero_asymptotic(nu, n);
        } catch (const UnderflowError&) {
            break;  // deeper zeros are unrepresentable
        }
        std::vector<Cell> row{static_cast<long long>(n), asym, std::monostate{},
                              std::monostate{}};
        try {
            const double refined = bessel::zero_refined(nu, n, g.tol);
            row[2] = refined;
            row[3] = std::abs(refined - asym) / asym;
            ++refined_count;
        } catch (const UnderflowError&) {
        } catch (const NoSignChange&) {
        }
        t.add_row(std::move(row));
    }

    Json config = g.config_json();
    config["command"] = "zeros";
    config["nu"] = nu;
    config["n"] = n_range;

    Json diag;
    diag["phase"] = bessel::phase(nu);
    diag["refined_count"] = refined_count;
    g.sink().write(t, config, Json::object(), diag);
    return 0;
}

// ------------------------------------------------------------------ count --

channels::DipoleSpec make_spec(double a, double b, const std::string& bc) {
    channels::DipoleSpec spec;
    spec.a = a;
    spec.b = b;
    spec.boundary =
        (bc == "neumann") ? channels::Boundary::Neumann : channels::Boundary::Dirichlet;
    return spec;
}

int cmd_count(const GlobalOptions& g, double a, double b, const std::string& bc, double E_single,
              const std::string& E_range, int points, bool with_oracle, double grid_T,
              int grid_n) {
    const channels::DipoleSpec spec = make_spec(a, b, bc);
    const channels::ChannelSet set = channels::decompose(spec, g.tol);

    std::vector<double> energies;
    if (!E_range.empty()) {
        const auto [lo, hi] = parse_range(E_range);
        for (int i = 0; i < points; ++i) {
            const double frac = (points == 1) ? 0.0 : static_cast<double>(i) / (points - 1);
            energies.push_back(-std::exp(std::log(hi) + (std::log(lo) - std::log(hi)) * frac));
        }
    } else {
        if (!(E_single < 0.0)) throw CLI::ValidationError("--E", "need E < 0");
        energies.push_back(E_single);
    }

    Table t;
    t.columns = {"E", "N"};
    for (std::size_t k = 0; k < set.channels.size(); ++k)
        t.columns.push_back("channel_" + std::to_string(k));
    if (with_oracle) {
        t.columns.push_back("oracle_N");
        for (std::size_t k = 0; k < set.channels.size(); ++k)
            t.columns.push_back("oracle_channel_" + std::to_string(k));
        t.columns.push_back("discrepancy");
    }

    for (double E : energies) {
        const channels::ChannelCount c = channels::count_eigenvalues(set, E, g.tol);
        std::vector<Cell> row{E, static_cast<long long>(c.total)};
        for (int pc : c.per_channel) row.push_back(static_cast<long long>(pc));
        if (with_oracle) {
            oracle::RadialGrid grid =
                (grid_n > 0) ? oracle::RadialGrid{grid_T, grid_n} : oracle::auto_grid(E, set.max_nu());
            const channels::ChannelCount oc = oracle::count_below(set, E, grid);
            row.push_back(static_cast<long long>(oc.total));
            for (int pc : oc.per_channel) row.push_back(static_cast<long long>(pc));
            row.push_back(static_cast<long long>(c.total - oc.total));
        }
        t.add_row(std::move(row));
    }

    Json config = g.config_json();
    config["command"] = "count";
    config["a"] = a;
    config["b"] = b;
    config["bc"] = bc;
    if (!E_range.empty()) {
        config["E_range"] = E_range;
        config["points"] = points;
    } else {
        config["E"] = E_single;
    }
    config["oracle"] = with_oracle;

    Json diag;
    diag["open_channels"] = set.open_count();
    Json chans = Json::array();
    for (const auto& ch : set.channels) {
        Json c;
        c["index"] = ch.index;
        c["mathieu_eigenvalue"] = ch.mathieu_eigenvalue;
        c["open"] = ch.open;
        c["nu"] = ch.nu;
        chans.push_back(std::move(c));
    }
    diag["channels"] = std::move(chans);
    g.sink().write(t, config, Json::object(), diag);
    return 0;
}

// ------------------------------------------------------------------ slope --

int cmd_slope(const GlobalOptions& g, double a, double b, const std::string& bc,
              const std::string& E_range, int points, bool dirac_mode, double dirac_b) {
    Json config = g.config_json();
    config["command"] = "slope";

    Table t;
    Json extras;
    if (dirac_mode) {
        const double ds = channels::dirac_slope(dirac_b, g.tol);
        const double schrodinger =
            mathieu::trace_sqrt_neg(2.0 * dirac_b, 0.0, g.tol) / (2.0 * std::numbers::pi);
        t.columns = {"dirac_slope", "schrodinger_slope", "identity_gap"};
        t.add_row({ds, schrodinger, std::abs(ds - 2.0 * schrodinger)});
        config["dirac"] = dirac_b;
        extras["dirac_slope"] = ds;
        extras["schrodinger_slope"] = schrodinger;
    } else {
        const auto [lo, hi] = parse_range(E_range);
        const channels::CountingCurve curve =
            channels::counting_curve(make_spec(a, b, bc), -hi, -lo, points, g.tol);
        t.columns = {"fitted_slope", "theoretical_slope", "residual", "slope_stderr"};
        t.add_row({curve.fitted_slope, curve.theoretical_slope, curve.residual,
                   curve.slope_stderr});
        config["a"] = a;
        config["b"] = b;
        config["bc"] = bc;
        config["E_range"] = E_range;
        config["points"] = points;
        extras["fitted_slope"] = curve.fitted_slope;
        extras["theoretical_slope"] = curve.theoretical_slope;
        extras["residual"] = curve.residual;
    }
    g.sink().write(t, config, extras, Json::object());
    return 0;
}

// ----------------------------------------------------------------- bounds --

double canonical_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int cmd_bounds_well(const GlobalOptions& g, double alpha, double radius, int rings) {
    auto V = [alpha, radius](double r) { return (r < radius) ? -alpha : 0.0; };
    const bounds::SampledPotential pot = bounds::SampledPotential::radial(V, radius, rings);
    const bounds::ShargorodskyTerms f = bounds::shargorodsky_functional(pot);
    const bounds::LineGrid grid{-12.0, 60.0, 12000};
    const int n_minus = (alpha == 0.0) ? 0 : bounds::count_negative_radial(pot, grid);
    const double denom = f.I1 + f.I2;
    const double ratio = (denom > 0.0) ? (n_minus - 1.0) / denom : 0.0;

    Table t;
    t.columns = {"alpha", "I1", "I2", "N_minus", "ratio"};
    t.add_row({alpha, f.I1, f.I2, static_cast<long long>(n_minus), ratio});

    Json config = g.config_json();
    config["command"] = "bounds";
    config["well"] = alpha;
    config["well_radius"] = radius;
    config["rings"] = rings;
    g.sink().write(t, config, Json::object(), Json::object());
    return 0;
}

int cmd_bounds_sum_rules(const GlobalOptions& g, int trials, int max_dim) {
    std::mt19937_64 rng(g.seed);
    int passes = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int n = 2 + static_cast<int>(canonical_uniform(rng) * (max_dim - 1));
        bounds::SymmetricMatrix A(n), B(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                const double x = 2.0 * canonical_uniform(rng) - 1.0;
                const double y = 2.0 * canonical_uniform(rng) - 1.0;
                A.at(i, j) = A.at(j, i) = x;
                B.at(i, j) = B.at(j, i) = y;
            }
        const double E = 2.0 * canonical_uniform(rng) - 1.0;
        if (bounds::sum_rule_check(A, B, E).holds) ++passes;
    }

    // documented radial splitting instance: inverse-square tail plus a
    // compact negative bump, eps = 1/2, E = -1e-4
    auto V = [](double r) { return (r > 1.0) ? -2.0 / (r * r) : 0.0; };
    auto W = [](double r) { return (r < 2.0) ? -0.5 : 0.0; };
    const bounds::LineGrid grid{-10.0, std::log(100.0) + 8.0, 9000};
    const bounds::SplitRuleReport split = bounds::split_rule_check(V, W, 2.0, 0.5, -1e-4, grid);

    Table t;
    t.columns = {"trials", "passes", "eq31_holds", "eq32_holds"};
    t.add_row({static_cast<long long>(trials), static_cast<long long>(passes),
               std::string(split.upper_holds ? "true" : "false"),
               std::string(split.lower_holds ? "true" : "false")});

    Json config = g.config_json();
    config["command"] = "bounds";
    config["sum_rules"] = true;
    config["trials"] = trials;
    config["max_dim"] = max_dim;

    Json diag;
    diag["split_counts"] = {{"n_sum", split.n_sum},
                            {"n_v_up", split.n_v_up},
                            {"n_w_up", split.n_w_up},
                            {"n_v_down", split.n_v_down},
                            {"n_w_flip", split.n_w_flip}};
    g.sink().write(t, config, Json::object(), diag);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral counting for 2d dipole-type Schrodinger/Dirac operators"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions g;
    add_global_options(app, g);

    // mathieu
    double m_b = 0.0, m_a = 0.0;
    int m_n = 5;
    bool m_trace = false;
    auto* mathieu_cmd = app.add_subcommand("mathieu", "Angular operator spectrum and trace");
    mathieu_cmd->add_option("--b", m_b, "Dipole strength")->required();
    mathieu_cmd->add_option("--a", m_a, "Isotropic strength (shift in the trace)");
    mathieu_cmd->add_option("--n", m_n, "Number of eigenvalues")->check(CLI::PositiveNumber);
    mathieu_cmd->add_flag("--trace", m_trace, "Emit only trace_sqrt_neg(b, a)");

    // zeros
    double z_nu = 0.0;
    std::string z_n = "1..8";
    auto* zeros_cmd = app.add_subcommand("zeros", "Bessel K_{i nu} zeros");
    zeros_cmd->add_option("--nu", z_nu, "Imaginary order")
        ->required()
        ->check(CLI::Range(1e-12, 1e6));
    zeros_cmd->add_option("--n", z_n, "Index or range, e.g. 1..6")->capture_default_str();

    // count
    double c_a = 0.0, c_b = 0.0, c_E = 0.0, c_grid_T = 0.0;
    int c_points = 20, c_grid_n = 0;
    std::string c_bc = "dirichlet", c_range;
    bool c_oracle = false;
    auto* count_cmd = app.add_subcommand("count", "Eigenvalue counting N(E)");
    count_cmd->add_option("--a", c_a, "Isotropic strength");
    count_cmd->add_option("--b", c_b, "Dipole strength");
    count_cmd->add_option("--bc", c_bc, "Boundary condition")
        ->check(CLI::IsMember({"dirichlet", "neumann"}));
    auto* e_single = count_cmd->add_option("--E", c_E, "Single energy (negative)");
    auto* e_range = count_cmd->add_option("--E-range", c_range, "|E| range lo..hi");
    count_cmd->add_option("--points", c_points, "Grid points for --E-range");
    count_cmd->add_flag("--oracle", c_oracle, "Add finite-difference oracle columns");
    count_cmd->add_option("--grid-T", c_grid_T, "Oracle truncation override");
    count_cmd->add_option("--grid-n", c_grid_n, "Oracle node count override");
    e_single->excludes(e_range);

    // slope
    double s_a = 0.0, s_b = 0.0, s_dirac = 0.0;
    int s_points = 40;
    std::string s_bc = "dirichlet", s_range = "1e-24..1e-6";
    auto* slope_cmd = app.add_subcommand("slope", "Accumulation slope of N vs |log(-E)|");
    slope_cmd->add_option("--a", s_a, "Isotropic strength");
    slope_cmd->add_option("--b", s_b, "Dipole strength");
    slope_cmd->add_option("--bc", s_bc, "Boundary condition")
        ->check(CLI::IsMember({"dirichlet", "neumann"}));
    slope_cmd->add_option("--E-range", s_range, "|E| range lo..hi")->capture_default_str();
    slope_cmd->add_option("--points", s_points, "Grid points");
    auto* dirac_opt = slope_cmd->add_option("--dirac", s_dirac, "Gap accumulation rate for b");

    // bounds
    double b_well = -1.0, b_radius = 1.0;
    int b_rings = 20000, b_trials = 1000, b_maxdim = 30;
    bool b_sum_rules = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Eigenvalue-count bounds and sum rules");
    auto* well_opt = bounds_cmd->add_option("--well", b_well, "Disk well depth alpha");
    bounds_cmd->add_option("--well-radius", b_radius, "Disk well radius");
    bounds_cmd->add_option("--rings", b_rings, "Radial sampling rings");
    auto* sum_flag = bounds_cmd->add_flag("--sum-rules", b_sum_rules, "Randomized count sum rules");
    bounds_cmd->add_option("--trials", b_trials, "Random trials");
    bounds_cmd->add_option("--max-dim", b_maxdim, "Largest random matrix dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mathieu_cmd->parsed()) return cmd_mathieu(g, m_b, m_a, m_n, m_trace);
        if (zeros_cmd->parsed()) return cmd_zeros(g, z_nu, z_n);
        if (count_cmd->parsed()) {
            if (!*e_single && !*e_range)
                throw CLI::ValidationError("count", "need --E or --E-range");
            return cmd_count(g, c_a, c_b, c_bc, c_E, c_range, c_points, c_oracle, c_grid_T,
                             c_grid_n);
        }
        if (slope_cmd->parsed())
            return cmd_slope(g, s_a, s_b, s_bc, s_range, s_points, static_cast<bool>(*dirac_opt),
                             s_dirac);
        if (bounds_cmd->parsed()) {
            if (b_sum_rules) return cmd_bounds_sum_rules(g, b_trials, b_maxdim);
            if (*well_opt) return cmd_bounds_well(g, b_well, b_radius, b_rings);
            throw CLI::ValidationError("bounds", "need --well or --sum-rules");
        }
        (void)sum_flag;
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const GridInadequate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
