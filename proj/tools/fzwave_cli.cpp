// Command-line front end: point/lattice evaluation of the fundamental
// solution, Cauchy-problem solves, the oracle verification suite, and
// reproduction of the standard parameter-study figures.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fzwave/fundsol.hpp"
#include "fzwave/output.hpp"
#include "fzwave/quadrature.hpp"
#include "fzwave/solver.hpp"
#include "fzwave/verify.hpp"
#include "fzwave/zener.hpp"

namespace {

using namespace fzwave;

struct Range {
    double lo = 0.0, hi = 1.0;
    std::size_t steps = 100;
};

Range parse_range(const std::string& text) {
    Range r;
    char colon1 = 0, colon2 = 0;
    std::istringstream is(text);
    if (!(is >> r.lo >> colon1 >> r.hi >> colon2 >> r.steps) || colon1 != ':' || colon2 != ':' ||
        r.steps < 2 || !(r.hi > r.lo))
        throw CLI::ValidationError("range", "expected min:max:steps with max > min, steps >= 2");
    return r;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw CLI::ValidationError("list", "expected a comma-separated list");
    return out;
}

std::vector<double> range_samples(const Range& r) {
    std::vector<double> xs(r.steps);
    for (std::size_t i = 0; i < r.steps; ++i)
        xs[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.steps - 1);
    return xs;
}

Field load_initial(const std::string& spec, const Grid1D& grid) {
    Field f(grid.n, 0.0);
    if (spec == "zero") return f;
    if (spec == "delta") {
        // unit-mass impulse on the node nearest the origin
        std::size_t best = 0;
        for (std::size_t j = 1; j < grid.n; ++j)
            if (std::abs(grid.x(j)) < std::abs(grid.x(best))) best = j;
        f[best] = 1.0 / grid.dx;
        return f;
    }
    if (spec.rfind("gaussian:", 0) == 0) {
        const double sigma = std::stod(spec.substr(9));
        if (sigma <= 0.0) throw CLI::ValidationError("gaussian", "sigma must be positive");
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double v = std::exp(-grid.x(j) * grid.x(j) / (2.0 * sigma * sigma));
            f[j] = v < 1e-14 ? 0.0 : v;
        }
        return f;
    }
    // CSV file: one value per line (or x,value pairs; the last column wins)
    std::ifstream is(spec);
    if (!is) throw CLI::ValidationError("data", "cannot open " + spec);
    std::string line;
    std::size_t j = 0;
    while (std::getline(is, line) && j < grid.n) {
        if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
        const auto pos = line.find_last_of(',');
        f[j++] = std::stod(pos == std::string::npos ? line : line.substr(pos + 1));
    }
    if (j != grid.n)
        throw CLI::ValidationError("data", spec + ": expected " + std::to_string(grid.n) + " rows");
    return f;
}

void emit(const output::Table& table, const std::vector<std::string>& formats,
          const std::filesystem::path& out_dir, const std::string& stem,
          const std::string& title) {
    std::filesystem::create_directories(out_dir);
    for (const auto& fmt : formats) {
        const auto path = (out_dir / (stem + "." + fmt)).string();
        if (fmt == "csv")
            output::write_atomic(path, output::to_csv(table));
        else if (fmt == "json")
            output::write_atomic(path, output::to_json(table));
        else
            output::write_atomic(path, output::to_svg(table, title));
        std::cout << "wrote " << path << "\n";
    }
}

int warned_points = 0;

double eval_or_zero(double x, double t, const ZenerParams& p, const QuadratureConfig& cfg,
                    bool derivative) {
    try {
        const SpacetimePoint pt(x, t);
        return derivative ? fundsol::fundsol_dt(pt, p, cfg)
                          : fundsol::fundamental_solution(pt, p, cfg);
    } catch (const cone_proximity_error& e) {
        if (warned_points++ == 0) std::cerr << "warning: " << e.what() << "\n";
        return 0.0;
    } catch (const quad::convergence_error& e) {
        if (warned_points++ == 0) std::cerr << "warning: " << e.what() << "\n";
        return 0.0;
    }
}

output::Table sample_lattice(const std::vector<double>& xs, const std::vector<double>& times,
                             const ZenerParams& p, const QuadratureConfig& cfg, bool derivative) {
    output::Table table;
    table.xs = xs;
    table.times = times;
    table.params = {{"alpha", p.alpha}, {"tau", p.tau}};
    for (double t : times) {
        std::vector<double> row(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j)
            row[j] = eval_or_zero(xs[j], t, p, cfg, derivative);
        table.values.push_back(std::move(row));
    }
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wave fields in fractional Zener viscoelastic media"};
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.require_subcommand(1);

    double alpha = 0.23, tau = 0.004, rel_tol = 1e-10, dt = 0.0;
    std::string x_spec = "0:3:300", t_spec = "0.5,1,1.5", out_dir = ".";
    std::string grid_spec, u0_spec = "delta", v0_spec = "zero", f_spec;
    std::vector<std::string> formats;
    bool allow_truncated = false;
    double inject_c0 = 0.5;

    // Shared parameters live on the top-level app (subcommands fall through
    // to them) so a flat key=value config file covers them all.
    app.add_option("--alpha", alpha, "fractional order in [0,1)");
    app.add_option("--tau", tau, "relaxation-time ratio in (0,1]");
    app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
    app.add_option("--format", formats, "output format, repeatable: csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--out", out_dir, "output directory");

    auto* cmd_fundsol = app.add_subcommand("fundsol", "evaluate S and dS/dt on an (x,t) lattice");
    cmd_fundsol->fallthrough();
    cmd_fundsol->add_option("--x", x_spec, "spatial range min:max:steps");
    cmd_fundsol->add_option("--t", t_spec, "comma-separated times");

    auto* cmd_solve = app.add_subcommand("solve", "solve the Cauchy problem by convolution");
    cmd_solve->fallthrough();
    cmd_solve->add_option("--grid", grid_spec, "spatial grid min:max:steps (default: auto-wide)");
    cmd_solve->add_option("--t", t_spec, "comma-separated output times");
    cmd_solve->add_option("--u0", u0_spec, "initial displacement: delta|zero|gaussian:sigma|file");
    cmd_solve->add_option("--v0", v0_spec, "initial velocity: delta|zero|gaussian:sigma|file");
    cmd_solve->add_option("--f", f_spec, "body force file (rows = times of --dt grid)");
    cmd_solve->add_option("--dt", dt, "force time step");
    cmd_solve->add_flag("--allow-truncated", allow_truncated,
                        "skip the support-cone width check");

    auto* cmd_verify = app.add_subcommand("verify", "run the oracle verification suite");
    cmd_verify->fallthrough();
    cmd_verify->add_option("--inject-c0", inject_c0, "leading constant override (fault injection)")
        ->group("");

    auto* cmd_figures = app.add_subcommand("figures", "regenerate the parameter-study figures");
    cmd_figures->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems map to exit 1
    }

    if (formats.empty()) formats = {"csv", "svg"};
    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;

    try {
        if (cmd_fundsol->parsed()) {
            const ZenerParams p(alpha, tau);
            const auto xs = range_samples(parse_range(x_spec));
            const auto times = parse_list(t_spec);
            emit(sample_lattice(xs, times, p, cfg, false), formats, out_dir, "S",
                 "fundamental solution S(x,t)");
            emit(sample_lattice(xs, times, p, cfg, true), formats, out_dir, "S_dt",
                 "time derivative of S");
            return 0;
        }

        if (cmd_solve->parsed()) {
            const ZenerParams p(alpha, tau);
            const auto times = parse_list(t_spec);
            Grid1D grid = [&] {
                if (!grid_spec.empty()) {
                    const Range r = parse_range(grid_spec);
                    return Grid1D::from_range(r.lo, r.hi, r.steps);
                }
                double t_max = 0.0;
                for (double t : times) t_max = std::max(t_max, t);
                const double half = 1.0 + t_max * zener::front_speed(p);
                return Grid1D::from_range(-half, half, 401);
            }();
            solver::CauchyData data;
            data.u0 = load_initial(u0_spec, grid);
            data.v0 = load_initial(v0_spec, grid);
            if (!f_spec.empty()) {
                if (dt <= 0.0) throw CLI::ValidationError("--f", "body force requires --dt");
                std::ifstream is(f_spec);
                if (!is) throw CLI::ValidationError("--f", "cannot open " + f_spec);
                std::vector<Field> rows;
                std::string line;
                while (std::getline(is, line)) {
                    Field row;
                    std::istringstream ls(line);
                    std::string cell;
                    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
                    if (row.size() != grid.n)
                        throw CLI::ValidationError("--f", "row width must match the grid");
                    rows.push_back(std::move(row));
                }
                data.force = std::move(rows);
                data.force_time = TimeGrid(dt, data.force->size() - 1);
            }
            solver::SolveOptions opts;
            opts.quadrature = cfg;
            opts.check_cone_coverage = !allow_truncated;
            const auto u = solver::solve(data, p, grid, times, opts);

            output::Table table;
            for (std::size_t j = 0; j < grid.n; ++j) table.xs.push_back(grid.x(j));
            table.times = times;
            table.values = u;
            table.params = {{"alpha", p.alpha}, {"tau", p.tau}};
            emit(table, formats, out_dir, "u", "displacement u(x,t)");
            return 0;
        }

        if (cmd_verify->parsed()) {
            verify::VerifyOptions vo;
            vo.alpha = alpha;
            vo.tau = tau;
            vo.leading_constant = inject_c0;
            const auto results = verify::run_suite(vo);
            for (const auto& r : results)
                std::printf("%-28s %s  measured %.3e  (bound %.3e)\n", r.name.c_str(),
                            r.passed ? "PASS" : "FAIL", r.measured, r.threshold);
            return verify::all_passed(results) ? 0 : 2;
        }

        if (cmd_figures->parsed()) {
            // Pulse response u = dS/dt for a unit delta initial displacement.
            const std::vector<double> times = {0.5, 1.0, 1.5};
            const ZenerParams fig2(0.23, 0.004);
            emit(sample_lattice(range_samples({0.0, 3.0, 300}), times, fig2, cfg, true), formats,
                 out_dir, "fig2", "u(x,t), alpha=0.23, tau=0.004");

            const std::vector<double> alphas = {0.25, 0.5, 0.75};
            for (double a : alphas) {
                const ZenerParams p(a, 0.004);
                std::ostringstream stem;
                stem << "fig3_alpha" << a;
                emit(sample_lattice(range_samples({0.0, 6.0, 300}), times, p, cfg, true), formats,
                     out_dir, stem.str(), "u(x,t), tau=0.004");
            }
            for (double t : times) {
                output::Table table;
                table.xs = range_samples({0.0, 5.0, 300});
                table.params = {{"tau", 0.004}, {"t", t}};
                for (double a : alphas) {
                    const ZenerParams p(a, 0.004);
                    std::vector<double> row(table.xs.size());
                    for (std::size_t j = 0; j < table.xs.size(); ++j)
                        row[j] = eval_or_zero(table.xs[j], t, p, cfg, true);
                    table.times.push_back(a);  // legend slot: curve per alpha
                    table.values.push_back(std::move(row));
                }
                std::ostringstream stem;
                stem << "fig4_t" << t;
                emit(table, formats, out_dir, stem.str(), "u(x) over alpha (legend: alpha)");
            }
            {
                output::Table table;
                table.xs = range_samples({0.0, 5.0, 300});
                table.params = {{"tau", 0.004}};
                for (double a : alphas)
                    for (double t : times) {
                        const ZenerParams p(a, 0.004);
                        std::vector<double> row(table.xs.size());
                        for (std::size_t j = 0; j < table.xs.size(); ++j)
                            row[j] = eval_or_zero(table.xs[j], t, p, cfg, true);
                        table.times.push_back(a + t * 1e-3);  // unique legend slot
                        table.values.push_back(std::move(row));
                    }
                emit(table, formats, out_dir, "fig5", "u(x,t) over alpha and t");
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
