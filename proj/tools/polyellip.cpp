// Command-line front end: root bounds, single solves, full root sets, basin
// renders and method comparisons.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyellip/errors.hpp"
#include "polyellip/expr.hpp"
#include "polyellip/render.hpp"
#include "polyellip/root_bounds.hpp"
#include "polyellip/solver.hpp"
#include "polyellip/splitmix.hpp"

namespace {

using namespace polyellip;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Method parse_method(std::string name, int order) {
    // "bm-ellipsoid:4" pins the order inline (used by `compare`).
    if (const auto colon = name.find(':'); colon != std::string::npos) {
        order = std::stoi(name.substr(colon + 1));
        name = name.substr(0, colon);
    }
    if (name == "newton") {
        return Method::newton();
    }
    if (name == "newton-ellipsoid") {
        return Method::newton_ellipsoid();
    }
    if (name == "bm-ellipsoid") {
        if (order < 2) {
            throw CLI::ValidationError("--order", "basic family order must be >= 2");
        }
        return Method::bm_ellipsoid(order);
    }
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

Rect parse_rect(const std::string& text) {
    double v[4];
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%n", &v[0], &v[1], &v[2], &v[3],
                    &consumed) != 4 ||
        static_cast<std::size_t>(consumed) != text.size()) {
        throw CLI::ValidationError("--rect", "expected x0,y0,x1,y1");
    }
    if (!(v[0] < v[2]) || !(v[1] < v[3])) {
        throw CLI::ValidationError("--rect", "need x0 < x1 and y0 < y1");
    }
    return Rect{v[0], v[1], v[2], v[3]};
}

struct SolveFlags {
    std::string poly;
    std::string seed;
    std::string method = "newton-ellipsoid";
    int order = 3;
    double eps = 1e-10;
    int max_iter = 60;
    int restarts = 10;
    std::uint64_t rng_seed = 0;
    std::string trace_path;
};

struct GridFlags {
    std::string rect = "-4,-4,4,4";
    int width = 800;
    int height = 800;
    int threads = 0;
};

SolveOptions to_options(const SolveFlags& f) {
    SolveOptions opts;
    opts.eps = f.eps;
    opts.max_iter = f.max_iter;
    opts.restarts = f.restarts;
    opts.rng_seed = f.rng_seed;
    return opts;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool with_method) {
    cmd->add_option("--poly", f.poly, "polynomial expression, e.g. \"z^3-2z+2\"")
        ->required();
    if (with_method) {
        cmd->add_option("--method", f.method,
                        "newton, newton-ellipsoid or bm-ellipsoid");
        cmd->add_option("--order", f.order, "basic family order for bm-ellipsoid")
            ->capture_default_str();
    }
    cmd->add_option("--eps", f.eps, "residual tolerance")->capture_default_str();
    cmd->add_option("--max-iter", f.max_iter, "steps per attempt")
        ->capture_default_str();
    cmd->add_option("--restarts", f.restarts, "extra attempts from random seeds")
        ->capture_default_str();
    cmd->add_option("--rng-seed", f.rng_seed, "seed for restart randomness")
        ->capture_default_str();
}

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--rect", g.rect, "view rectangle x0,y0,x1,y1")
        ->capture_default_str();
    cmd->add_option("--width", g.width, "pixels across")->capture_default_str();
    cmd->add_option("--height", g.height, "pixels down")->capture_default_str();
    cmd->add_option("--threads", g.threads, "render workers (0 = hardware)")
        ->capture_default_str();
}

int run_bounds(const std::string& poly_text, const std::string& m) {
    const Polynomial p = parse_polynomial(poly_text);
    if (m == "best") {
        for (int order : {2, 3, 4}) {
            std::cout << "bound[m=" << order << "] = " << fmt(bound(p, order))
                      << '\n';
        }
        std::cout << "best = " << fmt(best_bound(p)) << '\n';
    } else {
        std::cout << "bound[m=" << m << "] = " << fmt(bound(p, std::stoi(m)))
                  << '\n';
    }
    const Rect square = bounding_square(p);
    std::cout << "square = [" << fmt(square.x_lo) << ", " << fmt(square.x_hi)
              << "] x [" << fmt(square.y_lo) << ", " << fmt(square.y_hi) << "]\n";
    return 0;
}

int run_solve(const SolveFlags& flags) {
    const Polynomial p = parse_polynomial(flags.poly);
    const Method method = parse_method(flags.method, flags.order);
    const SolveOptions opts = to_options(flags);

    std::optional<Complex> seed;
    if (!flags.seed.empty()) {
        seed = parse_complex(flags.seed);
    }

    SolveTrace trace;
    switch (method.family) {
        case Method::Family::Newton: {
            Complex z0;
            if (seed) {
                z0 = *seed;
            } else {
                SplitMix64 rng(opts.rng_seed);
                z0 = rng.next_in_rect(bounding_square(p));
            }
            trace = newton_solve(p, z0, opts);
            break;
        }
        case Method::Family::NewtonEllipsoid:
            trace = newton_ellipsoid_solve(p, seed, opts);
            break;
        case Method::Family::BmEllipsoid:
            trace = bm_ellipsoid_solve(p, seed, method.order, opts);
            break;
    }

    std::cout << "status = " << to_string(trace.status) << '\n';
    if (trace.root) {
        std::cout << "root = " << format_complex(*trace.root) << '\n';
    }
    if (!trace.iterates.empty()) {
        std::cout << "residual = " << fmt(trace.iterates.back().residual) << '\n';
        std::cout << "iterations = " << trace.iterates.back().step << '\n';
    }
    std::cout << "restarts = " << trace.restarts_used << '\n';

    if (!flags.trace_path.empty()) {
        std::ofstream out(flags.trace_path);
        if (!out) {
            throw std::runtime_error("cannot open " + flags.trace_path +
                                     " for writing");
        }
        write_trace_csv(trace, out);
    }
    return trace.status == SolveStatus::Converged ? 0 : 2;
}

int run_roots(const SolveFlags& flags) {
    const Polynomial p = parse_polynomial(flags.poly);
    const RootSet set = all_roots(p, to_options(flags));
    for (const Complex& root : set.roots) {
        std::cout << format_complex(root) << '\n';
    }
    if (!set.complete) {
        std::cerr << "incomplete: found " << set.roots.size() << " of "
                  << p.degree() << " roots\n";
        return 2;
    }
    return 0;
}

int run_render(const SolveFlags& flags, const GridFlags& grid,
               const std::string& out_path, bool print_stats) {
    const Polynomial p = parse_polynomial(flags.poly);
    const Method method = parse_method(flags.method, flags.order);
    const Rect rect = parse_rect(grid.rect);
    const BasinImage img = basin_grid(p, method, rect, grid.width, grid.height,
                                      to_options(flags), grid.threads);
    write_image(img, out_path);
    if (print_stats) {
        write_stats(img, basin_stats(img), std::cout);
    }
    return 0;
}

int run_compare(const SolveFlags& flags, const GridFlags& grid,
                const std::string& methods_csv, const std::string& out_prefix) {
    const Polynomial p = parse_polynomial(flags.poly);
    const Rect rect = parse_rect(grid.rect);

    std::vector<Method> methods;
    std::size_t start = 0;
    while (start <= methods_csv.size()) {
        const std::size_t comma = methods_csv.find(',', start);
        const std::string token =
            methods_csv.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
        if (!token.empty()) {
            methods.push_back(parse_method(token, flags.order));
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (methods.empty()) {
        throw CLI::ValidationError("--methods", "no methods given");
    }

    std::printf("%-22s %12s %12s %12s\n", "method", "divergent", "mean_iter",
                "pixels");
    for (const Method& method : methods) {
        const BasinImage img = basin_grid(p, method, rect, grid.width, grid.height,
                                          to_options(flags), grid.threads);
        const BasinStats stats = basin_stats(img);
        double iter_sum = 0.0;
        std::size_t converged = 0;
        for (std::size_t i = 0; i < stats.pixel_counts.size(); ++i) {
            iter_sum += stats.mean_iterations[i] *
                        static_cast<double>(stats.pixel_counts[i]);
            converged += stats.pixel_counts[i];
        }
        const double mean_iter =
            converged > 0 ? iter_sum / static_cast<double>(converged) : 0.0;
        std::printf("%-22s %12.6f %12.3f %12zu\n", method.name().c_str(),
                    stats.divergent_fraction, mean_iter, converged);
        if (!out_prefix.empty()) {
            std::string suffix = method.name();
            for (char& ch : suffix) {
                if (ch == '(' || ch == ')' || ch == ':') {
                    ch = '_';
                }
            }
            write_image(img, out_prefix + suffix + ".ppm");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial root finding with Newton, higher-order iterations "
                 "and ellipsoid-cut hybrids"};
    app.require_subcommand(1);

    // bounds
    std::string bounds_poly;
    std::string bounds_m = "best";
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "a priori bounds on root moduli");
    bounds_cmd->add_option("--poly", bounds_poly, "polynomial expression")
        ->required();
    bounds_cmd->add_option("--m", bounds_m, "bound order: 2, 3, 4 or best")
        ->check(CLI::IsMember({"2", "3", "4", "best"}))
        ->capture_default_str();

    // solve
    SolveFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "find one root");
    add_solve_flags(solve_cmd, solve_flags, true);
    solve_cmd->add_option("--seed", solve_flags.seed,
                          "starting point, e.g. 1.5-0.5i (random if omitted)");
    solve_cmd->add_option("--trace", solve_flags.trace_path,
                          "write per-iteration CSV to this path");

    // roots
    SolveFlags roots_flags;
    CLI::App* roots_cmd = app.add_subcommand("roots", "find all roots");
    add_solve_flags(roots_cmd, roots_flags, false);

    // render
    SolveFlags render_flags;
    GridFlags render_grid;
    std::string render_out;
    bool render_stats = false;
    CLI::App* render_cmd =
        app.add_subcommand("render", "basin-of-attraction image (binary PPM)");
    add_solve_flags(render_cmd, render_flags, true);
    add_grid_flags(render_cmd, render_grid);
    render_cmd->add_option("--out", render_out, "output .ppm path")->required();
    render_cmd->add_flag("--stats", render_stats, "print key=value stats block");

    // compare
    SolveFlags compare_flags;
    GridFlags compare_grid;
    std::string compare_methods;
    std::string compare_prefix;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "render several methods, print stats table");
    add_solve_flags(compare_cmd, compare_flags, true);
    add_grid_flags(compare_cmd, compare_grid);
    compare_cmd
        ->add_option("--methods", compare_methods,
                     "comma list, e.g. newton,newton-ellipsoid,bm-ellipsoid:3")
        ->required();
    compare_cmd->add_option("--out-prefix", compare_prefix,
                            "also write <prefix><method>.ppm per method");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bounds_cmd->parsed()) {
            return run_bounds(bounds_poly, bounds_m);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve_flags);
        }
        if (roots_cmd->parsed()) {
            return run_roots(roots_flags);
        }
        if (render_cmd->parsed()) {
            return run_render(render_flags, render_grid, render_out, render_stats);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare_flags, compare_grid, compare_methods,
                               compare_prefix);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const IncompleteRootSet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
