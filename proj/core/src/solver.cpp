#include "polyellip/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "polyellip/basic_family.hpp"
#include "polyellip/errors.hpp"
#include "polyellip/root_bounds.hpp"
#include "polyellip/splitmix.hpp"

namespace polyellip {

namespace {

constexpr double kDetFloor = 1e-280;  // conditioning guard on det(B)

const Complex kPerturbDir{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

void validate(const Polynomial& p, const SolveOptions& opts) {
    if (p.degree() < 1) {
        throw std::invalid_argument("solver needs degree >= 1");
    }
    if (!(opts.eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    if (opts.max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
    if (opts.restarts < 0 || !(opts.min_area >= 0.0)) {
        throw std::invalid_argument("invalid solve options");
    }
}

bool finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

enum class SegmentEnd { Converged, IterationLimit, Degenerate, AreaFloor };

// Bounded order-m fixed-point finish from a center. The cut loop contracts
// the enclosing ellipse by the fixed factor 4/(3 sqrt(3)) per step, so it
// localizes a root linearly; once the center is close, a few B_m steps close
// the remaining gap at order m. Accepted only at full tolerance.
bool try_finish(const Polynomial& p, Complex center, int order,
                const SolveOptions& opts, Complex& out) {
    Complex w = center;
    for (int i = 0; i < 3; ++i) {
        try {
            w = b_m_step(p, w, order);
        } catch (const DegenerateDenominator&) {
            return false;
        }
        if (!finite(w)) {
            return false;
        }
        if (std::abs(p.eval(w)) < opts.eps) {
            out = w;
            return true;
        }
    }
    return false;
}

// One attempt of the ellipsoid loop from a fixed seed. Appends its records
// to `recs`; step numbering starts at zero.
SegmentEnd run_segment(const Polynomial& p, Complex seed, int order,
                       const SolveOptions& opts, const Rect& square,
                       std::vector<IterateRecord>& recs, Complex& final_z) {
    bool perturbed = false;
    Complex z = seed;
    Ellipse2 ellipse = initial_disk(square, z);
    int k = 0;
    while (true) {
        const double residual = finite(z) ? std::abs(p.eval(z))
                                          : std::numeric_limits<double>::infinity();
        recs.push_back({k, z, residual, ellipse.area()});
        final_z = z;
        if (!std::isfinite(residual)) {
            return SegmentEnd::Degenerate;
        }
        if (residual < opts.eps) {
            return SegmentEnd::Converged;
        }
        if (k == opts.max_iter) {
            return SegmentEnd::IterationLimit;
        }
        if (Complex root{}; try_finish(p, z, order, opts, root)) {
            recs.push_back({k + 1, root, std::abs(p.eval(root)), std::nullopt});
            final_z = root;
            return SegmentEnd::Converged;
        }
        if (ellipse.area() < opts.min_area || ellipse.det() < kDetFloor) {
            return SegmentEnd::AreaFloor;
        }
        Complex normal;
        try {
            normal = -family_direction(p, z, order);
        } catch (const DegenerateDenominator&) {
            if (k == 0 && !perturbed) {
                // Critical point exactly at the seed: nudge once, then give up.
                perturbed = true;
                z += 1e-8 * (1.0 + std::abs(z)) * kPerturbDir;
                ellipse = initial_disk(square, z);
                continue;
            }
            return SegmentEnd::Degenerate;
        }
        if (!finite(normal)) {
            return SegmentEnd::Degenerate;
        }
        try {
            ellipse = ellipse.cut(CutNormal::from(normal));
        } catch (const DegenerateNormal&) {
            return SegmentEnd::Degenerate;
        }
        z = ellipse.center();
        ++k;
    }
}

void format_double(char* buf, std::size_t cap, double v) {
    std::snprintf(buf, cap, "%.17g", v);
}

}  // namespace

const char* to_string(SolveStatus status) noexcept {
    switch (status) {
        case SolveStatus::Converged:
            return "Converged";
        case SolveStatus::IterationLimit:
            return "IterationLimit";
        case SolveStatus::Degenerate:
            return "Degenerate";
        case SolveStatus::Restarted:
            return "Restarted";
    }
    return "unknown";
}

SolveTrace newton_solve(const Polynomial& p, Complex z0, const SolveOptions& opts) {
    validate(p, opts);
    SolveTrace trace;
    bool perturbed = false;
    Complex z = z0;
    int k = 0;
    while (true) {
        const double residual = finite(z) ? std::abs(p.eval(z))
                                          : std::numeric_limits<double>::infinity();
        trace.iterates.push_back({k, z, residual, std::nullopt});
        if (!std::isfinite(residual)) {
            trace.status = SolveStatus::Degenerate;
            return trace;
        }
        if (residual < opts.eps) {
            trace.status = SolveStatus::Converged;
            trace.root = z;
            return trace;
        }
        if (k == opts.max_iter) {
            trace.status = SolveStatus::IterationLimit;
            return trace;
        }
        try {
            z = b_m_step(p, z, 2);
        } catch (const DegenerateDenominator&) {
            if (k == 0 && !perturbed) {
                perturbed = true;
                z += 1e-8 * (1.0 + std::abs(z)) * kPerturbDir;
                continue;
            }
            trace.status = SolveStatus::Degenerate;
            return trace;
        }
        ++k;
    }
}

SolveTrace bm_ellipsoid_solve(const Polynomial& p, std::optional<Complex> z0,
                              int order, const SolveOptions& opts) {
    validate(p, opts);
    if (order < 2) {
        throw std::invalid_argument("basic family order must be at least 2");
    }
    const Rect square = bounding_square(p);
    SplitMix64 rng(opts.rng_seed);

    SolveTrace trace;
    SegmentEnd last = SegmentEnd::IterationLimit;
    const int attempts = opts.restarts + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const Complex seed = (attempt == 0 && z0.has_value())
                                 ? *z0
                                 : rng.next_in_rect(square);
        Complex final_z{0.0, 0.0};
        last = run_segment(p, seed, order, opts, square, trace.iterates, final_z);
        if (last == SegmentEnd::Converged) {
            trace.status = SolveStatus::Converged;
            trace.root = final_z;
            trace.restarts_used = attempt;
            return trace;
        }
    }
    trace.restarts_used = opts.restarts;
    if (opts.restarts > 0) {
        trace.status = SolveStatus::IterationLimit;
    } else {
        switch (last) {
            case SegmentEnd::Degenerate:
                trace.status = SolveStatus::Degenerate;
                break;
            case SegmentEnd::AreaFloor:
                trace.status = SolveStatus::Restarted;
                break;
            default:
                trace.status = SolveStatus::IterationLimit;
                break;
        }
    }
    return trace;
}

SolveTrace newton_ellipsoid_solve(const Polynomial& p, std::optional<Complex> z0,
                                  const SolveOptions& opts) {
    return bm_ellipsoid_solve(p, z0, 2, opts);
}

namespace {

// Three guarded Newton refinement steps against the original polynomial;
// keeps the best residual seen.
Complex polish_root(const Polynomial& p, Complex z) {
    Complex best = z;
    double best_residual = std::abs(p.eval(z));
    for (int i = 0; i < 3; ++i) {
        try {
            z = b_m_step(p, z, 2);
        } catch (const DegenerateDenominator&) {
            break;
        }
        if (!finite(z)) {
            break;
        }
        const double residual = std::abs(p.eval(z));
        if (residual <= best_residual) {
            best = z;
            best_residual = residual;
        }
    }
    return best;
}

}  // namespace

RootSet all_roots(const Polynomial& p, const SolveOptions& opts) {
    validate(p, opts);
    RootSet out;
    out.roots.reserve(static_cast<std::size_t>(p.degree()));
    Polynomial reduced = p;
    std::uint64_t stage_seed = opts.rng_seed;
    while (reduced.degree() >= 1) {
        SolveOptions stage_opts = opts;
        stage_opts.rng_seed = stage_seed;
        // Distinct deterministic stream per deflation stage.
        stage_seed += 0x9E3779B97F4A7C15ULL;
        const SolveTrace trace = newton_ellipsoid_solve(reduced, std::nullopt, stage_opts);
        if (trace.status != SolveStatus::Converged) {
            out.complete = false;
            return out;
        }
        const Complex theta = polish_root(p, *trace.root);
        out.roots.push_back(theta);
        reduced = reduced.deflate(theta);
    }
    return out;
}

bool halfspace_has_root(std::span<const Complex> roots, Complex z0,
                        const CutNormal& a) {
    if (roots.empty()) {
        throw std::invalid_argument("halfspace_has_root needs at least one root");
    }
    for (const Complex& theta : roots) {
        const double inner = a.x * (theta.real() - z0.real()) +
                             a.y * (theta.imag() - z0.imag());
        if (inner <= 1e-12) {
            return true;
        }
    }
    return false;
}

void write_trace_csv(const SolveTrace& trace, std::ostream& os) {
    char buf[64];
    for (const IterateRecord& rec : trace.iterates) {
        os << rec.step << ',';
        format_double(buf, sizeof buf, rec.z.real());
        os << buf << ',';
        format_double(buf, sizeof buf, rec.z.imag());
        os << buf << ',';
        format_double(buf, sizeof buf, rec.residual);
        os << buf << ',';
        if (rec.area.has_value()) {
            format_double(buf, sizeof buf, *rec.area);
            os << buf;
        }
        os << '\n';
    }
}

}  // namespace polyellip
