#ifndef POLYELLIP_SOLVER_HPP
#define POLYELLIP_SOLVER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "polyellip/ellipse.hpp"
#include "polyellip/polynomial.hpp"

namespace polyellip {

/// How a solve ended. With a restart budget, exhausting every attempt
/// reports IterationLimit. With restarts disabled (restarts = 0, as in basin
/// rendering) the specific trigger is surfaced: Degenerate for a vanishing
/// denominator, Restarted for an ellipse that hit the area or conditioning
/// floor and wanted a restart it did not have.
enum class SolveStatus { Converged, IterationLimit, Degenerate, Restarted };

const char* to_string(SolveStatus status) noexcept;

struct SolveOptions {
    double eps = 1e-10;        // stop when |p(z)| < eps
    int max_iter = 60;         // steps per attempt
    int restarts = 10;         // extra attempts from fresh random seeds
    std::uint64_t rng_seed = 0;
    double min_area = 1e-24;   // ellipse area floor before a restart
};

/// One row of a solve trace. `step` restarts from zero on every new attempt,
/// so attempt boundaries are visible in the record stream. `area` is the
/// current enclosing-ellipse area; it is absent for plain fixed-point
/// iteration.
struct IterateRecord {
    int step;
    Complex z;
    double residual;
    std::optional<double> area;
};

struct SolveTrace {
    SolveStatus status = SolveStatus::IterationLimit;
    std::vector<IterateRecord> iterates;
    std::optional<Complex> root;  // set iff status == Converged
    int restarts_used = 0;
};

/// Plain Newton orbit z <- z - p(z)/p'(z) from the seed. No restarts; a
/// degenerate derivative at the seed is perturbed once, any later one ends
/// the run with status Degenerate.
SolveTrace newton_solve(const Polynomial& p, Complex z0,
                        const SolveOptions& opts = {});

/// Ellipsoid-cut iteration with the Newton direction:
///   Step 0  bound the roots, cover the bounding square with a disk around
///           the seed (drawn uniformly from the square when z0 is absent);
///   Step 1  stop when |p(center)| < eps;
///   Step 2  a = p(center)/p'(center) defines a central half-space;
///   Step 3  replace the ellipse by the least-area ellipse containing the
///           kept half;
///   Step 4  the new center is the next iterate.
/// The cuts contract the ellipse area by exactly 4/(3 sqrt(3)) per step, so
/// they localize a root linearly; each center additionally gets a bounded
/// 3-step Newton finish, accepted only when it reaches eps, which closes the
/// last few digits quadratically. A degenerate denominator, an area
/// underflow or the per-attempt step limit triggers a restart from a fresh
/// random seed, up to opts.restarts times.
SolveTrace newton_ellipsoid_solve(const Polynomial& p, std::optional<Complex> z0,
                                  const SolveOptions& opts = {});

/// Same loop with the order-m basic family direction as the cut normal,
/// a = p(z) D_{m-2}(z)/D_{m-1}(z). Order 2 reproduces newton_ellipsoid_solve
/// iterate for iterate.
SolveTrace bm_ellipsoid_solve(const Polynomial& p, std::optional<Complex> z0,
                              int order, const SolveOptions& opts = {});

struct RootSet {
    std::vector<Complex> roots;
    bool complete = true;  // false when some stage exhausted its restarts
};

/// All n roots (with multiplicity) by solve / polish / deflate rounds. Each
/// accepted root is refined with 3 Newton steps against the original
/// polynomial before deflation. On failure the roots found so far are
/// returned with complete = false.
RootSet all_roots(const Polynomial& p, const SolveOptions& opts = {});

/// True iff some root theta satisfies a . (theta - z0) <= 1e-12 under the
/// real inner product; the test oracle for the half-space root property of
/// the Newton direction.
bool halfspace_has_root(std::span<const Complex> roots, Complex z0,
                        const CutNormal& a);

/// One CSV record per trace row: k,re,im,residual,area with 17 significant
/// digits; the area field is left empty when absent.
void write_trace_csv(const SolveTrace& trace, std::ostream& os);

}  // namespace polyellip

#endif  // POLYELLIP_SOLVER_HPP
