#ifndef POLYELLIP_RENDER_HPP
#define POLYELLIP_RENDER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyellip/solver.hpp"

namespace polyellip {

/// Root-finding method selector for basin rendering and comparisons.
struct Method {
    enum class Family { Newton, NewtonEllipsoid, BmEllipsoid };

    Family family = Family::NewtonEllipsoid;
    int order = 2;  // basic family order, used by BmEllipsoid only

    static Method newton() noexcept { return {Family::Newton, 2}; }
    static Method newton_ellipsoid() noexcept { return {Family::NewtonEllipsoid, 2}; }
    static Method bm_ellipsoid(int order) noexcept { return {Family::BmEllipsoid, order}; }

    std::string name() const;
};

/// Per-pixel classification: index into the reference root list (-1 when the
/// orbit did not converge to any root) and the number of steps used.
struct PixelClass {
    std::int32_t root_index = -1;
    std::int32_t iterations = 0;

    bool divergent() const noexcept { return root_index < 0; }
};

/// Basin-of-attraction classification of a rectangle. Pixels are stored
/// row-major with row 0 at the top (highest imaginary coordinate); each
/// pixel's seed is the center of its grid cell.
struct BasinImage {
    int width = 0;
    int height = 0;
    Rect rect{-4.0, -4.0, 4.0, 4.0};
    std::vector<Complex> roots;  // reference roots, (re, im)-sorted
    int max_iter = 60;
    std::vector<PixelClass> pixels;
};

/// All roots of p, sorted lexicographically by (re, im) for stable color
/// assignment. Throws IncompleteRootSet when the search gives up.
std::vector<Complex> reference_roots(const Polynomial& p, const SolveOptions& opts = {});

/// Classifies every grid cell center by running the chosen method from it
/// with restarts disabled (a restart would reassign the seed and corrupt
/// basin semantics). A converged orbit maps to the nearest reference root
/// when within 1e-4 of it, otherwise the pixel is divergent. Pixels are
/// independent; `threads` <= 0 uses the hardware concurrency, and the result
/// is identical for every worker count.
BasinImage basin_grid(const Polynomial& p, const Method& method, const Rect& rect,
                      int width, int height, const SolveOptions& opts = {},
                      int threads = 0);

/// Binary portable pixmap: "P6\n<width> <height>\n255\n" then RGB triples,
/// row-major, top row first. Root k of K gets hue k/K at full saturation,
/// scaled by max(0.35, 1 - iterations/max_iter); divergent pixels are black.
void write_image(const BasinImage& img, const std::filesystem::path& path);

struct BasinStats {
    double divergent_fraction = 0.0;
    std::vector<std::size_t> pixel_counts;   // per root
    std::vector<double> mean_iterations;     // per root, 0 when unused
};

BasinStats basin_stats(const BasinImage& img);

/// Flat key=value text block with the divergent fraction and the per-root
/// positions, pixel counts and mean iteration counts.
void write_stats(const BasinImage& img, const BasinStats& stats, std::ostream& os);

}  // namespace polyellip

#endif  // POLYELLIP_RENDER_HPP
