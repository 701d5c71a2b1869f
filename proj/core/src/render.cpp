#include "polyellip/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "polyellip/errors.hpp"

namespace polyellip {

namespace {

constexpr double kRootMatchTol = 1e-4;

SolveTrace run_method(const Polynomial& p, const Method& method, Complex seed,
                      const SolveOptions& opts) {
    switch (method.family) {
        case Method::Family::Newton:
            return newton_solve(p, seed, opts);
        case Method::Family::NewtonEllipsoid:
            return newton_ellipsoid_solve(p, seed, opts);
        case Method::Family::BmEllipsoid:
            return bm_ellipsoid_solve(p, seed, method.order, opts);
    }
    throw std::logic_error("unreachable");
}

PixelClass classify(const SolveTrace& trace, const std::vector<Complex>& roots) {
    PixelClass px;
    px.iterations = trace.iterates.empty()
                        ? 0
                        : static_cast<std::int32_t>(trace.iterates.back().step);
    if (trace.status != SolveStatus::Converged) {
        return px;
    }
    const Complex z = *trace.root;
    double best = kRootMatchTol;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double d = std::abs(z - roots[i]);
        if (d <= best) {
            best = d;
            px.root_index = static_cast<std::int32_t>(i);
        }
    }
    return px;
}

struct Rgb {
    std::uint8_t r, g, b;
};

// Hue in [0, 1), full saturation, value in [0, 1].
Rgb hsv_to_rgb(double hue, double value) {
    const double h6 = hue * 6.0;
    const int sector = std::min(5, static_cast<int>(h6));
    const double f = h6 - sector;
    const double q = value * (1.0 - f);
    const double t = value * f;
    double r = 0.0, g = 0.0, b = 0.0;
    switch (sector) {
        case 0: r = value; g = t; break;
        case 1: r = q; g = value; break;
        case 2: g = value; b = t; break;
        case 3: g = q; b = value; break;
        case 4: r = t; b = value; break;
        case 5: r = value; b = q; break;
    }
    const auto byte = [](double c) {
        return static_cast<std::uint8_t>(std::lround(255.0 * c));
    };
    return {byte(r), byte(g), byte(b)};
}

}  // namespace

std::string Method::name() const {
    switch (family) {
        case Family::Newton:
            return "newton";
        case Family::NewtonEllipsoid:
            return "newton-ellipsoid";
        case Family::BmEllipsoid:
            return "bm-ellipsoid(" + std::to_string(order) + ")";
    }
    return "unknown";
}

std::vector<Complex> reference_roots(const Polynomial& p, const SolveOptions& opts) {
    RootSet set = all_roots(p, opts);
    if (!set.complete) {
        throw IncompleteRootSet("found " + std::to_string(set.roots.size()) +
                                " of " + std::to_string(p.degree()) + " roots");
    }
    std::sort(set.roots.begin(), set.roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return set.roots;
}

BasinImage basin_grid(const Polynomial& p, const Method& method, const Rect& rect,
                      int width, int height, const SolveOptions& opts, int threads) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (!(rect.x_lo < rect.x_hi) || !(rect.y_lo < rect.y_hi)) {
        throw std::invalid_argument("rectangle must have positive extent");
    }

    BasinImage img;
    img.width = width;
    img.height = height;
    img.rect = rect;
    img.roots = reference_roots(p, opts);
    img.max_iter = opts.max_iter;
    img.pixels.assign(static_cast<std::size_t>(width) * height, PixelClass{});

    SolveOptions pixel_opts = opts;
    pixel_opts.restarts = 0;  // basin semantics: the seed is the pixel

    const double dx = rect.width() / width;
    const double dy = rect.height() / height;

    const auto render_rows = [&](int row_begin, int row_end) {
        for (int j = row_begin; j < row_end; ++j) {
            const double y = rect.y_hi - (j + 0.5) * dy;
            for (int i = 0; i < width; ++i) {
                const double x = rect.x_lo + (i + 0.5) * dx;
                const SolveTrace trace =
                    run_method(p, method, Complex{x, y}, pixel_opts);
                img.pixels[static_cast<std::size_t>(j) * width + i] =
                    classify(trace, img.roots);
            }
        }
    };

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, height);
    if (workers == 1) {
        render_rows(0, height);
        return img;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    const int rows_per_worker = (height + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * rows_per_worker;
        const int end = std::min(height, begin + rows_per_worker);
        pool.emplace_back([&, w, begin, end] {
            try {
                render_rows(begin, end);
            } catch (...) {
                failures[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& e : failures) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return img;
}

void write_image(const BasinImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << "P6\n" << img.width << " " << img.height << "\n255\n";

    const std::size_t root_count = img.roots.size();
    std::vector<char> row(static_cast<std::size_t>(img.width) * 3);
    for (int j = 0; j < img.height; ++j) {
        for (int i = 0; i < img.width; ++i) {
            const PixelClass& px =
                img.pixels[static_cast<std::size_t>(j) * img.width + i];
            Rgb rgb{0, 0, 0};
            if (!px.divergent() && root_count > 0) {
                const double hue = static_cast<double>(px.root_index) /
                                   static_cast<double>(root_count);
                const double brightness = std::max(
                    0.35, 1.0 - static_cast<double>(px.iterations) /
                                    static_cast<double>(std::max(1, img.max_iter)));
                rgb = hsv_to_rgb(hue, brightness);
            }
            row[static_cast<std::size_t>(i) * 3] = static_cast<char>(rgb.r);
            row[static_cast<std::size_t>(i) * 3 + 1] = static_cast<char>(rgb.g);
            row[static_cast<std::size_t>(i) * 3 + 2] = static_cast<char>(rgb.b);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
    if (!out) {
        throw std::runtime_error("short write to " + path.string());
    }
}

BasinStats basin_stats(const BasinImage& img) {
    BasinStats stats;
    stats.pixel_counts.assign(img.roots.size(), 0);
    stats.mean_iterations.assign(img.roots.size(), 0.0);
    std::size_t divergent = 0;
    for (const PixelClass& px : img.pixels) {
        if (px.divergent()) {
            ++divergent;
        } else {
            const auto idx = static_cast<std::size_t>(px.root_index);
            ++stats.pixel_counts[idx];
            stats.mean_iterations[idx] += px.iterations;
        }
    }
    for (std::size_t i = 0; i < stats.pixel_counts.size(); ++i) {
        if (stats.pixel_counts[i] > 0) {
            stats.mean_iterations[i] /= static_cast<double>(stats.pixel_counts[i]);
        }
    }
    stats.divergent_fraction =
        img.pixels.empty()
            ? 0.0
            : static_cast<double>(divergent) / static_cast<double>(img.pixels.size());
    return stats;
}

void write_stats(const BasinImage& img, const BasinStats& stats, std::ostream& os) {
    char buf[64];
    const auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << key << '=' << buf << '\n';
    };
    os << "width=" << img.width << '\n';
    os << "height=" << img.height << '\n';
    os << "roots=" << img.roots.size() << '\n';
    put("divergent_fraction", stats.divergent_fraction);
    for (std::size_t i = 0; i < img.roots.size(); ++i) {
        char re[32], im[32];
        std::snprintf(re, sizeof re, "%.17g", img.roots[i].real());
        std::snprintf(im, sizeof im, "%.17g", img.roots[i].imag());
        os << "root_" << i << '=' << re << (img.roots[i].imag() < 0.0 ? "" : "+")
           << im << "i\n";
        os << "pixels_" << i << '=' << stats.pixel_counts[i] << '\n';
        put(("mean_iterations_" + std::to_string(i)).c_str(), stats.mean_iterations[i]);
    }
}

}  // namespace polyellip
