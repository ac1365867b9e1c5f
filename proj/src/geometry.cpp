#include "hcnsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcnsim {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// splitmix64 finalizer; bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double distance_sq(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double distance(const Point& a, const Point& b) {
    return std::sqrt(distance_sq(a, b));
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

RandomStream RandomStream::split(std::uint64_t label) const {
    return RandomStream(mix64(seed_ ^ mix64(label + 0x632be59bd9b4e019ULL)));
}

double RandomStream::uniform(double lo, double hi) {
    require(lo <= hi && std::isfinite(lo) && std::isfinite(hi),
            "uniform bounds must be finite with lo <= hi");
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::size_t RandomStream::poisson(double mean) {
    require(std::isfinite(mean) && mean >= 0.0, "poisson mean must be finite and nonnegative");
    if (mean == 0.0) return 0;
    const long long n = std::poisson_distribution<long long>(mean)(engine_);
    return static_cast<std::size_t>(n);
}

bool RandomStream::bernoulli(double prob) {
    require(prob >= 0.0 && prob <= 1.0, "bernoulli probability must lie in [0, 1]");
    return std::bernoulli_distribution(prob)(engine_);
}

Window Window::square(Point center, double halfwidth) {
    if (!(std::isfinite(halfwidth) && halfwidth > 0.0))
        throw std::invalid_argument("window half-width must be finite and positive");
    return Window{WindowShape::square, center, halfwidth};
}

Window Window::disc(Point center, double radius) {
    if (!(std::isfinite(radius) && radius > 0.0))
        throw std::invalid_argument("window radius must be finite and positive");
    return Window{WindowShape::disc, center, radius};
}

double Window::area() const {
    if (shape == WindowShape::square) return 4.0 * extent * extent;
    return std::numbers::pi * extent * extent;
}

bool Window::contains(const Point& p) const {
    if (shape == WindowShape::square)
        return std::abs(p.x - center.x) <= extent && std::abs(p.y - center.y) <= extent;
    return distance_sq(p, center) <= extent * extent;
}

Point Window::sample_uniform(RandomStream& stream) const {
    if (shape == WindowShape::square) {
        const double x = stream.uniform(center.x - extent, center.x + extent);
        const double y = stream.uniform(center.y - extent, center.y + extent);
        return Point{x, y};
    }
    const double r = extent * std::sqrt(stream.uniform(0.0, 1.0));
    const double theta = stream.uniform(0.0, 2.0 * std::numbers::pi);
    return Point{center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

Window Window::scaled(double factor, const Point& about) const {
    if (!(std::isfinite(factor) && factor > 0.0))
        throw std::invalid_argument("window scale factor must be finite and positive");
    Window out = *this;
    out.center = Point{about.x + factor * (center.x - about.x),
                       about.y + factor * (center.y - about.y)};
    out.extent = factor * extent;
    return out;
}

bool same_window(const Window& a, const Window& b) {
    return a.shape == b.shape && a.center.x == b.center.x && a.center.y == b.center.y &&
           a.extent == b.extent;
}

PointPattern::PointPattern(std::vector<Point> points, std::vector<int> tier_tags, Window window)
    : points_(std::move(points)), tier_tags_(std::move(tier_tags)), window_(window) {
    require(points_.size() == tier_tags_.size(),
            "point pattern needs one tier tag per point");
}

PointPattern PointPattern::empty(Window window) {
    return PointPattern({}, {}, window);
}

PointPattern sample_ppp(double intensity, const Window& window, RandomStream& stream,
                        int tier_tag) {
    require(std::isfinite(intensity) && intensity >= 0.0,
            "point process intensity must be finite and nonnegative");
    const std::size_t n = stream.poisson(intensity * window.area());
    std::vector<Point> points;
    std::vector<int> tags;
    points.reserve(n);
    tags.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back(window.sample_uniform(stream));
        tags.push_back(tier_tag);
    }
    return PointPattern(std::move(points), std::move(tags), window);
}

PointPattern superpose(const std::vector<PointPattern>& patterns) {
    require(!patterns.empty(), "superpose requires at least one pattern");
    const Window& window = patterns.front().window();
    std::size_t total = 0;
    for (const auto& p : patterns) {
        require(same_window(p.window(), window), "superpose requires a shared window");
        total += p.size();
    }
    std::vector<Point> points;
    std::vector<int> tags;
    points.reserve(total);
    tags.reserve(total);
    for (const auto& p : patterns) {
        points.insert(points.end(), p.points().begin(), p.points().end());
        tags.insert(tags.end(), p.tier_tags().begin(), p.tier_tags().end());
    }
    return PointPattern(std::move(points), std::move(tags), window);
}

PointPattern thin(const PointPattern& pattern, double retain_prob, RandomStream& stream) {
    require(retain_prob >= 0.0 && retain_prob <= 1.0,
            "thinning retention probability must lie in [0, 1]");
    std::vector<Point> points;
    std::vector<int> tags;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (stream.bernoulli(retain_prob)) {
            points.push_back(pattern.points()[i]);
            tags.push_back(pattern.tier_tags()[i]);
        }
    }
    return PointPattern(std::move(points), std::move(tags), pattern.window());
}

PointPattern scale_pattern(const PointPattern& pattern, double factor, const Point& about) {
    require(std::isfinite(factor) && factor > 0.0,
            "pattern scale factor must be finite and positive");
    std::vector<Point> points;
    points.reserve(pattern.size());
    for (const auto& p : pattern.points()) {
        points.push_back(Point{about.x + factor * (p.x - about.x),
                               about.y + factor * (p.y - about.y)});
    }
    return PointPattern(std::move(points), pattern.tier_tags(), pattern.window().scaled(factor, about));
}

std::optional<NearestResult> nearest(const PointPattern& pattern, const Point& query,
                                     std::optional<Point> exclude) {
    std::optional<NearestResult> best;
    double best_sq = 0.0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const Point& p = pattern.points()[i];
        if (exclude && p.x == exclude->x && p.y == exclude->y) continue;
        const double d_sq = distance_sq(p, query);
        if (!best || d_sq < best_sq) {
            best = NearestResult{i, p, 0.0};
            best_sq = d_sq;
        }
    }
    if (best) best->dist = std::sqrt(best_sq);
    return best;
}

}  // namespace hcnsim
