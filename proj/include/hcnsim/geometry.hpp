#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace hcnsim {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point& a, const Point& b);
double distance_sq(const Point& a, const Point& b);

// Seeded generator with a deterministic split operation: split(label) derives a
// child stream from (base seed, label) only, independent of how many draws the
// parent has made.  Equal (seed, label) always yields an identical child.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    RandomStream split(std::uint64_t label) const;

    std::uint64_t seed() const { return seed_; }

    double uniform(double lo, double hi);
    std::size_t poisson(double mean);
    bool bernoulli(double prob);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

enum class WindowShape { square, disc };

// Bounded observation window: an axis-aligned square given by center and
// half-width, or a disc given by center and radius.
struct Window {
    WindowShape shape = WindowShape::square;
    Point center{};
    double extent = 1.0;

    static Window square(Point center, double halfwidth);
    static Window disc(Point center, double radius);

    double area() const;
    bool contains(const Point& p) const;
    Point sample_uniform(RandomStream& stream) const;
    Window scaled(double factor, const Point& about) const;
};

bool same_window(const Window& a, const Window& b);

// Tier tag assigned to mobile-station points; base-station tiers use 0..K-1.
inline constexpr int kMsTag = -1;

// Finite realization of a marked planar point process: positions plus integer
// tier tags, with the window they were observed in.
class PointPattern {
public:
    PointPattern(std::vector<Point> points, std::vector<int> tier_tags, Window window);

    static PointPattern empty(Window window);

    const std::vector<Point>& points() const { return points_; }
    const std::vector<int>& tier_tags() const { return tier_tags_; }
    const Window& window() const { return window_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Point> points_;
    std::vector<int> tier_tags_;
    Window window_;
};

PointPattern sample_ppp(double intensity, const Window& window, RandomStream& stream,
                        int tier_tag = 0);

PointPattern superpose(const std::vector<PointPattern>& patterns);

PointPattern thin(const PointPattern& pattern, double retain_prob, RandomStream& stream);

PointPattern scale_pattern(const PointPattern& pattern, double factor, const Point& about);

struct NearestResult {
    std::size_t index = 0;
    Point point{};
    double dist = 0.0;
};

// Nearest point of the pattern to `query`, optionally skipping points exactly
// equal to `exclude`.  Ties break toward the lower index.  Empty search set
// yields nullopt.
std::optional<NearestResult> nearest(const PointPattern& pattern, const Point& query,
                                     std::optional<Point> exclude = std::nullopt);

}  // namespace hcnsim
