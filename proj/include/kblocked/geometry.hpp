#pragma once

#include "kblocked/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kblocked {

// A point in Q^d.
struct RationalPoint
{
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
    RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    std::string to_string() const;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

// An ordered list of pairwise distinct points sharing one dimension.
class PointConfig
{
public:
    PointConfig() = default;
    // Throws PreconditionError on mixed dimensions, dim 0 or duplicate points.
    PointConfig(std::size_t dim, std::vector<RationalPoint> points);
    // Dimension taken from the first point; an empty list needs the explicit form.
    explicit PointConfig(std::vector<RationalPoint> points);

    static PointConfig from_integers(const std::vector<std::vector<long>>& rows);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const RationalPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<RationalPoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    std::optional<std::size_t> index_of(const RationalPoint& p) const;

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    void validate() const;

    std::size_t dim_ = 2;
    std::vector<RationalPoint> points_;
};

// Sign of (q - p) x (r - p) for planar points: +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

// True iff x lies strictly inside the segment vw, in any dimension.
bool is_between(const RationalPoint& x, const RationalPoint& v, const RationalPoint& w);

// True iff p, q, r lie on a common line (any dimension; coincident points count as collinear).
bool collinear(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

std::size_t max_collinear(const PointConfig& config);
bool is_general_position(const PointConfig& config);

RationalPoint midpoint(const RationalPoint& v, const RationalPoint& w);

// Number of distinct midpoints over unordered pairs of distinct points.
std::size_t count_midpoints(const PointConfig& config);

// Strict hull vertices, counterclockwise, starting at the lexicographically least point.
std::vector<std::size_t> convex_hull(const PointConfig& config);

// Indices (ascending) of r points in convex position whose hull holds no other point,
// or nullopt when none exists. r must be 4 or 5; the set must be in general position.
std::optional<std::vector<std::size_t>> find_empty_convex_polygon(const PointConfig& config, int r);

// Closed convex hull of a, b, c (possibly degenerate) contains x. Any dimension.
bool in_closed_triangle(const RationalPoint& x, const RationalPoint& a, const RationalPoint& b,
                        const RationalPoint& c);

} // namespace kblocked
