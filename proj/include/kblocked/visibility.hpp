#pragma once

#include "kblocked/geometry.hpp"

#include <cstdint>
#include <vector>

namespace kblocked {

// Symmetric, irreflexive adjacency over point indices: i ~ j iff the points see each other.
class VisibilityGraph
{
public:
    VisibilityGraph() = default;
    explicit VisibilityGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t size() const { return n_; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
    void set_adjacent(std::size_t i, std::size_t j, bool value);
    std::size_t edge_count() const;

    friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// Indices of every point strictly inside segment (i, j).
std::vector<std::size_t> blockers(const PointConfig& config, std::size_t i, std::size_t j);

VisibilityGraph visibility_graph(const PointConfig& config);

// blocks[(i*n + j)*n + k] is true iff point k lies strictly between points i and j.
std::vector<std::uint8_t> blocking_relation(const PointConfig& config);

// True iff every pair of points of `points` is blocked by some point of points ∪ blockers.
bool is_blocking_set(const PointConfig& points, const PointConfig& blockers);

struct Projection
{
    PointConfig image;
    // Row-major 2 x d matrix applied to every point.
    std::vector<Rational> matrix;
    // correspondence[k] is the image index of source point k (always k).
    std::vector<std::size_t> correspondence;
    int attempts = 0;
};

inline constexpr int kProjectionAttempts = 64;

// Linear map R^d -> R^2 whose entries are n / 2^31 with n in [-2^31, 2^31], read from
// std::mt19937_64 seeded with `seed`: each entry consumes one 64-bit draw x and takes
// n = (x mod (2^32 + 1)) - 2^31, filling the matrix row by row. Attempts are retried
// until images are distinct and the strict-betweenness relation is unchanged.
// Throws BudgetExhausted after kProjectionAttempts attempts.
Projection occlusion_free_projection(const PointConfig& config, std::uint64_t seed);

} // namespace kblocked
