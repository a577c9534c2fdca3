#pragma once

#include "kblocked/blocked.hpp"

#include <string>
#include <vector>

namespace kblocked {

// Names of the shipped configurations: K11 K12 K111 K112 K122 K222 K4221 K4222 K3333 K3333B.
const std::vector<std::string>& canonical_names();

// Throws PreconditionError for an unknown name.
ColouredPointSet canonical(const std::string& name);

inline constexpr int kMaxGridDimension = 8;

// {0,1,2}^d coloured by the set of axes holding the middle value 1 (colour id = bitmask).
ColouredPointSet grid_3d(int d);

// Adds one new colour class of m in {1,2,3} points that see every old point and are
// blocked from each other by old points. Planar blocked input only.
ColouredPointSet augment(const ColouredPointSet& set, int m);

// Cartesian product with concatenated coordinates; colour (a, b) -> a * k2 + b.
// Both inputs must be midpoint-blocked.
ColouredPointSet product(const ColouredPointSet& first, const ColouredPointSet& second);

// i-fold product of a midpoint-blocked set with itself.
ColouredPointSet power(const ColouredPointSet& set, int i);

// Partition of the vertex pairs of the Turán graph K(n, ..., n) (k classes) into lines.
// Vertex v(i, p) has index i * n + p; a three-vertex line is stored in path order.
struct LineCover
{
    int k = 0;
    int n = 0;
    std::vector<std::vector<int>> lines;

    int vertex(int cls, int pos) const { return cls * n + pos; }
    int vertex_count() const { return k * n; }
};

LineCover turan_lines(int k, int n);

struct LineCoverReport
{
    bool lines_are_edges_or_induced_paths = true;
    bool every_pair_in_exactly_one_line = true;
    bool every_line_has_common_neighbour = true;
    bool lines_partition_edges = true;
    std::size_t pairs_covered = 0;
    std::optional<std::pair<int, int>> witness_pair;

    bool all_pass() const
    {
        return lines_are_edges_or_induced_paths && every_pair_in_exactly_one_line &&
               every_line_has_common_neighbour && lines_partition_edges;
    }
};

// Throws PreconditionError on a malformed cover (line length, indices, repeated vertex).
LineCoverReport verify_line_cover(const LineCover& cover);

} // namespace kblocked
