#pragma once

#include "kblocked/blocked.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace kblocked {

struct SearchSpec
{
    // Candidate points are {0..x_max} x {0..y_max}.
    int x_max = 4;
    int y_max = 4;
    int max_points = 6;
    std::optional<KSetSignature> target;
    bool require_midpoint_blocked = false;
    bool symmetry_reduction = true;
    std::uint64_t node_budget = 100'000'000;
    int parallel_width = 1;
    // Distinct witnesses collected before a targeted search stops.
    int max_witnesses = 1;

    // Throws PreconditionError.
    void validate() const;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string to_string(SearchStatus status);

struct SearchOutcome
{
    SearchStatus status = SearchStatus::Exhausted;
    // Canonical representatives; each re-verified before being returned.
    std::vector<ColouredPointSet> witnesses;
    std::uint64_t nodes_explored = 0;
    std::set<KSetSignature> signatures_found;
};

// Every blocked configuration on the grid with at most max_points points, up to
// translation when symmetry_reduction is on. One witness per signature found.
SearchOutcome enumerate_blocked(const SearchSpec& spec);

// Stops at max_witnesses distinct configurations of signature `target`.
SearchOutcome find_blocked(const KSetSignature& target, const SearchSpec& spec);

// Same search as find_blocked. Exhausted with no witness is grid-bounded evidence that
// the target has no realisation on this grid, nothing more.
SearchOutcome certify_absent(const KSetSignature& target, const SearchSpec& spec);

// Literal definition: i ~ j iff no third point is strictly between them. Test oracle.
VisibilityGraph brute_force_visibility(const PointConfig& config);

// Least image of a planar integer point set under the square's symmetries followed by
// translation to the origin; colours relabelled by first occurrence in point order.
ColouredPointSet canonical_form(const ColouredPointSet& set);

} // namespace kblocked
