#pragma once

#include "kblocked/geometry.hpp"
#include "kblocked/visibility.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kblocked {

// A point configuration with a colour id per point; ids are dense in [0, k).
class ColouredPointSet
{
public:
    ColouredPointSet() = default;
    ColouredPointSet(PointConfig config, std::vector<int> colours);

    const PointConfig& config() const { return config_; }
    const std::vector<int>& colours() const { return colours_; }
    int colour(std::size_t i) const { return colours_[i]; }
    std::size_t size() const { return config_.size(); }
    std::size_t dim() const { return config_.dim(); }
    int colour_count() const { return colour_count_; }

    friend bool operator==(const ColouredPointSet&, const ColouredPointSet&) = default;

private:
    PointConfig config_;
    std::vector<int> colours_;
    int colour_count_ = 0;
};

// Multiset of colour-class sizes, sorted descending.
class KSetSignature
{
public:
    KSetSignature() = default;
    explicit KSetSignature(std::vector<int> sizes);

    // "4,2,2,1" or "{4,2,2,1}"; whitespace ignored.
    static KSetSignature parse(const std::string& text);

    const std::vector<int>& sizes() const { return sizes_; }
    std::size_t k() const { return sizes_.size(); }
    int total() const;
    std::string to_string() const;

    friend bool operator==(const KSetSignature&, const KSetSignature&) = default;
    friend auto operator<=>(const KSetSignature&, const KSetSignature&) = default;

private:
    std::vector<int> sizes_;
};

enum class ViolationKind { VisibleMonochromatic, BlockedBichromatic };

struct Violation
{
    std::size_t i = 0;
    std::size_t j = 0;
    ViolationKind kind = ViolationKind::VisibleMonochromatic;
};

std::string to_string(ViolationKind kind);

struct BlockedReport
{
    bool ok = false;
    std::optional<KSetSignature> signature;
    std::vector<Violation> violations;
};

BlockedReport verify_blocked(const ColouredPointSet& set);
KSetSignature signature(const ColouredPointSet& set);

class NotMultipartite : public std::runtime_error
{
public:
    // i and k are both non-adjacent to j, yet see each other.
    NotMultipartite(std::size_t i, std::size_t j, std::size_t k);
    std::array<std::size_t, 3> witness;
};

// Colours classes of "equal or mutually blocked"; throws NotMultipartite when that
// relation is not transitive. Colour ids follow first occurrence in point order.
ColouredPointSet infer_colouring(const PointConfig& config);
std::vector<int> infer_colouring(const VisibilityGraph& graph);

struct MidpointReport
{
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Requires a blocked input (PreconditionError otherwise).
MidpointReport verify_midpoint_blocked(const ColouredPointSet& set);

struct AuditReport
{
    bool at_most_three_collinear = false;
    bool classes_in_general_position = false;
    // Populated only for 4-coloured sets.
    std::optional<bool> classes_at_most_four;
    std::optional<bool> at_most_twelve_points;
    std::optional<bool> triangles_see_every_colour;
    // First 3-subset (point indices) whose closed hull misses a colour.
    std::optional<std::array<std::size_t, 3>> triangle_witness;

    bool all_pass() const;
};

// Requires a blocked input (PreconditionError otherwise).
AuditReport audit_lemmas(const ColouredPointSet& set);

} // namespace kblocked
