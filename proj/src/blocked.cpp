#include "kblocked/blocked.hpp"

#include "kblocked/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace kblocked {

ColouredPointSet::ColouredPointSet(PointConfig config, std::vector<int> colours)
    : config_(std::move(config)), colours_(std::move(colours))
{
    if (colours_.size() != config_.size())
        throw PreconditionError("colour list length differs from point count");
    std::set<int> used(colours_.begin(), colours_.end());
    colour_count_ = static_cast<int>(used.size());
    for (int c : used)
        if (c < 0 || c >= colour_count_) throw PreconditionError("colour ids must be dense in [0, k)");
}

KSetSignature::KSetSignature(std::vector<int> sizes) : sizes_(std::move(sizes))
{
    for (int s : sizes_)
        if (s <= 0) throw PreconditionError("signature entries must be positive");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

KSetSignature KSetSignature::parse(const std::string& text)
{
    std::string cleaned;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') cleaned += ch;
    std::vector<int> sizes;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw PreconditionError("malformed signature '" + text + "'");
        sizes.push_back(std::stoi(item));
    }
    if (sizes.empty()) throw PreconditionError("empty signature");
    return KSetSignature(std::move(sizes));
}

int KSetSignature::total() const
{
    int t = 0;
    for (int s : sizes_) t += s;
    return t;
}

std::string KSetSignature::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes_[i]);
    }
    return s + "}";
}

std::string to_string(ViolationKind kind)
{
    return kind == ViolationKind::VisibleMonochromatic ? "visible-monochromatic" : "blocked-bichromatic";
}

KSetSignature signature(const ColouredPointSet& set)
{
    std::vector<int> sizes(set.colour_count(), 0);
    for (int c : set.colours()) ++sizes[c];
    if (sizes.empty()) return KSetSignature();
    return KSetSignature(std::move(sizes));
}

BlockedReport verify_blocked(const ColouredPointSet& set)
{
    BlockedReport report;
    const auto graph = visibility_graph(set.config());
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            bool same = set.colour(i) == set.colour(j);
            bool visible = graph.adjacent(i, j);
            if (same && visible) report.violations.push_back({i, j, ViolationKind::VisibleMonochromatic});
            if (!same && !visible) report.violations.push_back({i, j, ViolationKind::BlockedBichromatic});
        }
    }
    report.ok = report.violations.empty();
    if (report.ok) report.signature = signature(set);
    return report;
}

NotMultipartite::NotMultipartite(std::size_t i, std::size_t j, std::size_t k)
    : std::runtime_error("visibility graph is not complete multipartite: points " + std::to_string(i) + " and " +
                         std::to_string(k) + " are both blocked from " + std::to_string(j) +
                         " but see each other"),
      witness{i, j, k}
{
}

std::vector<int> infer_colouring(const VisibilityGraph& graph)
{
    const std::size_t n = graph.size();
    std::vector<int> colour(n, -1);
    int next = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!graph.adjacent(i, j)) {
                colour[j] = colour[i];
                break;
            }
        }
        if (colour[j] < 0) colour[j] = next++;
    }
    bool consistent = true;
    for (std::size_t i = 0; i < n && consistent; ++i)
        for (std::size_t j = i + 1; j < n && consistent; ++j)
            if ((colour[i] == colour[j]) == graph.adjacent(i, j)) consistent = false;
    if (consistent) return colour;

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
                if (i != j && k != j && !graph.adjacent(i, j) && !graph.adjacent(j, k) && graph.adjacent(i, k))
                    throw NotMultipartite(i, j, k);
    throw std::logic_error("infer_colouring: inconsistent classes without a witness triple");
}

ColouredPointSet infer_colouring(const PointConfig& config)
{
    return ColouredPointSet(config, infer_colouring(visibility_graph(config)));
}

MidpointReport verify_midpoint_blocked(const ColouredPointSet& set)
{
    if (!verify_blocked(set).ok) throw PreconditionError("verify_midpoint_blocked needs a blocked set");
    std::set<RationalPoint> members(set.config().begin(), set.config().end());
    MidpointReport report;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set.colour(i) != set.colour(j)) continue;
            if (!members.count(midpoint(set.config()[i], set.config()[j]))) {
                report.ok = false;
                report.failing_pair = std::make_pair(i, j);
                return report;
            }
        }
    }
    return report;
}

bool AuditReport::all_pass() const
{
    auto ok = [](const std::optional<bool>& b) { return !b || *b; };
    return at_most_three_collinear && classes_in_general_position && ok(classes_at_most_four) &&
           ok(at_most_twelve_points) && ok(triangles_see_every_colour);
}

AuditReport audit_lemmas(const ColouredPointSet& set)
{
    if (!verify_blocked(set).ok) throw PreconditionError("audit_lemmas needs a blocked set");
    const int k = set.colour_count();
    std::vector<std::vector<std::size_t>> classes(k);
    for (std::size_t i = 0; i < set.size(); ++i) classes[set.colour(i)].push_back(i);

    AuditReport audit;
    audit.at_most_three_collinear = max_collinear(set.config()) <= 3;
    audit.classes_in_general_position = true;
    for (const auto& cls : classes) {
        std::vector<RationalPoint> pts;
        for (auto i : cls) pts.push_back(set.config()[i]);
        if (!is_general_position(PointConfig(set.dim(), std::move(pts)))) audit.classes_in_general_position = false;
    }
    if (k != 4) return audit;

    audit.classes_at_most_four = std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() <= 4; });
    audit.at_most_twelve_points = set.size() <= 12;
    audit.triangles_see_every_colour = true;
    const auto& pts = set.config();
    for (const auto& cls : classes) {
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                for (std::size_t c = b + 1; c < cls.size(); ++c) {
                    std::vector<bool> seen(k, false);
                    for (std::size_t x = 0; x < set.size(); ++x)
                        if (in_closed_triangle(pts[x], pts[cls[a]], pts[cls[b]], pts[cls[c]])) seen[set.colour(x)] = true;
                    if (std::find(seen.begin(), seen.end(), false) != seen.end() && !audit.triangle_witness) {
                        audit.triangles_see_every_colour = false;
                        audit.triangle_witness = std::array<std::size_t, 3>{cls[a], cls[b], cls[c]};
                    }
                }
    }
    return audit;
}

} // namespace kblocked
