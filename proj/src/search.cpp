#include "kblocked/search.hpp"

#include "kblocked/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace kblocked {

void SearchSpec::validate() const
{
    if (x_max < 1 || y_max < 1) throw PreconditionError("grid bounds must be at least 1");
    if ((x_max + 1) * (y_max + 1) > 4096) throw PreconditionError("grid too large");
    if (max_points < 1) throw PreconditionError("max_points must be at least 1");
    if (node_budget < 1) throw PreconditionError("node_budget must be at least 1");
    if (parallel_width < 1) throw PreconditionError("parallel_width must be at least 1");
    if (max_witnesses < 1) throw PreconditionError("max_witnesses must be at least 1");
}

std::string to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

using GridPoint = std::array<int, 2>;

struct CanonicalKey
{
    std::vector<GridPoint> points;
    std::vector<int> colours;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const std::vector<GridPoint>& pts, const std::vector<int>& colours)
{
    CanonicalKey best;
    bool have = false;
    for (int t = 0; t < 8; ++t) {
        std::vector<std::pair<GridPoint, int>> image;
        image.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int x = pts[i][0], y = pts[i][1];
            if (t & 4) std::swap(x, y);
            if (t & 1) x = -x;
            if (t & 2) y = -y;
            image.push_back({{x, y}, colours[i]});
        }
        int mx = image[0].first[0], my = image[0].first[1];
        for (const auto& [p, c] : image) {
            mx = std::min(mx, p[0]);
            my = std::min(my, p[1]);
        }
        for (auto& [p, c] : image) {
            p[0] -= mx;
            p[1] -= my;
        }
        std::sort(image.begin(), image.end());
        CanonicalKey key;
        std::map<int, int> relabel;
        for (const auto& [p, c] : image) {
            key.points.push_back(p);
            auto it = relabel.try_emplace(c, static_cast<int>(relabel.size())).first;
            key.colours.push_back(it->second);
        }
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
    }
    return best;
}

ColouredPointSet to_coloured(const CanonicalKey& key)
{
    std::vector<RationalPoint> pts;
    for (const auto& p : key.points) pts.push_back(RationalPoint{Rational(p[0]), Rational(p[1])});
    return ColouredPointSet(PointConfig(2, std::move(pts)), key.colours);
}

// Precomputed incidence data for the candidate grid.
class Grid
{
public:
    Grid(int x_max, int y_max) : width_(x_max + 1), height_(y_max + 1), count_(width_ * height_)
    {
        between_start_.assign(static_cast<std::size_t>(count_) * count_ + 1, 0);
        midpoint_.assign(static_cast<std::size_t>(count_) * count_, -1);
        for (int i = 0; i < count_; ++i) {
            for (int j = 0; j < count_; ++j) {
                between_start_[i * count_ + j] = static_cast<int>(between_.size());
                if (i == j) continue;
                auto [ax, ay] = point(i);
                auto [bx, by] = point(j);
                int dx = bx - ax, dy = by - ay;
                int g = std::gcd(std::abs(dx), std::abs(dy));
                for (int s = 1; s < g; ++s) between_.push_back(index(ax + dx / g * s, ay + dy / g * s));
                if (dx % 2 == 0 && dy % 2 == 0) midpoint_[i * count_ + j] = index(ax + dx / 2, ay + dy / 2);
            }
        }
        between_start_[static_cast<std::size_t>(count_) * count_] = static_cast<int>(between_.size());
    }

    int count() const { return count_; }
    int index(int x, int y) const { return x * height_ + y; }
    GridPoint point(int i) const { return {i / height_, i % height_}; }
    int height() const { return height_; }

    // Grid points strictly inside segment (i, j).
    std::pair<const int*, const int*> between(int i, int j) const
    {
        std::size_t at = static_cast<std::size_t>(i) * count_ + j;
        return {between_.data() + between_start_[at], between_.data() + between_start_[at + 1]};
    }
    int midpoint(int i, int j) const { return midpoint_[static_cast<std::size_t>(i) * count_ + j]; }

private:
    int width_, height_, count_;
    std::vector<int> between_start_;
    std::vector<int> between_;
    std::vector<int> midpoint_;
};

// Partial configuration built in increasing grid-index (lexicographic) order.
//
// Every blocker of a pair lies lexicographically between its endpoints, so once a pair
// is placed its blocking status can never change: a later point cannot land between
// two earlier points, and a visible pair cannot be blocked later. The visibility graph
// of a prefix is therefore an induced subgraph of every completion's graph, and
// complete multipartiteness (with the colour-class bounds) is checked per prefix.
class Kernel
{
public:
    Kernel(const Grid& grid, const SearchSpec& spec) : grid_(grid), spec_(spec), in_set_(grid.count(), 0)
    {
        if (spec.target) {
            target_sizes_ = spec.target->sizes();
            target_total_ = spec.target->total();
        }
    }

    // Tries to place z (greater than every placed index). On success the point is placed.
    bool push(int z)
    {
        if (static_cast<int>(chosen_.size()) >= spec_.max_points) return false;
        blocked_scratch_.clear();
        for (std::size_t s = 0; s < chosen_.size(); ++s) {
            auto [first, last] = grid_.between(chosen_[s], z);
            for (const int* b = first; b != last; ++b) {
                if (in_set_[*b]) {
                    blocked_scratch_.push_back(s);
                    break;
                }
            }
        }

        int cls;
        if (blocked_scratch_.empty()) {
            cls = static_cast<int>(class_sizes_.size());
            if (spec_.target && cls + 1 > static_cast<int>(target_sizes_.size())) return false;
        } else {
            // z is blocked from some point of class c: it must join c, so it must be blocked
            // from all of c and see everybody else. Four collinear points fail here too.
            cls = class_of_[blocked_scratch_[0]];
            if (static_cast<int>(blocked_scratch_.size()) != class_sizes_[cls]) return false;
            for (std::size_t s : blocked_scratch_)
                if (class_of_[s] != cls) return false;
            if (spec_.require_midpoint_blocked) {
                for (std::size_t s : blocked_scratch_) {
                    int m = grid_.midpoint(chosen_[s], z);
                    if (m < 0 || !in_set_[m]) return false;
                }
            }
        }

        if (cls == static_cast<int>(class_sizes_.size()))
            class_sizes_.push_back(1);
        else
            ++class_sizes_[cls];
        if (spec_.target && !dominated()) {
            if (--class_sizes_[cls] == 0) class_sizes_.pop_back();
            return false;
        }
        chosen_.push_back(z);
        class_of_.push_back(cls);
        in_set_[z] = 1;
        if (grid_.point(z)[1] == 0) ++on_bottom_row_;
        return true;
    }

    void pop()
    {
        int z = chosen_.back();
        int cls = class_of_.back();
        chosen_.pop_back();
        class_of_.pop_back();
        in_set_[z] = 0;
        if (grid_.point(z)[1] == 0) --on_bottom_row_;
        if (--class_sizes_[cls] == 0) class_sizes_.pop_back();
    }

    std::size_t size() const { return chosen_.size(); }
    int last() const { return chosen_.empty() ? -1 : chosen_.back(); }
    bool touches_bottom_row() const { return on_bottom_row_ > 0; }

    KSetSignature signature() const { return KSetSignature(class_sizes_); }
    bool matches_target() const
    {
        if (!spec_.target || static_cast<int>(chosen_.size()) != target_total_) return false;
        return signature() == *spec_.target;
    }
    int target_total() const { return target_total_; }

    CanonicalKey key() const
    {
        std::vector<GridPoint> pts;
        for (int z : chosen_) pts.push_back(grid_.point(z));
        return canonical_key(pts, class_of_);
    }

private:
    // Sorted class sizes bounded entrywise by the sorted target.
    bool dominated() const
    {
        std::array<int, 64> sorted{};
        std::size_t k = class_sizes_.size();
        if (k > target_sizes_.size() || k > sorted.size()) return false;
        std::copy(class_sizes_.begin(), class_sizes_.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + k, std::greater<>());
        for (std::size_t i = 0; i < k; ++i)
            if (sorted[i] > target_sizes_[i]) return false;
        return true;
    }

    const Grid& grid_;
    const SearchSpec& spec_;
    std::vector<char> in_set_;
    std::vector<int> chosen_;
    std::vector<int> class_of_;
    std::vector<int> class_sizes_;
    std::vector<std::size_t> blocked_scratch_;
    std::vector<int> target_sizes_;
    int target_total_ = 0;
    int on_bottom_row_ = 0;
};

// A subtree rooted at one or two fixed placements.
struct Task
{
    int first = -1;
    int second = -1;
};

struct TaskResult
{
    std::uint64_t nodes = 0;
    bool over_budget = false;
    bool cancelled = false;
    std::map<KSetSignature, CanonicalKey> first_by_signature;
    std::vector<CanonicalKey> hits;
};

class Search
{
public:
    explicit Search(const SearchSpec& spec) : spec_(validated(spec)), grid_(spec.x_max, spec.y_max) {}

    SearchOutcome run()
    {

        // Up to translation, the lexicographically first point sits in column x = 0.
        const int first_limit = spec_.symmetry_reduction ? grid_.height() : grid_.count();
        for (int a = 0; a < first_limit; ++a) {
            tasks_.push_back({a, -1});
            if (spec_.max_points >= 2)
                for (int b = a + 1; b < grid_.count(); ++b) tasks_.push_back({a, b});
        }
        results_.assign(tasks_.size(), {});
        done_.assign(tasks_.size(), 0);

        std::vector<std::thread> workers;
        for (int w = 1; w < spec_.parallel_width; ++w) workers.emplace_back([this] { work(); });
        work();
        for (auto& t : workers) t.join();
        return merge();
    }

private:
    static const SearchSpec& validated(const SearchSpec& spec)
    {
        spec.validate();
        if (spec.target && spec.target->total() > spec.max_points)
            throw PreconditionError("target signature exceeds max_points");
        return spec;
    }

    void work()
    {
        for (;;) {
            std::size_t i = next_.fetch_add(1);
            if (i >= tasks_.size()) return;
            if (i > cancel_after_.load()) {
                results_[i].cancelled = true;
            } else {
                results_[i] = run_task(i);
            }
            settle(i);
        }
    }

    // Folds finished tasks into the outcome strictly in task order. Once the merged prefix
    // decides the outcome, later tasks are cancelled; their results would be discarded.
    void settle(std::size_t i)
    {
        std::lock_guard lock(mutex_);
        done_[i] = 1;
        while (!stopped_ && frontier_ < tasks_.size() && done_[frontier_]) {
            auto& r = results_[frontier_];
            if (r.cancelled) throw std::logic_error("search merge reached a cancelled subtree");
            merged_nodes_ += r.nodes;
            for (auto& [sig, key] : r.first_by_signature) merged_signatures_.try_emplace(sig, std::move(key));
            for (auto& key : r.hits)
                if (std::find(merged_hits_.begin(), merged_hits_.end(), key) == merged_hits_.end())
                    merged_hits_.push_back(std::move(key));
            r = TaskResult{};
            if (results_overflow(frontier_)) over_budget_ = true;
            stopped_ = over_budget_ ||
                       (spec_.target && merged_hits_.size() >= static_cast<std::size_t>(spec_.max_witnesses));
            if (stopped_) cancel_after_.store(frontier_);
            ++frontier_;
        }
    }

    bool results_overflow(std::size_t i) const { return results_[i].over_budget || merged_nodes_ > spec_.node_budget; }

    TaskResult run_task(std::size_t index)
    {
        const Task& task = tasks_[index];
        TaskResult result;
        Kernel kernel(grid_, spec_);
        if (!kernel.push(task.first)) return result;
        if (task.second >= 0 && !kernel.push(task.second)) return result;
        if (!visit(kernel, result)) return result;
        if (task.second >= 0) descend(kernel, result, index);
        return result;
    }

    // Counts and records the current node; false when the task must stop.
    bool visit(const Kernel& kernel, TaskResult& result)
    {
        if (++result.nodes > spec_.node_budget) {
            result.over_budget = true;
            return false;
        }
        if (spec_.symmetry_reduction && !kernel.touches_bottom_row()) return true;
        auto sig = kernel.signature();
        if (!result.first_by_signature.count(sig)) result.first_by_signature.emplace(sig, kernel.key());
        if (kernel.matches_target()) {
            auto key = kernel.key();
            if (std::find(result.hits.begin(), result.hits.end(), key) == result.hits.end()) {
                result.hits.push_back(std::move(key));
                if (result.hits.size() >= static_cast<std::size_t>(spec_.max_witnesses)) return false;
            }
        }
        return true;
    }

    bool descend(Kernel& kernel, TaskResult& result, std::size_t index)
    {
        if (static_cast<int>(kernel.size()) >= spec_.max_points) return true;
        const int count = grid_.count();
        for (int z = kernel.last() + 1; z < count; ++z) {
            if (spec_.target && static_cast<int>(kernel.size()) + (count - z) < kernel.target_total()) break;
            if (!kernel.push(z)) continue;
            bool go = visit(kernel, result) && descend(kernel, result, index);
            kernel.pop();
            if (!go) return false;
            if ((result.nodes & 0xffff) == 0 && index > cancel_after_.load()) {
                result.cancelled = true;
                return false;
            }
        }
        return true;
    }

    SearchOutcome merge()
    {
        SearchOutcome out;
        out.nodes_explored = merged_nodes_;
        auto hits = merged_hits_;
        if (hits.size() > static_cast<std::size_t>(spec_.max_witnesses)) hits.resize(spec_.max_witnesses);
        for (const auto& [sig, key] : merged_signatures_) out.signatures_found.insert(sig);
        if (spec_.target) {
            for (const auto& key : hits) out.witnesses.push_back(checked(key));
            out.status = !out.witnesses.empty() ? SearchStatus::Found
                       : over_budget_           ? SearchStatus::BudgetExceeded
                                                : SearchStatus::Exhausted;
        } else {
            for (const auto& [sig, key] : merged_signatures_) out.witnesses.push_back(checked(key));
            out.status = over_budget_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
        }
        return out;
    }

    ColouredPointSet checked(const CanonicalKey& key) const
    {
        auto set = to_coloured(key);
        auto report = verify_blocked(set);
        if (!report.ok) throw std::logic_error("search produced a configuration that is not blocked");
        if (spec_.target && *report.signature != *spec_.target)
            throw std::logic_error("search witness has the wrong signature");
        if (spec_.require_midpoint_blocked && !verify_midpoint_blocked(set).ok)
            throw std::logic_error("search witness is not midpoint-blocked");
        return set;
    }

    SearchSpec spec_;
    Grid grid_;
    std::vector<Task> tasks_;
    std::vector<TaskResult> results_;
    std::vector<char> done_;
    std::atomic<std::size_t> next_{0};
    std::atomic<std::size_t> cancel_after_{static_cast<std::size_t>(-1)};
    std::mutex mutex_;
    std::size_t frontier_ = 0;
    bool stopped_ = false;
    bool over_budget_ = false;
    std::uint64_t merged_nodes_ = 0;
    std::map<KSetSignature, CanonicalKey> merged_signatures_;
    std::vector<CanonicalKey> merged_hits_;
};

} // namespace

SearchOutcome enumerate_blocked(const SearchSpec& spec)
{
    SearchSpec s = spec;
    s.target.reset();
    return Search(s).run();
}

SearchOutcome find_blocked(const KSetSignature& target, const SearchSpec& spec)
{
    SearchSpec s = spec;
    s.target = target;
    return Search(s).run();
}

SearchOutcome certify_absent(const KSetSignature& target, const SearchSpec& spec)
{
    SearchSpec s = spec;
    s.max_witnesses = 1;
    return find_blocked(target, s);
}

VisibilityGraph brute_force_visibility(const PointConfig& config)
{
    VisibilityGraph g(config.size());
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j) {
            bool visible = true;
            for (std::size_t k = 0; k < config.size(); ++k)
                if (k != i && k != j && is_between(config[k], config[i], config[j])) visible = false;
            g.set_adjacent(i, j, visible);
        }
    return g;
}

ColouredPointSet canonical_form(const ColouredPointSet& set)
{
    if (set.dim() != 2) throw PreconditionError("canonical_form needs a planar configuration");
    if (set.size() == 0) return set;
    std::vector<GridPoint> pts;
    for (const auto& p : set.config()) {
        if (!p[0].is_integer() || !p[1].is_integer()) throw PreconditionError("canonical_form needs integer coordinates");
        if (!p[0].numerator().fits_sint_p() || !p[1].numerator().fits_sint_p())
            throw PreconditionError("canonical_form coordinates out of range");
        pts.push_back({static_cast<int>(p[0].numerator().get_si()), static_cast<int>(p[1].numerator().get_si())});
    }
    return to_coloured(canonical_key(pts, set.colours()));
}

} // namespace kblocked
