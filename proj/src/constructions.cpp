#include "kblocked/constructions.hpp"

#include "kblocked/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kblocked {

ColouredPointSet grid_3d(int d)
{
    if (d < 1 || d > kMaxGridDimension)
        throw PreconditionError("grid_3d dimension must lie in [1, " + std::to_string(kMaxGridDimension) + "]");
    std::size_t count = 1;
    for (int a = 0; a < d; ++a) count *= 3;
    std::vector<RationalPoint> pts;
    std::vector<int> colours;
    pts.reserve(count);
    colours.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        // Most significant ternary digit first, so points come out in lexicographic order.
        RationalPoint p;
        p.coords.resize(d);
        int mask = 0;
        std::size_t rest = code;
        for (int a = d - 1; a >= 0; --a) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            p.coords[a] = Rational(digit);
            if (digit == 1) mask |= 1 << a;
        }
        pts.push_back(std::move(p));
        colours.push_back(mask);
    }
    return ColouredPointSet(PointConfig(d, std::move(pts)), std::move(colours));
}

namespace {

void require_blocked(const ColouredPointSet& set, const char* what)
{
    if (!verify_blocked(set).ok) throw PreconditionError(std::string(what) + " needs a blocked input");
}

void require_midpoint_blocked(const ColouredPointSet& set, const char* what)
{
    require_blocked(set, what);
    if (!verify_midpoint_blocked(set).ok) throw PreconditionError(std::string(what) + " needs a midpoint-blocked input");
}

// The union of lines through two or more old points.
class LineUnion
{
public:
    explicit LineUnion(const PointConfig& config) : config_(config) {}

    bool contains(const RationalPoint& x) const
    {
        for (std::size_t i = 0; i < config_.size(); ++i)
            for (std::size_t j = i + 1; j < config_.size(); ++j)
                if (orientation(config_[i], config_[j], x) == 0) return true;
        return false;
    }

private:
    const PointConfig& config_;
};

// Lattice points over the bounding box grown by one unit, spacing halved level by level.
class PlacementSweep
{
public:
    explicit PlacementSweep(const PointConfig& config)
    {
        lo_x_ = hi_x_ = config[0][0];
        lo_y_ = hi_y_ = config[0][1];
        for (const auto& p : config) {
            lo_x_ = std::min(lo_x_, p[0]);
            hi_x_ = std::max(hi_x_, p[0]);
            lo_y_ = std::min(lo_y_, p[1]);
            hi_y_ = std::max(hi_y_, p[1]);
        }
        lo_x_ = floor_of(lo_x_) - Rational(1);
        lo_y_ = floor_of(lo_y_) - Rational(1);
        hi_x_ = floor_of(hi_x_) + Rational(2);
        hi_y_ = floor_of(hi_y_) + Rational(2);
    }

    template <class Accept>
    std::optional<RationalPoint> first(Accept&& accept, std::size_t budget) const
    {
        std::size_t tried = 0;
        Rational spacing(1);
        for (int level = 0; level < 24 && tried < budget; ++level, spacing /= Rational(2)) {
            for (Rational x = lo_x_; !(hi_x_ < x) && tried < budget; x += spacing) {
                for (Rational y = lo_y_; !(hi_y_ < y) && tried < budget; y += spacing) {
                    ++tried;
                    RationalPoint p{x, y};
                    if (accept(p)) return p;
                }
            }
        }
        return std::nullopt;
    }

private:
    static Rational floor_of(const Rational& r)
    {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
        return Rational(q, mpz_class(1));
    }

    Rational lo_x_, hi_x_, lo_y_, hi_y_;
};

constexpr std::size_t kPlacementBudget = 1u << 16;

RationalPoint along_ray(const RationalPoint& from, const RationalPoint& away, const Rational& s)
{
    // from + s (from - away)
    return RationalPoint{from[0] + s * (from[0] - away[0]), from[1] + s * (from[1] - away[1])};
}

std::optional<ColouredPointSet> extended(const ColouredPointSet& set, const std::vector<RationalPoint>& added,
                                         const KSetSignature& expected)
{
    std::vector<RationalPoint> pts(set.config().points());
    std::vector<int> colours(set.colours());
    std::set<RationalPoint> seen(pts.begin(), pts.end());
    for (const auto& p : added) {
        if (!seen.insert(p).second) return std::nullopt;
        pts.push_back(p);
        colours.push_back(set.colour_count());
    }
    ColouredPointSet out(PointConfig(2, std::move(pts)), std::move(colours));
    auto report = verify_blocked(out);
    if (!report.ok || *report.signature != expected) return std::nullopt;
    return out;
}

// Coefficients (a, b) with x - p = a (u - p) + b (v - p).
std::pair<Rational, Rational> cone_coordinates(const RationalPoint& x, const RationalPoint& p,
                                               const RationalPoint& u, const RationalPoint& v)
{
    Rational ux = u[0] - p[0], uy = u[1] - p[1];
    Rational vx = v[0] - p[0], vy = v[1] - p[1];
    Rational xx = x[0] - p[0], xy = x[1] - p[1];
    Rational det = ux * vy - uy * vx;
    return {(xx * vy - xy * vx) / det, (ux * xy - uy * xx) / det};
}

} // namespace

ColouredPointSet augment(const ColouredPointSet& set, int m)
{
    if (m < 1 || m > 3) throw PreconditionError("augment adds 1, 2 or 3 points");
    if (set.dim() != 2) throw PreconditionError("augment needs a planar configuration");
    if (m >= 2 && set.size() == 0) throw PreconditionError("augment with m >= 2 needs a nonempty set");
    require_blocked(set, "augment");

    std::vector<int> sizes = signature(set).sizes();
    sizes.push_back(m);
    const KSetSignature expected(sizes);
    const PointConfig& old = set.config();
    const LineUnion lines(old);

    if (set.size() == 0) {
        // Nothing to avoid; the origin is as good as any point.
        return ColouredPointSet(PointConfig(2, {RationalPoint{Rational(0), Rational(0)}}), {0});
    }

    auto off_lines = [&](const RationalPoint& x) { return !lines.contains(x) && !old.index_of(x); };
    const PlacementSweep sweep(old);
    std::optional<ColouredPointSet> result;

    if (m == 1) {
        sweep.first([&](const RationalPoint& p) {
            if (!off_lines(p)) return false;
            result = extended(set, {p}, expected);
            return result.has_value();
        }, kPlacementBudget);
    } else if (m == 2) {
        // p off every line; q beyond old point 0 on the ray from p, so point 0 blocks them.
        const RationalPoint& v = old[0];
        sweep.first([&](const RationalPoint& p) {
            if (!off_lines(p)) return false;
            for (long j = 1; j <= 64; ++j) {
                Rational s = (j % 2) ? Rational((j + 1) / 2) : Rational(1, j / 2 + 1);
                RationalPoint q = along_ray(v, p, s);
                if (!off_lines(q)) continue;
                result = extended(set, {p, q}, expected);
                if (result) return true;
            }
            return false;
        }, kPlacementBudget);
    } else {
        std::optional<std::array<std::size_t, 3>> triangle;
        for (std::size_t i = 0; i < old.size() && !triangle; ++i)
            for (std::size_t j = i + 1; j < old.size() && !triangle; ++j)
                for (std::size_t k = j + 1; k < old.size() && !triangle; ++k)
                    if (orientation(old[i], old[j], old[k]) != 0) triangle = std::array<std::size_t, 3>{i, j, k};
        if (!triangle) throw PreconditionError("augment with m = 3 needs a non-collinear set");
        const auto [ti, tj, tk] = *triangle;

        // p outside the triangle u v w and beyond one edge uv, so segment pw crosses uv.
        // q and r go beyond u and v on the rays from p; w must block q and r.
        // In cone coordinates around p, q = (1+s, 0), r = (0, 1+t), w = (a, b), and w lies
        // strictly inside qr iff a / (1+s) + b / (1+t) = 1 with both terms positive.
        sweep.first([&](const RationalPoint& p) {
            if (!off_lines(p) || in_closed_triangle(p, old[ti], old[tj], old[tk])) return false;
            const std::array<std::array<std::size_t, 3>, 3> labelings{
                {{ti, tj, tk}, {tj, tk, ti}, {tk, ti, tj}}};
            for (const auto& [iu, iv, iw] : labelings) {
                const auto &u = old[iu], &v = old[iv], &w = old[iw];
                auto [a, b] = cone_coordinates(w, p, u, v);
                if (a.sign() <= 0 || b.sign() <= 0 || !(Rational(1) < a + b)) continue;
                Rational s_lo = a - Rational(1);
                if (s_lo.sign() < 0) s_lo = Rational(0);
                Rational s_hi = b < Rational(1) ? a / (Rational(1) - b) - Rational(1) : s_lo + Rational(2);
                for (long level = 1, denom = 2; level <= 8; ++level, denom *= 2) {
                    for (long odd = 1; odd < denom; odd += 2) {
                        Rational s = s_lo + (s_hi - s_lo) * Rational(odd, denom);
                        Rational rest = Rational(1) - a / (Rational(1) + s);
                        Rational t = b / rest - Rational(1);
                        if (s.sign() <= 0 || t.sign() <= 0) continue;
                        RationalPoint q = along_ray(u, p, s);
                        RationalPoint r = along_ray(v, p, t);
                        if (!off_lines(q) || !off_lines(r)) continue;
                        result = extended(set, {p, q, r}, expected);
                        if (result) return true;
                    }
                }
                return false;
            }
            return false;
        }, kPlacementBudget);
    }

    if (!result) throw BudgetExhausted("augment: no valid placement within the candidate budget");
    return *result;
}

ColouredPointSet product(const ColouredPointSet& first, const ColouredPointSet& second)
{
    require_midpoint_blocked(first, "product");
    require_midpoint_blocked(second, "product");
    const int k2 = second.colour_count();
    std::vector<RationalPoint> pts;
    std::vector<int> colours;
    pts.reserve(first.size() * second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            RationalPoint p(first.config()[i].coords);
            p.coords.insert(p.coords.end(), second.config()[j].coords.begin(), second.config()[j].coords.end());
            pts.push_back(std::move(p));
            colours.push_back(first.colour(i) * k2 + second.colour(j));
        }
    }
    return ColouredPointSet(PointConfig(first.dim() + second.dim(), std::move(pts)), std::move(colours));
}

ColouredPointSet power(const ColouredPointSet& set, int i)
{
    if (i < 1) throw PreconditionError("power exponent must be at least 1");
    require_midpoint_blocked(set, "power");
    ColouredPointSet result = set;
    for (int step = 1; step < i; ++step) result = product(result, set);
    return result;
}

LineCover turan_lines(int k, int n)
{
    if (k < 3 || n < 2) throw PreconditionError("turan_lines needs k >= 3 and n >= 2");
    LineCover cover{k, n, {}};
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                cover.lines.push_back({cover.vertex(i, p), cover.vertex(mod(i + 1, k), mod(p + q, n)), cover.vertex(i, q)});
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < n; ++p) cover.lines.push_back({cover.vertex(i, p), cover.vertex(mod(i + 1, k), mod(2 * p, n))});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (mod(j - i, k) == 1 || mod(i - j, k) == 1) continue;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) cover.lines.push_back({cover.vertex(i, p), cover.vertex(j, q)});
        }
    return cover;
}

LineCoverReport verify_line_cover(const LineCover& cover)
{
    if (cover.k < 1 || cover.n < 1) throw PreconditionError("line cover needs positive k and n");
    const int nv = cover.vertex_count();
    for (const auto& line : cover.lines) {
        if (line.size() != 2 && line.size() != 3) throw PreconditionError("line of length " + std::to_string(line.size()));
        for (int v : line)
            if (v < 0 || v >= nv) throw PreconditionError("line vertex " + std::to_string(v) + " out of range");
        std::set<int> distinct(line.begin(), line.end());
        if (distinct.size() != line.size()) throw PreconditionError("line repeats a vertex");
    }

    auto cls = [&](int v) { return v / cover.n; };
    auto adjacent = [&](int a, int b) { return a != b && cls(a) != cls(b); };

    LineCoverReport report;
    std::vector<int> pair_count(static_cast<std::size_t>(nv) * nv, 0);
    std::vector<int> edge_count(static_cast<std::size_t>(nv) * nv, 0);
    for (const auto& line : cover.lines) {
        int adjacent_pairs = 0;
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t b = a + 1; b < line.size(); ++b) {
                int lo = std::min(line[a], line[b]), hi = std::max(line[a], line[b]);
                ++pair_count[lo * nv + hi];
                if (adjacent(lo, hi)) {
                    ++adjacent_pairs;
                    ++edge_count[lo * nv + hi];
                }
            }
        // An edge, or three vertices with exactly two of their pairs adjacent.
        bool shape_ok = line.size() == 2 ? adjacent_pairs == 1 : adjacent_pairs == 2;
        if (!shape_ok) report.lines_are_edges_or_induced_paths = false;

        bool has_common = false;
        for (int x = 0; x < nv && !has_common; ++x)
            has_common = std::all_of(line.begin(), line.end(), [&](int v) { return adjacent(x, v); });
        if (!has_common) report.every_line_has_common_neighbour = false;
    }
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) {
            int c = pair_count[a * nv + b];
            if (c > 0) ++report.pairs_covered;
            if (c != 1) {
                report.every_pair_in_exactly_one_line = false;
                if (!report.witness_pair) report.witness_pair = std::make_pair(a, b);
            }
            if (adjacent(a, b) && edge_count[a * nv + b] != 1) report.lines_partition_edges = false;
        }
    return report;
}

} // namespace kblocked
