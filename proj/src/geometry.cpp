#include "kblocked/geometry.hpp"

#include "kblocked/detail/integer_frame.hpp"
#include "kblocked/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kblocked {

namespace {

void require_same_dim(const RationalPoint& a, const RationalPoint& b)
{
    if (a.dim() != b.dim()) throw PreconditionError("points of different dimension");
    if (a.dim() == 0) throw PreconditionError("zero-dimensional point");
}

void require_planar(const PointConfig& config, const char* what)
{
    if (config.dim() != 2) throw PreconditionError(std::string(what) + " needs a planar configuration");
}

} // namespace

std::string RationalPoint::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].to_string();
    }
    return s + ")";
}

PointConfig::PointConfig(std::size_t dim, std::vector<RationalPoint> points)
    : dim_(dim), points_(std::move(points))
{
    validate();
}

PointConfig::PointConfig(std::vector<RationalPoint> points) : points_(std::move(points))
{
    dim_ = points_.empty() ? 2 : points_.front().dim();
    validate();
}

void PointConfig::validate() const
{
    if (dim_ == 0) throw PreconditionError("configuration dimension must be positive");
    for (const auto& p : points_)
        if (p.dim() != dim_) throw PreconditionError("point " + p.to_string() + " has wrong dimension");
    std::vector<const RationalPoint*> sorted;
    sorted.reserve(points_.size());
    for (const auto& p : points_) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (*sorted[i] == *sorted[i - 1]) throw PreconditionError("duplicate point " + sorted[i]->to_string());
}

PointConfig PointConfig::from_integers(const std::vector<std::vector<long>>& rows)
{
    std::vector<RationalPoint> pts;
    pts.reserve(rows.size());
    for (const auto& row : rows) {
        RationalPoint p;
        for (long v : row) p.coords.emplace_back(v);
        pts.push_back(std::move(p));
    }
    return PointConfig(std::move(pts));
}

std::optional<std::size_t> PointConfig::index_of(const RationalPoint& p) const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == p) return i;
    return std::nullopt;
}

int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r)
{
    if (p.dim() != 2 || q.dim() != 2 || r.dim() != 2)
        throw PreconditionError("orientation is defined for planar points only");
    Rational cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return cross.sign();
}

bool collinear(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r)
{
    require_same_dim(p, q);
    require_same_dim(p, r);
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j)
            if ((q[i] - p[i]) * (r[j] - p[j]) != (q[j] - p[j]) * (r[i] - p[i])) return false;
    return true;
}

bool is_between(const RationalPoint& x, const RationalPoint& v, const RationalPoint& w)
{
    require_same_dim(x, v);
    require_same_dim(v, w);
    if (v == w) throw PreconditionError("is_between needs distinct segment endpoints");
    std::size_t axis = 0;
    while (v[axis] == w[axis]) ++axis;
    Rational t = (x[axis] - v[axis]) / (w[axis] - v[axis]);
    if (t.sign() <= 0 || !(t < Rational(1))) return false;
    for (std::size_t a = 0; a < x.dim(); ++a)
        if (x[a] != v[a] + t * (w[a] - v[a])) return false;
    return true;
}

std::size_t max_collinear(const PointConfig& config)
{
    const std::size_t n = config.size();
    if (n <= 2) return n;
    detail::IntegerFrame frame(config);
    std::size_t best = 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t count = 2;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j && frame.collinear(i, j, k)) ++count;
            best = std::max(best, count);
        }
    }
    return best;
}

bool is_general_position(const PointConfig& config) { return max_collinear(config) <= 2; }

RationalPoint midpoint(const RationalPoint& v, const RationalPoint& w)
{
    require_same_dim(v, w);
    RationalPoint m;
    m.coords.reserve(v.dim());
    const Rational half(1, 2);
    for (std::size_t a = 0; a < v.dim(); ++a) m.coords.push_back((v[a] + w[a]) * half);
    return m;
}

std::size_t count_midpoints(const PointConfig& config)
{
    if (config.size() < 2) throw PreconditionError("count_midpoints needs at least two points");
    std::set<RationalPoint> mids;
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j) mids.insert(midpoint(config[i], config[j]));
    return mids.size();
}

std::vector<std::size_t> convex_hull(const PointConfig& config)
{
    require_planar(config, "convex_hull");
    if (config.empty()) throw PreconditionError("convex_hull of an empty configuration");
    std::vector<std::size_t> order(config.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return config[a] < config[b]; });
    if (order.size() == 1) return order;

    // Monotone chain; popping on non-left turns drops collinear boundary points.
    std::vector<std::size_t> hull(2 * order.size());
    std::size_t k = 0;
    for (std::size_t idx : order) {
        while (k >= 2 && orientation(config[hull[k - 2]], config[hull[k - 1]], config[idx]) <= 0) --k;
        hull[k++] = idx;
    }
    const std::size_t lower = k + 1;
    for (std::size_t t = order.size() - 1; t-- > 0;) {
        std::size_t idx = order[t];
        while (k >= lower && orientation(config[hull[k - 2]], config[hull[k - 1]], config[idx]) <= 0) --k;
        hull[k++] = idx;
    }
    hull.resize(k - 1);
    return hull;
}

std::optional<std::vector<std::size_t>> find_empty_convex_polygon(const PointConfig& config, int r)
{
    require_planar(config, "find_empty_convex_polygon");
    if (r != 4 && r != 5) throw PreconditionError("empty polygon size must be 4 or 5");
    if (!is_general_position(config)) throw PreconditionError("find_empty_convex_polygon needs general position");
    const std::size_t n = config.size();
    if (n < static_cast<std::size_t>(r)) return std::nullopt;

    auto strictly_inside = [&](std::size_t x, std::size_t a, std::size_t b, std::size_t c) {
        return orientation(config[a], config[b], config[x]) > 0 && orientation(config[b], config[c], config[x]) > 0 &&
               orientation(config[c], config[a], config[x]) > 0;
    };

    // Anchor each candidate polygon at its lowest (then leftmost) vertex p. The rest form a
    // chain sorted by angle around p; the polygon is the fan of triangles (p, c_i, c_i+1),
    // and in general position it is empty iff every fan triangle is.
    for (std::size_t p = 0; p < n; ++p) {
        const auto& P = config[p];
        std::vector<std::size_t> above;
        for (std::size_t q = 0; q < n; ++q) {
            const auto& Q = config[q];
            if (Q[1] > P[1] || (Q[1] == P[1] && Q[0] > P[0])) above.push_back(q);
        }
        if (above.size() < static_cast<std::size_t>(r - 1)) continue;
        std::sort(above.begin(), above.end(),
                  [&](std::size_t a, std::size_t b) { return orientation(P, config[a], config[b]) > 0; });

        const std::size_t m = above.size();
        std::vector<std::vector<char>> empty_fan(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                bool empty = true;
                for (std::size_t x = 0; x < n && empty; ++x) {
                    if (x == p || x == above[i] || x == above[j]) continue;
                    if (strictly_inside(x, p, above[i], above[j])) empty = false;
                }
                empty_fan[i][j] = empty;
            }
        }

        std::vector<std::size_t> chain;
        std::function<bool(std::size_t)> extend = [&](std::size_t last) -> bool {
            if (chain.size() == static_cast<std::size_t>(r - 1)) {
                const auto& a = config[above[chain[chain.size() - 2]]];
                const auto& b = config[above[chain.back()]];
                return orientation(a, b, P) > 0;
            }
            for (std::size_t next = last + 1; next < m; ++next) {
                if (!empty_fan[last][next]) continue;
                if (chain.size() >= 2 &&
                    orientation(config[above[chain[chain.size() - 2]]], config[above[last]], config[above[next]]) <= 0)
                    continue;
                chain.push_back(next);
                if (extend(next)) return true;
                chain.pop_back();
            }
            return false;
        };
        for (std::size_t first = 0; first < m; ++first) {
            chain.assign(1, first);
            if (extend(first)) {
                std::vector<std::size_t> result{p};
                for (std::size_t c : chain) result.push_back(above[c]);
                std::sort(result.begin(), result.end());
                return result;
            }
        }
    }
    return std::nullopt;
}

bool in_closed_triangle(const RationalPoint& x, const RationalPoint& a, const RationalPoint& b,
                        const RationalPoint& c)
{
    require_same_dim(x, a);
    require_same_dim(a, b);
    require_same_dim(a, c);
    if (x == a || x == b || x == c) return true;
    if (collinear(a, b, c)) {
        const RationalPoint* ends[3] = {&a, &b, &c};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (*ends[i] != *ends[j] && is_between(x, *ends[i], *ends[j])) return true;
        return false;
    }
    const std::size_t d = a.dim();
    std::vector<Rational> u(d), w(d), y(d);
    for (std::size_t k = 0; k < d; ++k) {
        u[k] = b[k] - a[k];
        w[k] = c[k] - a[k];
        y[k] = x[k] - a[k];
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational det = u[i] * w[j] - u[j] * w[i];
            if (det.sign() == 0) continue;
            Rational s = (y[i] * w[j] - y[j] * w[i]) / det;
            Rational t = (u[i] * y[j] - u[j] * y[i]) / det;
            for (std::size_t k = 0; k < d; ++k)
                if (y[k] != s * u[k] + t * w[k]) return false;
            return s.sign() >= 0 && t.sign() >= 0 && !(Rational(1) < s + t);
        }
    }
    return false;
}

} // namespace kblocked
