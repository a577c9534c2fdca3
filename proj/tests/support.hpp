#pragma once

// Test-side oracles. These avoid the library's predicates on purpose: everything
// here is written from the definitions with plain Rational arithmetic.

#include "kblocked/blocked.hpp"
#include "kblocked/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace testsupport {

using kblocked::ColouredPointSet;
using kblocked::PointConfig;
using kblocked::Rational;
using kblocked::RationalPoint;

inline int cross_sign(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r)
{
    Rational c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return c.sign();
}

// x = v + t (w - v) for one t with 0 < t < 1, checked coordinate by coordinate.
inline bool strictly_between(const RationalPoint& x, const RationalPoint& v, const RationalPoint& w)
{
    std::optional<Rational> t;
    for (std::size_t a = 0; a < x.dim(); ++a) {
        Rational dw = w[a] - v[a], dx = x[a] - v[a];
        if (dw.sign() == 0) {
            if (dx.sign() != 0) return false;
            continue;
        }
        Rational ta = dx / dw;
        if (t && *t != ta) return false;
        t = ta;
    }
    return t && t->sign() > 0 && *t < Rational(1);
}

inline std::vector<std::vector<bool>> literal_visibility(const PointConfig& p)
{
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool seen = true;
            for (std::size_t k = 0; k < n && seen; ++k)
                if (k != i && k != j && strictly_between(p[k], p[i], p[j])) seen = false;
            adj[i][j] = seen;
        }
    return adj;
}

// Signature of the visibility graph if it is complete multipartite, empty otherwise.
inline std::vector<int> multipartite_signature(const PointConfig& p)
{
    auto adj = literal_visibility(p);
    const std::size_t n = p.size();
    std::vector<int> cls(n, -1);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        int c = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (std::size_t j = i; j < n; ++j)
            if (j == i || !adj[i][j]) {
                cls[j] = c;
                ++sizes[c];
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adj[i][j] == (cls[i] == cls[j])) return {};
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline PointConfig random_config(std::mt19937_64& rng, std::size_t n, std::size_t dim, long range)
{
    double cells = 1;
    for (std::size_t a = 0; a < dim; ++a) cells *= static_cast<double>(2 * range + 1);
    if (cells < static_cast<double>(n)) throw std::invalid_argument("box too small for the requested points");
    std::uniform_int_distribution<long> coord(-range, range);
    std::set<RationalPoint> seen;
    std::vector<RationalPoint> pts;
    while (pts.size() < n) {
        RationalPoint p;
        for (std::size_t a = 0; a < dim; ++a) p.coords.emplace_back(coord(rng));
        if (seen.insert(p).second) pts.push_back(p);
    }
    return PointConfig(dim, std::move(pts));
}

inline bool general_position_literal(const PointConfig& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k)
                if (cross_sign(p[i], p[j], p[k]) == 0) return false;
    return true;
}

inline PointConfig random_general_position(std::mt19937_64& rng, std::size_t n, long range)
{
    for (;;) {
        auto p = random_config(rng, n, 2, range);
        if (general_position_literal(p)) return p;
    }
}

inline bool in_triangle_literal(const RationalPoint& x, const RationalPoint& a, const RationalPoint& b,
                                const RationalPoint& c)
{
    int s1 = cross_sign(a, b, x), s2 = cross_sign(b, c, x), s3 = cross_sign(c, a, x);
    bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(has_neg && has_pos);
}

// For points in general position: the subset is in convex position and no other point
// lies in its hull.
inline bool empty_convex_subset(const PointConfig& p, const std::vector<std::size_t>& s)
{
    for (std::size_t x : s)
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                for (std::size_t c = b + 1; c < s.size(); ++c) {
                    if (x == s[a] || x == s[b] || x == s[c]) continue;
                    if (in_triangle_literal(p[x], p[s[a]], p[s[b]], p[s[c]])) return false;
                }
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (std::find(s.begin(), s.end(), x) != s.end()) continue;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                for (std::size_t c = b + 1; c < s.size(); ++c)
                    if (in_triangle_literal(p[x], p[s[a]], p[s[b]], p[s[c]])) return false;
    }
    return true;
}

inline bool has_empty_convex_subset(const PointConfig& p, std::size_t r)
{
    const std::size_t n = p.size();
    if (n < r) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        if (empty_convex_subset(p, s)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline std::vector<int> product_sizes(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    for (int x : a)
        for (int y : b) out.push_back(x * y);
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline long binomial(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// [3]^d: C(d, s) classes of size 2^(d - s).
inline std::vector<int> grid_signature(int d)
{
    std::vector<int> out;
    for (int s = 0; s <= d; ++s)
        for (long c = 0; c < binomial(d, s); ++c) out.push_back(1 << (d - s));
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Applies x -> M x + t to every point (planar).
inline ColouredPointSet affine_image(const ColouredPointSet& set, const std::array<Rational, 4>& m,
                                     const std::array<Rational, 2>& t)
{
    std::vector<RationalPoint> pts;
    for (const auto& p : set.config())
        pts.push_back(RationalPoint{m[0] * p[0] + m[1] * p[1] + t[0], m[2] * p[0] + m[3] * p[1] + t[1]});
    return ColouredPointSet(PointConfig(2, std::move(pts)), set.colours());
}

} // namespace testsupport
