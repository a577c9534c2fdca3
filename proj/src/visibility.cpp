#include "kblocked/visibility.hpp"

#include "kblocked/detail/integer_frame.hpp"
#include "kblocked/error.hpp"

#include <random>
#include <set>

namespace kblocked {

void VisibilityGraph::set_adjacent(std::size_t i, std::size_t j, bool value)
{
    if (i == j) return;
    adj_[i * n_ + j] = value;
    adj_[j * n_ + i] = value;
}

std::size_t VisibilityGraph::edge_count() const
{
    std::size_t e = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) e += adjacent(i, j);
    return e;
}

std::vector<std::size_t> blockers(const PointConfig& config, std::size_t i, std::size_t j)
{
    if (i == j) throw PreconditionError("blockers needs two distinct indices");
    if (i >= config.size() || j >= config.size()) throw PreconditionError("blockers index out of range");
    detail::IntegerFrame frame(config);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < config.size(); ++k)
        if (k != i && k != j && frame.between(k, i, j)) out.push_back(k);
    return out;
}

VisibilityGraph visibility_graph(const PointConfig& config)
{
    const std::size_t n = config.size();
    VisibilityGraph g(n);
    detail::IntegerFrame frame(config);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool visible = true;
            for (std::size_t k = 0; k < n && visible; ++k)
                if (k != i && k != j && frame.between(k, i, j)) visible = false;
            g.set_adjacent(i, j, visible);
        }
    }
    return g;
}

std::vector<std::uint8_t> blocking_relation(const PointConfig& config)
{
    const std::size_t n = config.size();
    std::vector<std::uint8_t> rel(n * n * n, 0);
    detail::IntegerFrame frame(config);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j && frame.between(k, i, j)) {
                    rel[(i * n + j) * n + k] = 1;
                    rel[(j * n + i) * n + k] = 1;
                }
    return rel;
}

bool is_blocking_set(const PointConfig& points, const PointConfig& blocker_set)
{
    if (!blocker_set.empty() && !points.empty() && points.dim() != blocker_set.dim())
        throw PreconditionError("point set and blocker set differ in dimension");
    std::vector<RationalPoint> all(points.points());
    for (const auto& b : blocker_set) {
        if (points.index_of(b)) throw PreconditionError("blocker set meets the point set at " + b.to_string());
        all.push_back(b);
    }
    PointConfig joint(points.empty() ? blocker_set.dim() : points.dim(), std::move(all));
    detail::IntegerFrame frame(joint);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            bool blocked = false;
            for (std::size_t k = 0; k < joint.size() && !blocked; ++k)
                if (k != i && k != j && frame.between(k, i, j)) blocked = true;
            if (!blocked) return false;
        }
    }
    return true;
}

Projection occlusion_free_projection(const PointConfig& config, std::uint64_t seed)
{
    const std::size_t d = config.dim();
    if (d < 3) throw PreconditionError("occlusion_free_projection needs dimension at least 3");
    if (config.empty()) throw PreconditionError("occlusion_free_projection of an empty configuration");

    const auto source = blocking_relation(config);
    std::mt19937_64 rng(seed);
    const std::uint64_t modulus = (std::uint64_t{1} << 32) + 1;
    const mpz_class denominator = mpz_class(1) << 31;

    for (int attempt = 1; attempt <= kProjectionAttempts; ++attempt) {
        std::vector<Rational> matrix;
        matrix.reserve(2 * d);
        for (std::size_t e = 0; e < 2 * d; ++e) {
            long numerator = static_cast<long>(rng() % modulus) - (1L << 31);
            matrix.emplace_back(mpz_class(numerator), denominator);
        }

        std::vector<RationalPoint> image;
        image.reserve(config.size());
        std::set<RationalPoint> seen;
        bool distinct = true;
        for (const auto& p : config) {
            RationalPoint q{Rational(0), Rational(0)};
            for (std::size_t row = 0; row < 2; ++row)
                for (std::size_t a = 0; a < d; ++a) q[row] += matrix[row * d + a] * p[a];
            if (!seen.insert(q).second) {
                distinct = false;
                break;
            }
            image.push_back(std::move(q));
        }
        if (!distinct) continue;

        PointConfig planar(2, std::move(image));
        if (blocking_relation(planar) != source) continue;

        Projection result{std::move(planar), std::move(matrix), {}, attempt};
        result.correspondence.resize(config.size());
        for (std::size_t k = 0; k < config.size(); ++k) result.correspondence[k] = k;
        return result;
    }
    throw BudgetExhausted("occlusion_free_projection: no occlusion-free map within the retry budget");
}

} // namespace kblocked
