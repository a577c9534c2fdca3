#include "kblocked/detail/integer_frame.hpp"

namespace kblocked::detail {

namespace {

using Wide = __int128;

Wide wide(std::int64_t v) { return static_cast<Wide>(v); }
mpz_class wide(const mpz_class& v) { return v; }

template <class Coord>
int sign_of(const Coord& v)
{
    if constexpr (std::is_same_v<Coord, mpz_class>)
        return sgn(v);
    else
        return (v > 0) - (v < 0);
}

} // namespace

IntegerFrame::IntegerFrame(const PointConfig& config) : n_(config.size()), d_(config.dim())
{
    std::vector<mpz_class> scale(d_, 1);
    for (const auto& p : config)
        for (std::size_t a = 0; a < d_; ++a) mpz_lcm(scale[a].get_mpz_t(), scale[a].get_mpz_t(),
                                                       p[a].raw().get_den_mpz_t());

    big_.reserve(n_ * d_);
    const mpz_class limit = mpz_class(1) << 62;
    for (const auto& p : config) {
        for (std::size_t a = 0; a < d_; ++a) {
            mpz_class v = p[a].raw().get_num() * (scale[a] / p[a].raw().get_den());
            if (abs(v) >= limit) is_small_ = false;
            big_.push_back(std::move(v));
        }
    }
    if (is_small_) {
        small_.reserve(big_.size());
        for (const auto& v : big_) small_.push_back(v.get_si());
        big_.clear();
    }
}

template <class Coord>
bool IntegerFrame::collinear_impl(const Coord* a, const Coord* b, const Coord* c, std::size_t d)
{
    // (b - a) parallel to (c - a): all 2x2 minors vanish.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (wide(b[i] - a[i]) * wide(c[j] - a[j]) != wide(b[j] - a[j]) * wide(c[i] - a[i])) return false;
        }
    }
    return true;
}

template <class Coord>
bool IntegerFrame::between_impl(const Coord* x, const Coord* v, const Coord* w, std::size_t d)
{
    // x = v + t (w - v) with 0 < t < 1. Pick an axis where w - v is nonzero to read off t.
    std::size_t axis = d;
    for (std::size_t a = 0; a < d; ++a) {
        if (w[a] != v[a]) {
            axis = a;
            break;
        }
    }
    if (axis == d) return false;
    Coord num = x[axis] - v[axis];
    Coord den = w[axis] - v[axis];
    int sn = sign_of(num);
    int sd = sign_of(den);
    if (sn == 0 || sn != sd) return false;
    if (sd > 0 ? !(num < den) : !(num > den)) return false;
    for (std::size_t a = 0; a < d; ++a) {
        if (a == axis) continue;
        if (wide(x[a] - v[a]) * wide(den) != wide(w[a] - v[a]) * wide(num)) return false;
    }
    return true;
}

bool IntegerFrame::between(std::size_t x, std::size_t v, std::size_t w) const
{
    if (is_small_) return between_impl(&small_[x * d_], &small_[v * d_], &small_[w * d_], d_);
    return between_impl(&big_[x * d_], &big_[v * d_], &big_[w * d_], d_);
}

bool IntegerFrame::collinear(std::size_t a, std::size_t b, std::size_t c) const
{
    if (is_small_) return collinear_impl(&small_[a * d_], &small_[b * d_], &small_[c * d_], d_);
    return collinear_impl(&big_[a * d_], &big_[b * d_], &big_[c * d_], d_);
}

} // namespace kblocked::detail
