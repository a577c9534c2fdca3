#pragma once

#include "kblocked/geometry.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace kblocked::detail {

// A configuration rescaled axis by axis to integer coordinates. Axis scaling is an
// invertible linear map, so betweenness and collinearity are unchanged. When every
// coordinate fits in 62 bits the predicates run on int64 with 128-bit products.
class IntegerFrame
{
public:
    explicit IntegerFrame(const PointConfig& config);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    bool small() const { return is_small_; }

    // Point x strictly inside segment vw.
    bool between(std::size_t x, std::size_t v, std::size_t w) const;
    bool collinear(std::size_t a, std::size_t b, std::size_t c) const;

    const std::int64_t* small_point(std::size_t i) const { return &small_[i * d_]; }

private:
    template <class Coord>
    static bool between_impl(const Coord* x, const Coord* v, const Coord* w, std::size_t d);
    template <class Coord>
    static bool collinear_impl(const Coord* a, const Coord* b, const Coord* c, std::size_t d);

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    bool is_small_ = true;
    std::vector<std::int64_t> small_;
    std::vector<mpz_class> big_;
};

} // namespace kblocked::detail
