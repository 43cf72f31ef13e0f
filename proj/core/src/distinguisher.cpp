#include "grslab/distinguisher.hpp"

#include <cmath>

namespace grslab {

std::size_t sq_dim_shortened(const LinearCode& c, const std::vector<std::size_t>& positions) {
    return square_code(shorten(c, positions)).dim();
}

std::int64_t distinguisher_threshold(std::size_t n, std::size_t r, std::size_t shortened) {
    std::int64_t ambient = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(shortened);
    std::int64_t s = static_cast<std::int64_t>(r) - static_cast<std::int64_t>(shortened) + 1;
    std::int64_t binom = s >= 2 ? s * (s - 1) / 2 : 0;
    return std::min(ambient, binom);
}

bool is_distinguishable_dim(std::size_t sq_dim, std::size_t n, std::size_t r,
                            std::size_t shortened) {
    if (sq_dim == 0) return false;
    return static_cast<std::int64_t>(sq_dim) < distinguisher_threshold(n, r, shortened);
}

bool is_distinguishable(const LinearCode& c, const std::vector<std::size_t>& positions) {
    std::size_t d = sq_dim_shortened(c, positions);
    return is_distinguishable_dim(d, c.length, c.dim(), positions.size());
}

FeasibilityReport feasibility(std::size_t n, std::size_t k, const Rational& m) {
    FeasibilityReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = m;
    auto I = [](std::int64_t v) { return Rational::from_int(v); };
    std::int64_t ni = static_cast<std::int64_t>(n), ki = static_cast<std::int64_t>(k);
    std::int64_t nk = ni - ki;

    // a >= ((1+m)n - 3k) / 2
    Rational a_min = (I(ni) * (I(1) + m) - I(3 * ki)) / I(2);
    // discriminant of the degree-2 constraint in a
    Rational delta = I(8 * ni) * (m - I(1)) + I(25);
    double sqrt_delta = std::sqrt(delta.to_double());
    rep.a_min = a_min.to_double();
    rep.delta = delta.to_double();
    rep.a_0 = static_cast<double>(nk) - 2.5 - 0.5 * sqrt_delta;
    rep.a_1 = static_cast<double>(nk) - 2.5 + 0.5 * sqrt_delta;

    // a <= a_0  <=>  2(n-k-a) - 5 >= 0 and (2(n-k-a) - 5)^2 >= delta
    auto below_a0 = [&](std::int64_t a) {
        std::int64_t s = 2 * (nk - a) - 5;
        if (s < 0) return false;
        __int128 lhs = static_cast<__int128>(s) * s * delta.den();
        return lhs >= static_cast<__int128>(delta.num());
    };
    std::int64_t lo = std::max<std::int64_t>(a_min.ceil(), 0);
    std::int64_t hi = -1;
    for (std::int64_t a = nk - 1; a >= 0; --a) {
        if (below_a0(a)) {
            hi = a;
            break;
        }
    }
    rep.a_lo = lo;
    rep.a_hi = std::min(hi, nk - 1);

    // m <= 1 + R
    rep.satisfies_m_le_1_plus_R = (m * I(ni)) <= I(ni + ki);

    // Eq. ceiling: m <= 1 + R - 1/n - sqrt(8R/n + 1/n^2)
    Rational lhs = I(1) + I(ki) / I(ni) - Rational(1, ni) - m;  // must be >= sqrt(rad)
    Rational rad = I(8) * I(ki) / I(ni * ni) + Rational(1, ni * ni);
    if (lhs < Rational(0, 1)) {
        rep.satisfies_eq12 = false;
    } else {
        rep.satisfies_eq12 = (lhs * lhs) >= rad;
    }
    rep.m_0 = 1.0 + static_cast<double>(ki) / ni - 1.0 / ni - std::sqrt(rad.to_double());
    return rep;
}

FeasibilityReport feasibility(const BbcrsParams& params) {
    return feasibility(params.n, params.k, params.m);
}

std::map<std::size_t, std::size_t> random_square_baseline(std::size_t n, std::size_t k,
                                                          PrimeField field, std::size_t trials,
                                                          std::uint64_t seed) {
    std::map<std::size_t, std::size_t> hist;
    Rng root(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = root.derive(t);
        LinearCode c = random_code(n, k, field, rng);
        ++hist[square_code(c).dim()];
    }
    return hist;
}

}  // namespace grslab
