#pragma once

#include <map>

#include "grslab/bbcrs.hpp"
#include "grslab/codes.hpp"

namespace grslab {

// dim Sh_I(C)^2, the distinguisher statistic.
std::size_t sq_dim_shortened(const LinearCode& c, const std::vector<std::size_t>& positions);

// Square-dimension threshold min{n - |I|, binom(r - |I| + 1, 2)} for a code of
// length n whose dual-side dimension is r (r = dim C here).
std::int64_t distinguisher_threshold(std::size_t n, std::size_t r, std::size_t shortened);

// True iff dim Sh_I(C)^2 < min{n-|I|, binom(dim C - |I| + 1, 2)}.  The zero
// code is never distinguishable by convention.
bool is_distinguishable(const LinearCode& c, const std::vector<std::size_t>& positions);
bool is_distinguishable_dim(std::size_t sq_dim, std::size_t n, std::size_t r,
                            std::size_t shortened);

// Feasibility calculus: a lower bound, quadratic roots a0/a1, the density
// ceiling m0, and the attackable shortening range.  All boundary comparisons
// are exact (rational cross-multiplication; square roots bracketed by
// integer squares); the double fields are for display only.
struct FeasibilityReport {
    std::size_t n = 0, k = 0;
    Rational m{1, 1};
    double a_min = 0, a_0 = 0, a_1 = 0, delta = 0, m_0 = 0;
    std::int64_t a_lo = 0, a_hi = -1;  // feasible integer interval, empty if a_lo > a_hi
    bool satisfies_eq12 = false;
    bool satisfies_m_le_1_plus_R = false;

    bool range_empty() const { return a_lo > a_hi; }
};

FeasibilityReport feasibility(std::size_t n, std::size_t k, const Rational& m);
FeasibilityReport feasibility(const BbcrsParams& params);

// Histogram of dim A^2 over `trials` random [n,k] codes; calibrates the
// distinguisher's false-positive rate.
std::map<std::size_t, std::size_t> random_square_baseline(std::size_t n, std::size_t k,
                                                          PrimeField field, std::size_t trials,
                                                          std::uint64_t seed);

}  // namespace grslab
