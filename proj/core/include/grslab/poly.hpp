#pragma once

#include <vector>

#include "grslab/fq.hpp"

namespace grslab {

// Dense coefficient vectors, low degree first.  Just enough polynomial
// machinery for evaluation-code work; not a general-purpose library.
namespace poly {

std::vector<Fe> trim(const PrimeField& f, std::vector<Fe> p);
int degree(const std::vector<Fe>& p);  // -1 for the zero polynomial
Fe eval(const PrimeField& f, const std::vector<Fe>& p, Fe x);
std::vector<Fe> mul(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b);
std::vector<Fe> add(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b);
// quotient/remainder; throws on zero divisor
std::pair<std::vector<Fe>, std::vector<Fe>> divrem(const PrimeField& f, std::vector<Fe> num,
                                                   const std::vector<Fe>& den);
// prod (X - r_i)
std::vector<Fe> from_roots(const PrimeField& f, const std::vector<Fe>& roots);
// unique P with deg P < xs.size() and P(xs[i]) = ys[i]; xs pairwise distinct
std::vector<Fe> interpolate(const PrimeField& f, const std::vector<Fe>& xs,
                            const std::vector<Fe>& ys);
// all roots in F_q by scanning the field (q is small here)
std::vector<Fe> roots(const PrimeField& f, const std::vector<Fe>& p);

}  // namespace poly

}  // namespace grslab
