#pragma once

#include <optional>

#include "grslab/linalg.hpp"

namespace grslab {

// A linear code is its length plus the canonical basis of its row space.
struct LinearCode {
    std::size_t length;
    SubspaceBasis basis;

    std::size_t dim() const { return basis.dim(); }
    const PrimeField& field() const { return basis.mat.field(); }
    bool operator==(const LinearCode& o) const { return length == o.length && basis == o.basis; }
};

LinearCode make_code(const MatrixFq& generator);

// GRS_k(x, y): evaluations y_i p(x_i) of polynomials of degree < k on a
// support of pairwise-distinct points with nonzero column multipliers.
struct GrsCode {
    PrimeField field;
    std::vector<Fe> support;     // pairwise distinct
    std::vector<Fe> multiplier;  // all nonzero
    std::size_t dim;

    std::size_t length() const { return support.size(); }
    void validate() const;
    // Rows (y_1 x_1^i, ..., y_n x_n^i), i = 0..k-1.
    MatrixFq natural_generator() const;
    std::vector<Fe> codeword(const std::vector<Fe>& poly_coeffs) const;
};

GrsCode random_grs(PrimeField field, std::size_t n, std::size_t k, Rng& rng);
LinearCode grs_expand(const GrsCode& g);

// Multiplier y' with GRS_k(x,y)^dual = GRS_{n-k}(x,y'):
// y'_i = 1 / (y_i * prod_{j != i} (x_i - x_j)).
std::vector<Fe> grs_dual_multiplier(const PrimeField& f, const std::vector<Fe>& support,
                                    const std::vector<Fe>& multiplier);
GrsCode grs_dual(const GrsCode& g);

LinearCode code_dual(const LinearCode& c);
LinearCode star_product(const LinearCode& a, const LinearCode& b);
LinearCode square_code(const LinearCode& a);

// Positions are 0-based, given as a sorted duplicate-free set.
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& positions);
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions);
std::vector<std::size_t> kept_positions(std::size_t n, const std::vector<std::size_t>& removed);

// Berlekamp-Welch: the codeword within Hamming distance t of `received`, or
// nullopt.  Requires t <= floor((n-k)/2).
std::optional<std::vector<Fe>> bw_decode(const GrsCode& g, const std::vector<Fe>& received,
                                         std::size_t t);

// Uniformly random k-dimensional code (resampled until full rank).
LinearCode random_code(std::size_t n, std::size_t k, PrimeField field, Rng& rng);

}  // namespace grslab
