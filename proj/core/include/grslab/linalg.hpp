#pragma once

#include <optional>

#include "grslab/matrix.hpp"

namespace grslab {

// Canonical subspace representation: reduced row-echelon basis with no zero
// rows.  Two subspaces are equal as sets iff their representations are
// bit-identical, which turns every dimension claim into a deterministic
// assertion.
struct SubspaceBasis {
    std::size_t ambient;
    MatrixFq mat;  // RREF, no zero rows

    std::size_t dim() const { return mat.rows(); }
    bool operator==(const SubspaceBasis& o) const {
        return ambient == o.ambient && mat == o.mat;
    }
    bool contains(const std::vector<Fe>& v) const;
    bool contains_space(const SubspaceBasis& o) const;
};

struct RrefResult {
    SubspaceBasis basis;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const MatrixFq& m);
SubspaceBasis row_space(const MatrixFq& m);
SubspaceBasis zero_space(PrimeField field, std::size_t ambient);

// {x : x M^T = 0}, i.e. the left kernel of M^T = right kernel viewed as rows.
SubspaceBasis kernel(const MatrixFq& m);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);

// Any x with M x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Fe>> solve_linear(const MatrixFq& m, const std::vector<Fe>& rhs);

}  // namespace grslab
