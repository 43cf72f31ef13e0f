#pragma once

#include "grslab/matrix.hpp"

namespace grslab {

enum class RowColor { Black, Blue, Red };

// Colored bipartite graph of a shortened sparsely-mixed GRS code: U-vertices
// are columns of T, V-vertices its rows, an edge per nonzero entry.  Red rows
// are shortened (in I), blue rows are unshortened of degree 1, the rest is
// black.  Every row must have weight 1 or 2.
struct MixedGrsGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> row_cols;  // per V-vertex, its U-neighbors
    std::vector<RowColor> color;
    std::vector<std::size_t> shortened;  // I, sorted
};

MixedGrsGraph build_graph(const MatrixFq& t, const std::vector<std::size_t>& shortened);

// Outcome of the merge/prune reduction.
struct ReducedGraphSummary {
    // d(x) for each merged U-class (size >= 2) that survived pruning
    std::vector<std::size_t> merged_degrees;
    // J2': rows still of degree 2 at the fixpoint (never includes red rows)
    std::vector<std::size_t> remaining_degree2;
    // I1: rows of degree 1 in the original graph that disappeared
    std::vector<std::size_t> vanished_degree1;
    std::vector<std::size_t> shortened;  // the set I this summary came from

    std::size_t shorten_count() const { return shortened.size(); }
    std::size_t merge_excess() const {  // sum (d(x) - 1)
        std::size_t s = 0;
        for (std::size_t d : merged_degrees) s += d - 1;
        return s;
    }
};

// Merge phase: every red degree-2 row fuses its two U-neighbors.  Pruning:
// while a red degree-1 row remains, its U-class is forced to zero — the row
// and the class go away, current degree-1 neighbors of the class vanish, and
// degree-2 neighbors drop to degree 1.  Processing order is ascending index;
// the counted summary is order-independent.
ReducedGraphSummary reduce_graph(const MixedGrsGraph& g);

// 3(n-k) - 1 - 2|I1| + |J2'| - |I| - sum(d(x) - 1)
std::int64_t predicted_square_dim(const ReducedGraphSummary& s, std::size_t n, std::size_t k);

// 1 iff puncturing at i (not in I) is predicted to drop the square dimension.
int predicted_puncture_delta(const ReducedGraphSummary& s, std::size_t i);

}  // namespace grslab
