#include "grslab/linalg.hpp"

namespace grslab {

RrefResult rref(const MatrixFq& m) {
    MatrixFq work = m;
    const PrimeField& f = work.field();
    std::size_t rows = work.rows(), cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t piv_row = 0;
    for (std::size_t col = 0; col < cols && piv_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = piv_row; r < rows; ++r) {
            if (work.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != piv_row) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(work.at(sel, j), work.at(piv_row, j));
        }
        Fe p = work.at(piv_row, col);
        if (p != 1) work.scale_row(piv_row, f.inv(p));
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == piv_row) continue;
            Fe v = work.at(r, col);
            if (v != 0) work.add_scaled_row(r, piv_row, f.neg(v));
        }
        pivots.push_back(col);
        ++piv_row;
    }
    MatrixFq basis(f, piv_row, cols);
    for (std::size_t r = 0; r < piv_row; ++r)
        for (std::size_t j = 0; j < cols; ++j) basis.at(r, j) = work.at(r, j);
    return RrefResult{SubspaceBasis{cols, std::move(basis)}, piv_row, std::move(pivots)};
}

SubspaceBasis row_space(const MatrixFq& m) { return rref(m).basis; }

SubspaceBasis zero_space(PrimeField field, std::size_t ambient) {
    return SubspaceBasis{ambient, MatrixFq(field, 0, ambient)};
}

bool SubspaceBasis::contains(const std::vector<Fe>& v) const {
    GRSLAB_CHECK(v.size() == ambient, "containment check in wrong ambient");
    const PrimeField& f = mat.field();
    std::vector<Fe> w = v;
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        // pivot = first nonzero of row r
        std::size_t p = 0;
        while (p < ambient && mat.at(r, p) == 0) ++p;
        if (p == ambient) continue;
        if (w[p] != 0) {
            Fe c = f.neg(w[p]);
            for (std::size_t j = p; j < ambient; ++j) w[j] = f.add(w[j], f.mul(c, mat.at(r, j)));
        }
    }
    for (Fe x : w)
        if (x != 0) return false;
    return true;
}

bool SubspaceBasis::contains_space(const SubspaceBasis& o) const {
    if (o.ambient != ambient) return false;
    for (std::size_t r = 0; r < o.mat.rows(); ++r)
        if (!contains(o.mat.row_vec(r))) return false;
    return true;
}

SubspaceBasis kernel(const MatrixFq& m) {
    RrefResult r = rref(m);
    const PrimeField& f = m.field();
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    MatrixFq gens(f, 0, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fe> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.basis.mat.at(i, c));
        gens.append_row(v);
    }
    return row_space(gens);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    GRSLAB_CHECK(a.ambient == b.ambient, "subspace sum: ambient mismatch");
    MatrixFq stacked(a.mat.field(), 0, a.ambient);
    for (std::size_t r = 0; r < a.mat.rows(); ++r) stacked.append_row(a.mat.row_vec(r));
    for (std::size_t r = 0; r < b.mat.rows(); ++r) stacked.append_row(b.mat.row_vec(r));
    return row_space(stacked);
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    GRSLAB_CHECK(a.ambient == b.ambient, "subspace intersection: ambient mismatch");
    const PrimeField& f = a.mat.field();
    std::size_t n = a.ambient;
    // Zassenhaus: rows [a|a] and [b|0]; RREF rows with zero left half carry
    // the intersection in their right half.
    MatrixFq work(f, 0, 2 * n);
    for (std::size_t r = 0; r < a.mat.rows(); ++r) {
        std::vector<Fe> v(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) v[j] = v[n + j] = a.mat.at(r, j);
        work.append_row(v);
    }
    for (std::size_t r = 0; r < b.mat.rows(); ++r) {
        std::vector<Fe> v(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) v[j] = b.mat.at(r, j);
        work.append_row(v);
    }
    RrefResult rr = rref(work);
    MatrixFq gens(f, 0, n);
    for (std::size_t r = 0; r < rr.basis.mat.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = rr.basis.mat.at(r, j) == 0;
        if (!left_zero) continue;
        std::vector<Fe> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = rr.basis.mat.at(r, n + j);
        gens.append_row(v);
    }
    return row_space(gens);
}

std::optional<std::vector<Fe>> solve_linear(const MatrixFq& m, const std::vector<Fe>& rhs) {
    GRSLAB_CHECK(rhs.size() == m.rows(), "solve_linear: rhs length mismatch");
    const PrimeField& f = m.field();
    MatrixFq aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    RrefResult rr = rref(aug);
    std::vector<Fe> x(m.cols(), 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt;  // pivot in rhs column
        x[rr.pivots[i]] = rr.basis.mat.at(i, m.cols());
    }
    return x;
}

}  // namespace grslab
