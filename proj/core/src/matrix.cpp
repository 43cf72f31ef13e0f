#include "grslab/matrix.hpp"

#include "grslab/linalg.hpp"

namespace grslab {

MatrixFq MatrixFq::identity(PrimeField field, std::size_t n) {
    MatrixFq m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixFq MatrixFq::from_rows(PrimeField field, const std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) return MatrixFq(field, 0, 0);
    MatrixFq m(field, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        GRSLAB_CHECK(rows[r].size() == m.cols(), "ragged row list");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

MatrixFq MatrixFq::random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng) {
    MatrixFq m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.uniform(field);
    return m;
}

MatrixFq MatrixFq::random_invertible(PrimeField field, std::size_t n, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        MatrixFq m = random(field, n, n, rng);
        if (m.rank() == n) return m;
    }
    throw MathError("failed to sample an invertible matrix");
}

MatrixFq MatrixFq::mul(const MatrixFq& o) const {
    GRSLAB_CHECK(cols_ == o.rows_, "matrix product shape mismatch");
    MatrixFq out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Fe v = at(i, k);
            if (v == 0) continue;
            const Fe* orow = o.row(k);
            Fe* trow = out.row(i);
            for (std::size_t j = 0; j < o.cols_; ++j)
                trow[j] = field_.add(trow[j], field_.mul(v, orow[j]));
        }
    }
    return out;
}

std::vector<Fe> MatrixFq::mul_vec(const std::vector<Fe>& x) const {
    GRSLAB_CHECK(x.size() == cols_, "mul_vec shape mismatch");
    std::vector<Fe> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const Fe* r = row(i);
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += static_cast<std::uint64_t>(r[j]) * x[j];
            if (acc >> 62) acc %= field_.q();
        }
        out[i] = field_.reduce(acc);
    }
    return out;
}

std::vector<Fe> MatrixFq::mul_row(const std::vector<Fe>& x) const {
    GRSLAB_CHECK(x.size() == rows_, "mul_row shape mismatch");
    std::vector<Fe> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Fe v = x[i];
        if (v == 0) continue;
        const Fe* r = row(i);
        for (std::size_t j = 0; j < cols_; ++j) out[j] = field_.add(out[j], field_.mul(v, r[j]));
    }
    return out;
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

MatrixFq MatrixFq::add(const MatrixFq& o) const {
    GRSLAB_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    MatrixFq out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], o.a_[i]);
    return out;
}

std::optional<MatrixFq> MatrixFq::inverse() const {
    GRSLAB_CHECK(rows_ == cols_, "inverse of non-square matrix");
    std::size_t n = rows_;
    MatrixFq work(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work.at(i, j) = at(i, j);
        work.at(i, n + i) = 1;
    }
    RrefResult r = rref(work);
    if (r.rank < n) return std::nullopt;
    MatrixFq out(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.basis.mat.at(i, n + j);
    return out;
}

std::size_t MatrixFq::rank() const { return rref(*this).rank; }

void MatrixFq::append_row(const std::vector<Fe>& r) {
    GRSLAB_CHECK(r.size() == cols_ || rows_ == 0, "append_row shape mismatch");
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

void MatrixFq::scale_row(std::size_t r, Fe c) {
    Fe* p = row(r);
    for (std::size_t j = 0; j < cols_; ++j) p[j] = field_.mul(p[j], c);
}

void MatrixFq::add_scaled_row(std::size_t r, std::size_t s, Fe c) {
    Fe* pr = row(r);
    const Fe* ps = row(s);
    for (std::size_t j = 0; j < cols_; ++j) pr[j] = field_.add(pr[j], field_.mul(c, ps[j]));
}

void MatrixFq::add_scaled_col(std::size_t c2, std::size_t c1, Fe alpha) {
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, c2) = field_.add(at(i, c2), field_.mul(alpha, at(i, c1)));
}

MatrixFq MatrixFq::select_cols(const std::vector<std::size_t>& keep) const {
    MatrixFq out(field_, rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(i, keep[j]);
    return out;
}

MatrixFq MatrixFq::select_rows(const std::vector<std::size_t>& keep) const {
    MatrixFq out(field_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(keep[i], j);
    return out;
}

std::size_t MatrixFq::row_weight(std::size_t r) const {
    std::size_t w = 0;
    const Fe* p = row(r);
    for (std::size_t j = 0; j < cols_; ++j) w += p[j] != 0;
    return w;
}

bool MatrixFq::is_zero() const {
    for (Fe v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<Fe> star(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    GRSLAB_CHECK(a.size() == b.size(), "star product length mismatch");
    std::vector<Fe> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

Fe inner(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    GRSLAB_CHECK(a.size() == b.size(), "inner product length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<std::uint64_t>(a[i]) * b[i];
        if (acc >> 62) acc %= f.q();
    }
    return f.reduce(acc);
}

std::size_t weight(const std::vector<Fe>& v) {
    std::size_t w = 0;
    for (Fe x : v) w += x != 0;
    return w;
}

}  // namespace grslab
