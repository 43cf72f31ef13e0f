#include "grslab/codes.hpp"

#include <algorithm>
#include <set>

#include "grslab/poly.hpp"

namespace grslab {

LinearCode make_code(const MatrixFq& generator) {
    return LinearCode{generator.cols(), row_space(generator)};
}

void GrsCode::validate() const {
    std::size_t n = support.size();
    if (multiplier.size() != n) throw ParameterError("GRS support/multiplier length mismatch");
    if (!(1 <= dim && dim < n)) throw ParameterError("GRS dimension must satisfy 1 <= k < n");
    if (n > field.q()) throw ParameterError("GRS length exceeds field size");
    std::set<Fe> seen(support.begin(), support.end());
    if (seen.size() != n) throw ParameterError("GRS support not pairwise distinct");
    for (Fe y : multiplier)
        if (y == 0) throw ParameterError("GRS multiplier has a zero entry");
}

MatrixFq GrsCode::natural_generator() const {
    std::size_t n = support.size();
    MatrixFq g(field, dim, n);
    for (std::size_t j = 0; j < n; ++j) {
        Fe acc = multiplier[j];
        for (std::size_t i = 0; i < dim; ++i) {
            g.at(i, j) = acc;
            acc = field.mul(acc, support[j]);
        }
    }
    return g;
}

std::vector<Fe> GrsCode::codeword(const std::vector<Fe>& poly_coeffs) const {
    GRSLAB_CHECK(poly::degree(poly_coeffs) < static_cast<int>(dim), "codeword degree too high");
    std::size_t n = support.size();
    std::vector<Fe> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = field.mul(multiplier[j], poly::eval(field, poly_coeffs, support[j]));
    return out;
}

GrsCode random_grs(PrimeField field, std::size_t n, std::size_t k, Rng& rng) {
    if (n > field.q()) throw ParameterError("GRS length exceeds field size");
    std::vector<std::size_t> pick = rng.subset(field.q(), n);
    std::vector<Fe> x(pick.begin(), pick.end());
    rng.shuffle(x);
    std::vector<Fe> y(n);
    for (auto& v : y) v = rng.nonzero(field);
    GrsCode g{field, std::move(x), std::move(y), k};
    g.validate();
    return g;
}

LinearCode grs_expand(const GrsCode& g) {
    g.validate();
    LinearCode c = make_code(g.natural_generator());
    GRSLAB_CHECK(c.dim() == g.dim, "GRS expansion lost rank");
    return c;
}

std::vector<Fe> grs_dual_multiplier(const PrimeField& f, const std::vector<Fe>& support,
                                    const std::vector<Fe>& multiplier) {
    std::size_t n = support.size();
    std::vector<Fe> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Fe prod = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            prod = f.mul(prod, f.sub(support[i], support[j]));
        }
        out[i] = f.inv(f.mul(multiplier[i], prod));
    }
    return out;
}

GrsCode grs_dual(const GrsCode& g) {
    GrsCode d{g.field, g.support, grs_dual_multiplier(g.field, g.support, g.multiplier),
              g.length() - g.dim};
    d.validate();
    return d;
}

LinearCode code_dual(const LinearCode& c) {
    if (c.dim() == 0) {
        MatrixFq full = MatrixFq::identity(c.field(), c.length);
        return LinearCode{c.length, row_space(full)};
    }
    return LinearCode{c.length, kernel(c.basis.mat)};
}

LinearCode star_product(const LinearCode& a, const LinearCode& b) {
    if (a.length != b.length) throw ParameterError("star product length mismatch");
    const PrimeField& f = a.field();
    MatrixFq gens(f, 0, a.length);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Fe> ra = a.basis.mat.row_vec(i);
        for (std::size_t j = 0; j < b.dim(); ++j)
            gens.append_row(star(f, ra, b.basis.mat.row_vec(j)));
    }
    return LinearCode{a.length, row_space(gens)};
}

LinearCode square_code(const LinearCode& a) {
    const PrimeField& f = a.field();
    // k(k+1)/2 unordered products, then one elimination.
    MatrixFq gens(f, 0, a.length);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Fe> ra = a.basis.mat.row_vec(i);
        for (std::size_t j = i; j < a.dim(); ++j)
            gens.append_row(star(f, ra, a.basis.mat.row_vec(j)));
    }
    LinearCode sq{a.length, row_space(gens)};
    std::size_t k = a.dim();
    GRSLAB_CHECK(sq.dim() <= std::min(a.length, k * (k + 1) / 2),
                 "square dimension exceeds its bound");
    return sq;
}

static void check_positions(std::size_t n, const std::vector<std::size_t>& positions) {
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t p : positions) {
        if (p >= n) throw ParameterError("position out of range");
        if (!first && p <= prev) throw ParameterError("positions must be sorted and distinct");
        prev = p;
        first = false;
    }
}

std::vector<std::size_t> kept_positions(std::size_t n, const std::vector<std::size_t>& removed) {
    std::vector<std::size_t> keep;
    keep.reserve(n - removed.size());
    std::size_t ri = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ri < removed.size() && removed[ri] == i) {
            ++ri;
            continue;
        }
        keep.push_back(i);
    }
    return keep;
}

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& positions) {
    check_positions(c.length, positions);
    if (positions.empty()) return c;
    const PrimeField& f = c.field();
    std::vector<std::size_t> keep = kept_positions(c.length, positions);
    // Put the shortened columns first; RREF rows whose pivot falls outside
    // that block vanish on it and span exactly the shortened code.
    MatrixFq perm(f, c.dim(), c.length);
    for (std::size_t r = 0; r < c.dim(); ++r) {
        for (std::size_t j = 0; j < positions.size(); ++j)
            perm.at(r, j) = c.basis.mat.at(r, positions[j]);
        for (std::size_t j = 0; j < keep.size(); ++j)
            perm.at(r, positions.size() + j) = c.basis.mat.at(r, keep[j]);
    }
    RrefResult rr = rref(perm);
    MatrixFq gens(f, 0, keep.size());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] < positions.size()) continue;
        std::vector<Fe> v(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j)
            v[j] = rr.basis.mat.at(r, positions.size() + j);
        gens.append_row(v);
    }
    return LinearCode{keep.size(), row_space(gens)};
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions) {
    check_positions(c.length, positions);
    if (positions.empty()) return c;
    std::vector<std::size_t> keep = kept_positions(c.length, positions);
    return LinearCode{keep.size(), row_space(c.basis.mat.select_cols(keep))};
}

std::optional<std::vector<Fe>> bw_decode(const GrsCode& g, const std::vector<Fe>& received,
                                         std::size_t t) {
    g.validate();
    std::size_t n = g.length(), k = g.dim;
    GRSLAB_CHECK(received.size() == n, "received word length mismatch");
    if (t > (n - k) / 2) throw ParameterError("error budget beyond unique-decoding radius");
    const PrimeField& f = g.field;

    // Normalize multipliers away: r_i = received_i / y_i = P(x_i) + err.
    std::vector<Fe> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f.div(received[i], g.multiplier[i]);

    // E(x_i) r_i = N(x_i) with deg E <= t, deg N < k + t; any nonzero solution
    // of the homogeneous system has E != 0 and N/E = P when <= t errors hit.
    std::size_t ecoef = t + 1, ncoef = k + t;
    MatrixFq sys(f, n, ecoef + ncoef);
    for (std::size_t i = 0; i < n; ++i) {
        Fe xp = 1;
        for (std::size_t j = 0; j < ecoef; ++j) {
            sys.at(i, j) = f.mul(r[i], xp);
            xp = f.mul(xp, g.support[i]);
        }
        xp = 1;
        for (std::size_t j = 0; j < ncoef; ++j) {
            sys.at(i, ecoef + j) = f.neg(xp);
            xp = f.mul(xp, g.support[i]);
        }
    }
    SubspaceBasis null = kernel(sys);
    if (null.dim() == 0) return std::nullopt;
    std::vector<Fe> sol = null.mat.row_vec(0);
    std::vector<Fe> epoly(sol.begin(), sol.begin() + ecoef);
    std::vector<Fe> npoly(sol.begin() + ecoef, sol.end());
    epoly = poly::trim(f, std::move(epoly));
    npoly = poly::trim(f, std::move(npoly));
    if (poly::degree(epoly) < 0) return std::nullopt;
    auto [quot, rem] = poly::divrem(f, npoly, epoly);
    if (poly::degree(rem) >= 0) return std::nullopt;
    if (poly::degree(quot) >= static_cast<int>(k)) return std::nullopt;
    std::vector<Fe> cw = g.codeword(quot);
    std::size_t dist = 0;
    for (std::size_t i = 0; i < n; ++i) dist += cw[i] != received[i];
    if (dist > t) return std::nullopt;
    return cw;
}

LinearCode random_code(std::size_t n, std::size_t k, PrimeField field, Rng& rng) {
    if (k > n) throw ParameterError("random code dimension exceeds length");
    if (k == 0) return LinearCode{n, zero_space(field, n)};
    for (int attempt = 0; attempt < 100; ++attempt) {
        MatrixFq m = MatrixFq::random(field, k, n, rng);
        RrefResult rr = rref(m);
        if (rr.rank == k) return LinearCode{n, rr.basis};
    }
    throw MathError("failed to sample a full-rank code");
}

}  // namespace grslab
