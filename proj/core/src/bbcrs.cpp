#include "grslab/bbcrs.hpp"

#include <algorithm>
#include <set>

namespace grslab {

namespace {
constexpr int kResampleCap = 100;
}

void BbcrsParams::validate() const {
    PrimeField f(q);  // checks odd prime
    if (n > q) throw ParameterError("n must satisfy n <= q");
    if (!(k >= 1 && k < n)) throw ParameterError("k must satisfy 1 <= k < n");
    if (z != 1) throw ParameterError("only z = 1 is supported");
    if (!(Rational(1, 1) < m && m <= Rational(2, 1)))
        throw ParameterError("density m must satisfy 1 < m <= 2");
}

std::size_t BbcrsParams::degree2_count() const {
    Rational ell = (m - Rational(1, 1)) * Rational::from_int(static_cast<std::int64_t>(n));
    return static_cast<std::size_t>(ell.floor());
}

std::size_t BbcrsParams::public_error_budget() const {
    Rational t = Rational::from_int(static_cast<std::int64_t>(n - k)) / (Rational(2, 1) * m);
    return static_cast<std::size_t>(t.floor());
}

std::size_t BbcrsParams::residual_weight_bound() const {
    Rational b = m * Rational::from_int(static_cast<std::int64_t>(public_error_budget()));
    return static_cast<std::size_t>(b.ceil());
}

std::size_t BbcrsParams::safe_error_weight() const {
    std::size_t ell = degree2_count();
    std::size_t budget = gross_error_budget();
    std::size_t best = 0;
    for (std::size_t w = 0; w <= budget; ++w)
        if (w + std::min(w, ell) <= budget) best = w;
    return std::min(best, public_error_budget());
}

TBuild build_t_construction_a(const BbcrsParams& params, Rng& rng) {
    params.validate();
    PrimeField f = params.field();
    std::size_t n = params.n;
    std::size_t t = (params.n - params.k) / 2;
    std::size_t delta_t =
        t - static_cast<std::size_t>((Rational::from_int(static_cast<std::int64_t>(t)) / params.m).floor());
    std::size_t ell = params.degree2_count();
    if (ell > 0 && delta_t == 0)
        throw ParameterError("construction A has no columns for second entries (delta_t = 0)");

    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        // Scaled permutation.
        std::vector<std::size_t> pi(n);
        for (std::size_t i = 0; i < n; ++i) pi[i] = i;
        rng.shuffle(pi);
        MatrixFq tm(f, n, n);
        for (std::size_t i = 0; i < n; ++i) tm.at(i, pi[i]) = rng.nonzero(f);

        std::vector<std::size_t> cset = rng.subset(n, delta_t);
        std::vector<std::size_t> j2 = rng.subset(n, ell);

        bool ok = true;
        for (std::size_t i : j2) {
            std::vector<std::size_t> choices;
            for (std::size_t c : cset)
                if (c != pi[i]) choices.push_back(c);
            if (choices.empty()) {
                ok = false;
                break;
            }
            std::size_t j = choices[rng.below(choices.size())];
            tm.at(i, j) = rng.nonzero(f);
        }
        if (!ok) continue;
        if (tm.rank() != n) continue;

        std::vector<std::size_t> j1;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(j2.begin(), j2.end(), i)) j1.push_back(i);
        return TBuild{std::move(tm), std::move(j1), std::move(j2)};
    }
    throw ParameterError("construction A failed to produce an invertible T");
}

TBuild build_t_construction_b(const BbcrsParams& params, Rng& rng) {
    params.validate();
    PrimeField f = params.field();
    std::size_t n = params.n;
    std::size_t ell = params.degree2_count();

    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        std::vector<std::size_t> p1(n), p2(n);
        for (std::size_t i = 0; i < n; ++i) p1[i] = p2[i] = i;
        rng.shuffle(p1);
        rng.shuffle(p2);
        std::vector<std::size_t> j2 = rng.subset(n, ell);
        bool overlap = false;
        for (std::size_t i : j2)
            if (p1[i] == p2[i]) overlap = true;
        if (overlap) continue;

        MatrixFq tm(f, n, n);
        for (std::size_t i = 0; i < n; ++i) tm.at(i, p1[i]) = rng.nonzero(f);
        for (std::size_t i : j2) tm.at(i, p2[i]) = rng.nonzero(f);
        if (tm.rank() != n) continue;

        std::vector<std::size_t> j1;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(j2.begin(), j2.end(), i)) j1.push_back(i);
        return TBuild{std::move(tm), std::move(j1), std::move(j2)};
    }
    throw ParameterError("construction B failed (overlap or singular T)");
}

MatrixFq BbcrsSecretKey::r_matrix() const {
    const PrimeField& f = t.field();
    MatrixFq r(f, params.n, params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < params.n; ++j) r.at(i, j) = f.mul(alpha[i], beta[j]);
    }
    return r;
}

MatrixFq BbcrsSecretKey::q_matrix() const { return t.add(r_matrix()); }

BbcrsKeyPair keygen(const BbcrsParams& params, Rng& rng) {
    params.validate();
    PrimeField f = params.field();
    std::size_t n = params.n, k = params.k;

    // Information-set condition needs n-k <= |J1|, i.e. m <= 1 + R.
    std::size_t ell = params.degree2_count();
    if (n - ell < n - k)
        throw ParameterError("degree-1 positions cannot contain an information set (m > 1 + R)");

    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        GrsCode gsec = random_grs(f, n, k, rng);
        TBuild tb = params.construction == TConstruction::A ? build_t_construction_a(params, rng)
                                                            : build_t_construction_b(params, rng);

        // Degree-1 positions must contain an information set of C_sec^dual T^T.
        GrsCode gsec_dual = grs_dual(gsec);
        MatrixFq hsec = gsec_dual.natural_generator();
        MatrixFq ht = hsec.mul(tb.t.transpose());
        if (ht.select_cols(tb.j1).rank() != n - k) continue;

        BbcrsSecretKey sk{params, std::move(gsec), MatrixFq(f, 0, 0), std::move(tb.t), {}, {},
                          std::move(tb.j1), std::move(tb.j2)};

        bool ok = false;
        for (int inner = 0; inner < kResampleCap; ++inner) {
            std::vector<Fe> alpha(n), beta(n);
            for (auto& v : alpha) v = rng.uniform(f);
            for (auto& v : beta) v = rng.uniform(f);
            if (weight(alpha) == 0 || weight(beta) == 0) continue;
            sk.alpha = alpha;
            sk.beta = beta;
            if (sk.q_matrix().inverse()) {
                ok = true;
                break;
            }
        }
        if (!ok) continue;

        sk.s = MatrixFq::random_invertible(f, k, rng);

        MatrixFq sinv = *sk.s.inverse();
        MatrixFq qinv = *sk.q_matrix().inverse();
        MatrixFq gpub = sinv.mul(sk.gsec.natural_generator()).mul(qinv);
        GRSLAB_CHECK(gpub.rank() == k, "public generator lost rank");
        return BbcrsKeyPair{std::move(sk), BbcrsPublicKey{params, std::move(gpub)}};
    }
    throw ParameterError("keygen exhausted resampling attempts");
}

Ciphertext encrypt(const BbcrsPublicKey& pk, const std::vector<Fe>& message, Rng& rng,
                   std::optional<std::size_t> weight_override) {
    const BbcrsParams& p = pk.params;
    if (message.size() != p.k) throw ParameterError("message length must be k");
    PrimeField f = p.field();
    std::size_t w = weight_override.value_or(p.safe_error_weight());
    if (w > p.public_error_budget())
        throw ParameterError("requested error weight exceeds t_pub");
    std::vector<Fe> c = pk.gpub.mul_row(message);
    std::vector<std::size_t> supp = rng.subset(p.n, w);
    for (std::size_t i : supp) c[i] = f.add(c[i], rng.nonzero(f));
    return Ciphertext{std::move(c), w};
}

std::vector<Fe> decrypt(const BbcrsSecretKey& sk, const std::vector<Fe>& ciphertext) {
    const BbcrsParams& p = sk.params;
    if (ciphertext.size() != p.n) throw ParameterError("ciphertext length must be n");
    PrimeField f = p.field();
    MatrixFq q = sk.q_matrix();
    MatrixFq qinv = *q.inverse();
    std::vector<Fe> cq = q.mul_row(ciphertext);  // treating c as a row vector
    std::size_t budget = p.gross_error_budget();
    std::size_t residual_bound = p.residual_weight_bound();
    MatrixFq gsec = sk.gsec.natural_generator();

    // e R = (e alpha^T) beta, so the q guesses s*beta cover it (z = 1).
    for (std::uint32_t s = 0; s < f.q(); ++s) {
        std::vector<Fe> cprime(p.n);
        for (std::size_t i = 0; i < p.n; ++i)
            cprime[i] = f.sub(cq[i], f.mul(static_cast<Fe>(s), sk.beta[i]));
        auto decoded = bw_decode(sk.gsec, cprime, budget);
        if (!decoded) continue;
        std::vector<Fe> residual(p.n);
        for (std::size_t i = 0; i < p.n; ++i) residual[i] = f.sub(cprime[i], (*decoded)[i]);
        if (weight(residual) > residual_bound) continue;
        // decoded = (m S^-1) G_sec; recover the coefficients and unscramble.
        auto coeffs = solve_linear(gsec.transpose(), *decoded);
        if (!coeffs) continue;
        std::vector<Fe> msg = sk.s.mul_row(*coeffs);  // (m S^-1) S
        // Re-encryption check: the implied error must fit the public budget.
        std::vector<Fe> cw = qinv.mul_row(gsec.mul_row(*coeffs));
        std::size_t err_wt = 0;
        for (std::size_t i = 0; i < p.n; ++i) err_wt += cw[i] != ciphertext[i];
        if (err_wt > p.public_error_budget()) continue;
        return msg;
    }
    throw DecryptionError("all e*R guesses failed");
}

}  // namespace grslab
