#pragma once

#include <iosfwd>
#include <string>

#include "grslab/codes.hpp"
#include "grslab/rational.hpp"

namespace grslab {

enum class TConstruction { A, B };

// Scheme parameters.  z is carried for format compatibility but keygen
// rejects z != 1; m is an exact rational so all floor counts are exact.
struct BbcrsParams {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t z = 1;
    Rational m{1, 1};
    TConstruction construction = TConstruction::A;

    void validate() const;
    PrimeField field() const { return PrimeField(q); }
    // |J2| = floor((m-1) n)
    std::size_t degree2_count() const;
    // t_pub = floor((n-k) / (2m))
    std::size_t public_error_budget() const;
    // gross GRS decoding budget floor((n-k)/2)
    std::size_t gross_error_budget() const { return (n - k) / 2; }
    // ceil(m * t_pub): residual-weight acceptance bound in decryption
    std::size_t residual_weight_bound() const;
    // Largest w with w + min(w, |J2|) <= floor((n-k)/2): errors of this
    // weight survive the T-mixing for every key, so honest decryption
    // never fails.
    std::size_t safe_error_weight() const;
};

struct BbcrsSecretKey {
    BbcrsParams params;
    GrsCode gsec;                 // secret GRS code (dimension k)
    MatrixFq s;                   // k x k invertible
    MatrixFq t;                   // n x n sparse (rows of weight 1 or 2)
    std::vector<Fe> alpha, beta;  // R = alpha^T beta, rank 1
    std::vector<std::size_t> j1, j2;

    MatrixFq q_matrix() const;  // T + R
    MatrixFq r_matrix() const;
};

struct BbcrsPublicKey {
    BbcrsParams params;
    MatrixFq gpub;  // k x n, full rank

    std::size_t t_pub() const { return params.public_error_budget(); }
};

struct TBuild {
    MatrixFq t;
    std::vector<std::size_t> j1, j2;
};

TBuild build_t_construction_a(const BbcrsParams& params, Rng& rng);
TBuild build_t_construction_b(const BbcrsParams& params, Rng& rng);

struct BbcrsKeyPair {
    BbcrsSecretKey sk;
    BbcrsPublicKey pk;
};

BbcrsKeyPair keygen(const BbcrsParams& params, Rng& rng);

struct Ciphertext {
    std::vector<Fe> c;
    std::size_t error_weight;  // weight actually drawn, recorded for tests
};

// c = m G_pub + e with wt(e) = min(weight_override, t_pub); the default
// weight is safe_error_weight() so decryption is deterministic-correct.
Ciphertext encrypt(const BbcrsPublicKey& pk, const std::vector<Fe>& message, Rng& rng,
                   std::optional<std::size_t> weight_override = std::nullopt);

std::vector<Fe> decrypt(const BbcrsSecretKey& sk, const std::vector<Fe>& ciphertext);

// Line-oriented text serialization (decimal integers only).
void write_secret_key(std::ostream& os, const BbcrsSecretKey& sk);
void write_public_key(std::ostream& os, const BbcrsPublicKey& pk);
BbcrsSecretKey read_secret_key(std::istream& is);
BbcrsPublicKey read_public_key(std::istream& is);
void write_vector_file(std::ostream& os, const std::string& kind, const BbcrsParams& p,
                       const std::vector<Fe>& v);
std::pair<BbcrsParams, std::vector<Fe>> read_vector_file(std::istream& is,
                                                         const std::string& kind);

}  // namespace grslab
