#pragma once

#include <cstdint>
#include <vector>

#include "grslab/errors.hpp"

namespace grslab {

// Field elements are plain residues in [0, q).  All reduction goes through
// PrimeField so the invariant cannot drift.
using Fe = std::uint32_t;

bool is_prime(std::uint64_t n);

class PrimeField {
  public:
    // q must be an odd prime (supports need n <= q and 2 must be invertible).
    explicit PrimeField(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    Fe reduce(std::uint64_t x) const { return static_cast<Fe>(x % q_); }
    Fe reduce_signed(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<Fe>(r);
    }

    Fe add(Fe a, Fe b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return s >= q_ ? static_cast<Fe>(s - q_) : static_cast<Fe>(s);
    }
    Fe sub(Fe a, Fe b) const { return a >= b ? a - b : static_cast<Fe>(a + q_ - b); }
    Fe neg(Fe a) const { return a == 0 ? 0 : q_ - a; }
    Fe mul(Fe a, Fe b) const { return static_cast<Fe>(static_cast<std::uint64_t>(a) * b % q_); }
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::uint64_t e) const;

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

  private:
    std::uint32_t q_;
};

}  // namespace grslab
