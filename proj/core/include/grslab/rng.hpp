#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "grslab/fq.hpp"

namespace grslab {

// Deterministic RNG.  mt19937_64 output is pinned by the standard and we do
// our own bounded sampling, so seeds reproduce across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw MathError("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    Fe uniform(const PrimeField& f) { return static_cast<Fe>(below(f.q())); }
    Fe nonzero(const PrimeField& f) { return static_cast<Fe>(1 + below(f.q() - 1)); }

    // k distinct values from [0, n), sorted.
    std::vector<std::size_t> subset(std::size_t n, std::size_t k) {
        if (k > n) throw MathError("subset larger than ground set");
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // Independent child stream; used to keep parallel trials deterministic.
    Rng derive(std::uint64_t salt) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace grslab
