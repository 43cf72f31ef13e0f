#include "grslab/fq.hpp"

namespace grslab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw ParameterError("field modulus must be prime, got " + std::to_string(q));
    if (q % 2 == 0) throw ParameterError("field modulus must be odd");
    if (q < 3) throw ParameterError("field modulus must be >= 3");
}

Fe PrimeField::inv(Fe a) const {
    if (a == 0) throw MathError("division by zero in F_" + std::to_string(q_));
    // Extended Euclid on (a, q).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    return reduce_signed(t);
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const {
    Fe acc = 1;
    Fe base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace grslab
