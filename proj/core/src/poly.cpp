#include "grslab/poly.hpp"

namespace grslab::poly {

std::vector<Fe> trim(const PrimeField&, std::vector<Fe> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const std::vector<Fe>& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Fe eval(const PrimeField& f, const std::vector<Fe>& p, Fe x) {
    Fe acc = 0;
    for (std::size_t i = p.size(); i > 0; --i) acc = f.add(f.mul(acc, x), p[i - 1]);
    return acc;
}

std::vector<Fe> mul(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Fe> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

std::vector<Fe> add(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    std::vector<Fe> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Fe x = i < a.size() ? a[i] : 0;
        Fe y = i < b.size() ? b[i] : 0;
        out[i] = f.add(x, y);
    }
    return out;
}

std::pair<std::vector<Fe>, std::vector<Fe>> divrem(const PrimeField& f, std::vector<Fe> num,
                                                   const std::vector<Fe>& den) {
    int dden = degree(den);
    GRSLAB_CHECK(dden >= 0, "polynomial division by zero");
    Fe lead_inv = f.inv(den[dden]);
    int dnum = degree(num);
    if (dnum < dden) return {{}, trim(f, std::move(num))};
    std::vector<Fe> quot(dnum - dden + 1, 0);
    for (int d = dnum; d >= dden; --d) {
        Fe c = num[d];
        if (c == 0) continue;
        Fe q = f.mul(c, lead_inv);
        quot[d - dden] = q;
        for (int j = 0; j <= dden; ++j)
            num[d - dden + j] = f.sub(num[d - dden + j], f.mul(q, den[j]));
    }
    return {trim(f, std::move(quot)), trim(f, std::move(num))};
}

std::vector<Fe> from_roots(const PrimeField& f, const std::vector<Fe>& roots) {
    std::vector<Fe> p{1};
    for (Fe r : roots) p = mul(f, p, {f.neg(r), 1});
    return p;
}

std::vector<Fe> interpolate(const PrimeField& f, const std::vector<Fe>& xs,
                            const std::vector<Fe>& ys) {
    GRSLAB_CHECK(xs.size() == ys.size(), "interpolation point count mismatch");
    std::vector<Fe> acc;  // Newton form accumulation
    std::vector<Fe> basis{1};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Fe cur = eval(f, acc, xs[i]);
        Fe scale = eval(f, basis, xs[i]);
        Fe coef = f.div(f.sub(ys[i], cur), scale);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Fe t = f.mul(coef, basis[j]);
            if (j < acc.size())
                acc[j] = f.add(acc[j], t);
            else
                acc.push_back(t);
        }
        basis = mul(f, basis, {f.neg(xs[i]), 1});
    }
    return trim(f, std::move(acc));
}

std::vector<Fe> roots(const PrimeField& f, const std::vector<Fe>& p) {
    std::vector<Fe> out;
    if (degree(p) < 0) return out;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (eval(f, p, static_cast<Fe>(x)) == 0) out.push_back(static_cast<Fe>(x));
    return out;
}

}  // namespace grslab::poly
