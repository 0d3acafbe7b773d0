#pragma once

#include <cstdint>

#include "mstab/errors.hpp"

namespace mstab {

/// Arithmetic in the prime field F_p, p < 2^31.  The element type is a plain
/// int64 in [0, p); a field object carries the modulus so p stays runtime-
/// configurable.
struct PrimeField {
    using elem = std::int64_t;
    std::int64_t p;

    explicit PrimeField(std::int64_t modulus) : p(modulus) {
        // p < 2^31 keeps every product of reduced elements inside int64
        if (p < 2 || p >= (std::int64_t{1} << 31))
            throw bad_parameters("field characteristic must be in [2, 2^31)");
    }

    elem from_int(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem add(elem a, elem b) const { return (a + b) % p; }
    elem sub(elem a, elem b) const { return (a - b + p) % p; }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem mul(elem a, elem b) const { return a * b % p; }
    elem inv(elem a) const {
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            const std::int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (r != 1) throw bad_parameters("non-invertible element mod p");
        return t < 0 ? t + p : t;
    }
    bool is_zero(elem a) const { return a == 0; }
    bool is_unit(elem a) const { return a != 0; }
    elem pow(elem base, std::int64_t e) const {
        elem acc = 1;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

/// F_p[u]/(u^2): carries exact first-order deformation data through linear
/// algebra.  a = c0 + c1 u is a unit iff c0 != 0.
struct DualField {
    struct elem {
        std::int64_t c0 = 0; // value
        std::int64_t c1 = 0; // u-coefficient
        bool operator==(const elem&) const = default;
    };
    PrimeField base;

    explicit DualField(std::int64_t modulus) : base(modulus) {}

    elem from_int(std::int64_t v) const { return {base.from_int(v), 0}; }
    elem lift(PrimeField::elem v, PrimeField::elem dv = 0) const { return {v, dv}; }
    elem zero() const { return {}; }
    elem one() const { return {1, 0}; }
    elem add(elem a, elem b) const { return {base.add(a.c0, b.c0), base.add(a.c1, b.c1)}; }
    elem sub(elem a, elem b) const { return {base.sub(a.c0, b.c0), base.sub(a.c1, b.c1)}; }
    elem neg(elem a) const { return {base.neg(a.c0), base.neg(a.c1)}; }
    elem mul(elem a, elem b) const {
        return {base.mul(a.c0, b.c0),
                base.add(base.mul(a.c0, b.c1), base.mul(a.c1, b.c0))};
    }
    elem inv(elem a) const {
        if (a.c0 == 0) throw degenerate_pivot("dual number with nilpotent constant part");
        const auto i0 = base.inv(a.c0);
        return {i0, base.neg(base.mul(base.mul(a.c1, i0), i0))};
    }
    bool is_zero(elem a) const { return a.c0 == 0 && a.c1 == 0; }
    bool is_unit(elem a) const { return a.c0 != 0; }
};

} // namespace mstab
