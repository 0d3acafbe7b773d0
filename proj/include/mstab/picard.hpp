#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mstab/errors.hpp"
#include "mstab/linalg.hpp"
#include "mstab/rational.hpp"

namespace mstab {

/// Exact divisor class on the moduli space of degree-d stable maps, written
/// over the basis {H, Delta_{k,d-k} : 1 <= k <= floor(d/2)}.  Immutable in
/// spirit: all operations return fresh values.
struct DivisorClass {
    int d = 0;
    Rat h;
    std::map<int, Rat> delta; // keys are exactly 1..d/2

    DivisorClass() = default;

    explicit DivisorClass(int degree) : d(degree) {
        if (d < 2) throw unsupported_parameters("divisor classes need d >= 2");
        for (int k = 1; k <= d / 2; ++k) delta[k] = 0;
    }

    bool operator==(const DivisorClass& o) const {
        return d == o.d && h == o.h && delta == o.delta;
    }

    DivisorClass& operator+=(const DivisorClass& o) {
        if (d != o.d) throw degree_mismatch("divisor degrees differ");
        h += o.h;
        for (auto& [k, v] : delta) v += o.delta.at(k);
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        if (d != o.d) throw degree_mismatch("divisor degrees differ");
        h -= o.h;
        for (auto& [k, v] : delta) v -= o.delta.at(k);
        return *this;
    }
    DivisorClass& operator*=(const Rat& s) {
        h *= s;
        for (auto& [k, v] : delta) v *= s;
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(DivisorClass a, const Rat& s) { return a *= s; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rat(-1); }

    bool is_zero() const {
        if (h != 0) return false;
        for (const auto& [k, v] : delta) {
            if (v != 0) return false;
        }
        return true;
    }
};

/// Intersection-number record of a one-parameter family against the basis.
struct CurveClass {
    int d = 0;
    std::string name;
    Rat dot_h;
    std::map<int, Rat> dot_delta;

    CurveClass() = default;
    CurveClass(int degree, std::string label) : d(degree), name(std::move(label)) {
        if (d < 2) throw unsupported_parameters("curve classes need d >= 2");
        for (int k = 1; k <= d / 2; ++k) dot_delta[k] = 0;
    }

    bool operator==(const CurveClass& o) const {
        return d == o.d && name == o.name && dot_h == o.dot_h && dot_delta == o.dot_delta;
    }
};

inline Rat pair(const CurveClass& c, const DivisorClass& D) {
    if (c.d != D.d) throw degree_mismatch("pairing needs matching d");
    Rat acc = c.dot_h * D.h;
    for (const auto& [k, v] : c.dot_delta) acc += v * D.delta.at(k);
    return acc;
}

// Coefficient vector [h, delta_1, ..., delta_{d/2}] for linear algebra.
inline QVec coeffs(const DivisorClass& D) {
    QVec v;
    v.reserve(1 + D.delta.size());
    v.push_back(D.h);
    for (const auto& [k, c] : D.delta) v.push_back(c);
    return v;
}

inline QVec pairing_row(const CurveClass& c) {
    QVec v;
    v.reserve(1 + c.dot_delta.size());
    v.push_back(c.dot_h);
    for (const auto& [k, x] : c.dot_delta) v.push_back(x);
    return v;
}

// The push-down/pull-back formulas of the k-stable contraction carry two
// recorded typo suspicions; "corrected" is the reading that satisfies the
// module invariants, "verbatim" reproduces the printed text.
enum class Cor36Reading { corrected, verbatim };

namespace classes {

inline DivisorClass hyperplane(int d) {
    DivisorClass x(d);
    x.h = 1;
    return x;
}

inline DivisorClass boundary(int d, int k) {
    DivisorClass x(d);
    if (k < 1 || k > d / 2) throw unsupported_parameters("boundary index out of range");
    x.delta[k] = 1;
    return x;
}

inline DivisorClass boundary_total(int d) {
    DivisorClass x(d);
    for (auto& [k, v] : x.delta) v = 1;
    return x;
}

/// Delta_wt = sum k(d-k)/d Delta_{k,d-k}.
inline DivisorClass weighted_boundary(int d) {
    DivisorClass x(d);
    for (auto& [k, v] : x.delta) v = Rat(Int(k) * (d - k), Int(d));
    return x;
}

inline DivisorClass T(int d) {
    return Rat(Int(d - 1), Int(d)) * hyperplane(d) + weighted_boundary(d);
}

inline DivisorClass A(int d) { return hyperplane(d); }

inline DivisorClass B(int d) { return T(d) - hyperplane(d); }

inline DivisorClass C(int d) { return -boundary_total(d); }

inline DivisorClass D_m(int d, long long m) {
    return (rat(m * m, 12) + rat(m)) * hyperplane(d) - rat(m) * T(d);
}

inline DivisorClass canonical(int d, int r) {
    if (r < 2) throw unsupported_parameters("canonical class needs r >= 2");
    return Rat(-Int(d + 1) * (r + 1), Int(2) * d) * hyperplane(d)
         + Rat(Int(r + 1), Int(2)) * weighted_boundary(d)
         - rat(2) * boundary_total(d);
}

inline DivisorClass D_deg(int d, std::optional<int> r = std::nullopt) {
    if (r && *r != d) throw unsupported_parameters("D_deg only exists when r == d");
    return Rat(Int(d + 1), Int(2) * d) * hyperplane(d)
         - rat(1, 2) * weighted_boundary(d);
}

inline DivisorClass NL(int d) {
    return Rat(Int(d - 1) * (2 * d - 1), Int(2) * d) * hyperplane(d)
         - rat(1, 2) * weighted_boundary(d);
}

inline DivisorClass TN(int d) {
    return Rat(Int(3) * (d - 1) * (d - 3), Int(d)) * hyperplane(d)
         + rat(d - 9) * weighted_boundary(d) + rat(4) * boundary_total(d);
}

inline DivisorClass TR(int d) {
    return Rat(Int(d - 1) * (d - 2) * (d - 3), Int(2) * d) * hyperplane(d)
         - Rat(Int(d - 6), Int(2)) * weighted_boundary(d) - boundary_total(d);
}

// Divisor of maps with singular (non-embedded) image.  The coefficient of
// Delta_wt is -2: that is the unique value solving the defining test-curve
// system at every d (the printed -d/2 agrees with it only at d = 4).
inline DivisorClass NI(int d) {
    return Rat(Int(d - 1) * (d - 2), Int(d)) * hyperplane(d)
         - rat(2) * weighted_boundary(d) + boundary_total(d);
}

inline DivisorClass P(int d) {
    if (d != 4) throw unsupported_parameters("P is only defined at d = 4");
    DivisorClass x(4);
    x.h = 1;
    x.delta[1] = 1;
    x.delta[2] = 4;
    return x;
}

inline DivisorClass Q(int d) {
    if (d != 4) throw unsupported_parameters("Q is only defined at d = 4");
    DivisorClass x(4);
    x.h = 3;
    x.delta[1] = 3;
    x.delta[2] = -2;
    return x;
}

/// Semi-ample class contracting the first k boundary components, pulled back
/// from the symmetrized weighted-pointed-curve model.  Implemented exactly as
/// printed; at k = 1 it is *not* proportional to T (the extra Delta_{i>1}
/// terms are nonzero), which is recorded behavior.
inline DivisorClass Lambda(int d, int k, const Rat& alpha) {
    if (k < 1 || k > (d - 1) / 2)
        throw unsupported_parameters("Lambda needs 1 <= k <= (d-1)/2");
    // alpha in (2/(k+2), 2/(k+1)]
    if (!(alpha > Rat(2, k + 2) && alpha <= Rat(2, k + 1)))
        throw unsupported_parameters("Lambda: alpha outside (2/(k+2), 2/(k+1)]");
    DivisorClass x = (alpha / 2 - Rat(1, d - 1)) * T(d);
    for (int i = 2; i <= k; ++i) {
        x.delta[i] += Rat(Int(i) * (i - 1), 2) * alpha - Rat(Int(i) * (i - 1), Int(d - 1));
    }
    for (int i = k + 1; i <= d / 2; ++i) {
        x.delta[i] += Rat(Int(i) * (d - i), Int(d - 1)) - 2 + alpha;
    }
    return x;
}

/// rho_k^* rho_{k*} H on the ambient space.
inline DivisorClass push_pull_h(int d, int k, Cor36Reading reading = Cor36Reading::corrected) {
    if (k < 0 || k > (d - 1) / 2)
        throw unsupported_parameters("push_pull_h needs 0 <= k <= (d-1)/2");
    if (reading == Cor36Reading::verbatim)
        throw unsupported_parameters(
            "verbatim reading writes Delta_{i,k-i}, which is not a class in the "
            "Delta_{k,d-k} basis; use the corrected reading");
    DivisorClass x = hyperplane(d);
    for (int i = 1; i <= k; ++i) x.delta[i] = Int(i) * i;
    return x;
}

/// Canonical class of the k-stable model, expressed over the pushed-down
/// basis {rho_{k*}H, rho_{k*}Delta_{j,d-j} : j > k}; entries with j <= k are
/// zero.  k = 0 reduces to the ambient canonical class under the corrected
/// H-coefficient (the verbatim one differs from it by a factor of d).
inline DivisorClass k_stable_canonical(int d, int k, int r,
                                       Cor36Reading reading = Cor36Reading::corrected) {
    if (k < 0 || k > (d - 1) / 2)
        throw unsupported_parameters("k_stable_canonical needs 0 <= k <= (d-1)/2");
    if (r < 2) throw unsupported_parameters("k_stable_canonical needs r >= 2");
    DivisorClass x(d);
    x.h = reading == Cor36Reading::verbatim
              ? Rat(-Int(r + 1) * (d + 1), 2)
              : Rat(-Int(r + 1) * (d + 1), Int(2) * d);
    for (int j = k + 1; j <= d / 2; ++j) {
        x.delta[j] = Rat(Int(r + 1) * j * (d - j), Int(2) * d) - 2;
    }
    return x;
}

} // namespace classes

/// Optional parameters for the string-keyed constructor used by the CLI.
struct NamedParams {
    std::optional<int> r;
    std::optional<long long> m;
    std::optional<int> k;
    std::optional<Rat> alpha;
    Cor36Reading reading = Cor36Reading::corrected;
};

inline DivisorClass named_class(const std::string& name, int d, const NamedParams& p = {}) {
    using namespace classes;
    auto need = [&](bool have, const char* what) {
        if (!have) throw unsupported_parameters(std::string(name) + " needs parameter " + what);
    };
    if (name == "H") return hyperplane(d);
    if (name == "A") return A(d);
    if (name == "B") return B(d);
    if (name == "C") return C(d);
    if (name == "Dm") { need(p.m.has_value(), "m"); return D_m(d, *p.m); }
    if (name == "K") { need(p.r.has_value(), "r"); return canonical(d, *p.r); }
    if (name == "Ddeg") return D_deg(d, p.r);
    if (name == "T") return T(d);
    if (name == "NL") return NL(d);
    if (name == "TN") return TN(d);
    if (name == "TR") return TR(d);
    if (name == "NI") return NI(d);
    if (name == "Delta") { need(p.k.has_value(), "k"); return boundary(d, *p.k); }
    if (name == "DeltaTotal") return boundary_total(d);
    if (name == "DeltaWt") return weighted_boundary(d);
    if (name == "P") return P(d);
    if (name == "Q") return Q(d);
    if (name == "Lambda") {
        need(p.k.has_value(), "k");
        need(p.alpha.has_value(), "alpha");
        return Lambda(d, *p.k, *p.alpha);
    }
    if (name == "PushPullH") { need(p.k.has_value(), "k"); return push_pull_h(d, *p.k, p.reading); }
    if (name == "KStable") {
        need(p.k.has_value(), "k");
        need(p.r.has_value(), "r");
        return k_stable_canonical(d, *p.k, *p.r, p.reading);
    }
    throw unsupported_parameters("unknown class name '" + name + "'");
}

inline const std::vector<std::string>& named_class_catalog() {
    static const std::vector<std::string> names = {
        "A", "B", "C", "Dm", "K", "Ddeg", "T", "NL", "TN", "TR", "NI",
        "Delta", "DeltaTotal", "DeltaWt", "P", "Q", "Lambda", "PushPullH", "KStable",
    };
    return names;
}

/// Parameters for the test-curve catalog.
struct CurveParams {
    std::optional<int> k; // C_k
    std::optional<int> m, s, r; // C_r(m, s) at a given r
    std::optional<int> i; // contracted family index
};

namespace curves {

inline CurveClass c0(int d) {
    CurveClass c(d, "C0");
    c.dot_h = 2;
    c.dot_delta[1] = 2 * d - 2;
    return c;
}

inline CurveClass c1(int d) {
    CurveClass c(d, "C1");
    c.dot_h = 1;
    c.dot_delta[1] = -1;
    return c;
}

inline CurveClass c2_test(int d) {
    if (d / 2 < 2) throw bad_parameters("C2 test family needs d >= 4");
    CurveClass c(d, "C2test");
    c.dot_h = 1;
    c.dot_delta[1] = 3;
    c.dot_delta[2] = -1;
    return c;
}

inline CurveClass ck(int d, int k) {
    if (k <= 2 || k > d / 2) throw bad_parameters("C_k needs 2 < k <= d/2");
    CurveClass c(d, "C" + std::to_string(k));
    c.dot_h = 2;
    c.dot_delta[1] += 2 * k - 3;
    c.dot_delta[k - 1] += 1;
    c.dot_delta[k] += -1;
    return c;
}

inline CurveClass b13() {
    CurveClass c(4, "B13");
    c.dot_h = 1;
    c.dot_delta[1] = -1;
    return c;
}

inline CurveClass b22() {
    CurveClass c(4, "B22");
    c.dot_h = 1;
    c.dot_delta[1] = 3;
    c.dot_delta[2] = -1;
    return c;
}

inline CurveClass b1() {
    CurveClass c(4, "B1");
    c.dot_h = 1;
    c.dot_delta[1] = 3;
    c.dot_delta[2] = 3;
    return c;
}

inline CurveClass b2() {
    CurveClass c(4, "B2");
    c.dot_h = 2;
    c.dot_delta[1] = 6;
    return c;
}

/// Pencil of (4, m)-curves through s general double points on a quadric,
/// projected to P^r.  The parameter constraint s = (5(m+1) - 1 - r)/3 keeps
/// the dimension count of the construction consistent.
inline CurveClass cr(int m, int s, int r) {
    if (3 * s != 5 * (m + 1) - 1 - r)
        throw bad_parameters("C_r requires s = (5(m+1)-1-r)/3");
    CurveClass c(4, "Cr(m=" + std::to_string(m) + ",s=" + std::to_string(s) + ")");
    c.dot_h = 8 * m - 4 * s;
    c.dot_delta[2] = s;
    return c;
}

inline CurveClass c2_moving() { auto c = cr(5, 9, 2); c.name = "C2"; return c; }
inline CurveClass c3_moving() { auto c = cr(7, 12, 3); c.name = "C3"; return c; }

inline CurveClass contract_family(int d, int i) {
    if (i < 1 || i > d / 2) throw bad_parameters("contracted family needs 1 <= i <= d/2");
    CurveClass c(d, "Contract" + std::to_string(i));
    c.dot_h = Int(i) * i;
    c.dot_delta[i] = -1;
    return c;
}

} // namespace curves

inline CurveClass test_curve(const std::string& name, int d, const CurveParams& p = {}) {
    using namespace curves;
    if (name == "C0") return c0(d);
    if (name == "C1") return c1(d);
    if (name == "C2test") return c2_test(d);
    if (name == "Ck") {
        if (!p.k) throw bad_parameters("Ck needs k");
        return ck(d, *p.k);
    }
    if (name == "B13") return b13();
    if (name == "B22") return b22();
    if (name == "B1") return b1();
    if (name == "B2") return b2();
    if (name == "Cr") {
        if (!p.m || !p.s || !p.r) throw bad_parameters("Cr needs m, s, r");
        return cr(*p.m, *p.s, *p.r);
    }
    if (name == "C2") return c2_moving();
    if (name == "C3") return c3_moving();
    if (name == "Contract") {
        if (!p.i) throw bad_parameters("Contract needs i");
        return contract_family(d, *p.i);
    }
    throw unknown_curve("unknown curve '" + name + "'");
}

/// Exact recovery of a divisor class from prescribed test-curve pairings.
inline DivisorClass solve_from_test_curves(const std::vector<CurveClass>& curves,
                                           const std::vector<Rat>& values, int d) {
    if (curves.size() != values.size())
        throw bad_parameters("curve and value lists differ in length");
    const std::size_t n = 1 + static_cast<std::size_t>(d / 2);
    if (curves.size() != n)
        throw singular_system("need exactly 1 + floor(d/2) independent curves");
    QMat m;
    for (const auto& c : curves) {
        if (c.d != d) throw degree_mismatch("curve degree differs from requested d");
        m.push_back(pairing_row(c));
    }
    auto sol = solve_square(m, values);
    if (!sol) throw singular_system("test-curve pairing matrix is singular");
    DivisorClass x(d);
    x.h = (*sol)[0];
    for (int k = 1; k <= d / 2; ++k) x.delta[k] = (*sol)[k];
    return x;
}

/// The test-curve system used to pin down NI at degree d, with its pairing
/// values: {C1, C2, C_k for 3 <= k <= d/2, C0} against {d-2, d-3, 2d-2k-1, 0}.
inline std::pair<std::vector<CurveClass>, std::vector<Rat>> ni_test_system(int d) {
    if (d < 3) throw bad_parameters("NI system needs d >= 3");
    std::vector<CurveClass> cs;
    std::vector<Rat> vals;
    cs.push_back(curves::c1(d));
    vals.push_back(rat(d - 2));
    if (d / 2 >= 2) {
        cs.push_back(curves::c2_test(d));
        vals.push_back(rat(d - 3));
    }
    for (int k = 3; k <= d / 2; ++k) {
        cs.push_back(curves::ck(d, k));
        vals.push_back(rat(2 * d - 2 * k - 1));
    }
    cs.push_back(curves::c0(d));
    vals.push_back(rat(0));
    return {cs, vals};
}

} // namespace mstab
