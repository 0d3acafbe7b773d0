#pragma once

#include <map>

#include "mstab/errors.hpp"
#include "mstab/presentation_io.hpp"
#include "mstab/ring.hpp"

namespace mstab {

/// vol(D) = D^top for a nef class D expressed in the presentation variables.
inline Rat nef_volume(const RingElement& d) {
    const auto deg = d.homogeneous_degree();
    if (!d.is_zero() && (!deg || *deg != 1))
        throw wrong_degree("nef volume needs a degree-1 homogeneous class");
    return integrate(d.pow(d.presentation().top_degree));
}

/// Top intersections H^a NL^(8-a) on the plane model of degree-3 maps:
/// NL restricts to the base line class and H to the fiber hyperplane.
inline std::map<int, Rat> volume_table_d3_r2() {
    static const RingPresentation pres = load_preset("m03-p2");
    const auto eta = RingElement::variable(pres, "eta");
    const auto l = RingElement::variable(pres, "l");
    std::map<int, Rat> table;
    for (int a = 8; a >= 0; --a) table[a] = integrate(eta.pow(a) * l.pow(8 - a));
    return table;
}

/// Top intersections H^a NL^(12-a) on the space model of degree-3 maps.
/// NL = H + D_deg numerically, so each step descends to the degenerate locus:
///   H^a NL^(12-a) = H^(a+1) NL^(11-a) + integral_{D_deg} (eta+3kappa)^a (lam+3kappa)^(11-a).
/// The top self-intersection H^12 enters as an external seed; it is an input
/// of this computation, not a result of it.
inline std::map<int, Rat> volume_table_d3_r3(const Rat& seed_h12) {
    static const RingPresentation pres = load_preset("m03-p3");
    const auto eta = RingElement::variable(pres, "eta");
    const auto kappa = RingElement::variable(pres, "kappa");
    const auto lam = RingElement::variable(pres, "lam");
    const auto h_res = eta + rat(3) * kappa;   // restriction of H
    const auto nl_res = lam + rat(3) * kappa;  // restriction of NL
    std::map<int, Rat> table;
    table[12] = seed_h12;
    for (int a = 11; a >= 0; --a)
        table[a] = table[a + 1] + integrate(h_res.pow(a) * nl_res.pow(11 - a));
    return table;
}

} // namespace mstab
