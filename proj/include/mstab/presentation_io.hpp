#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>

#include "mstab/errors.hpp"
#include "mstab/ring.hpp"

namespace mstab {

namespace presdetail {

inline std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// monomial expression: NAME[^exp] ('*' NAME[^exp])* or "1"
inline Monomial parse_monomial(const RingPresentation& p, const std::string& text) {
    Monomial m(p.vars.size(), 0);
    const std::string body = strip(text);
    if (body == "1" || body.empty()) return m;
    std::stringstream ss(body);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        factor = strip(factor);
        if (factor.empty()) throw parse_error("empty factor in monomial '" + text + "'");
        const auto caret = factor.find('^');
        const std::string name = strip(factor.substr(0, caret));
        int exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(strip(factor.substr(caret + 1)));
            } catch (...) {
                throw parse_error("bad exponent in '" + factor + "'");
            }
        }
        if (exp < 0) throw parse_error("negative exponent in '" + factor + "'");
        m[p.var_index(name)] += exp;
    }
    return m;
}

// polynomial: [-] term (('+'|'-') term)*, term: [coef '*'] monomial | coef
inline TermMap parse_poly(const RingPresentation& p, const std::string& text) {
    TermMap out;
    const std::string body = strip(text);
    if (body == "0") return out;
    std::size_t i = 0;
    int sign = 1;
    if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
        sign = body[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < body.size()) {
        std::size_t j = i;
        while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
        std::string term = strip(body.substr(i, j - i));
        if (term.empty()) throw parse_error("empty term in '" + text + "'");
        Rat coef = sign;
        // leading rational coefficient: digits, optionally "p/q"
        std::size_t k = 0;
        while (k < term.size() &&
               (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/'))
            ++k;
        std::string mono_text = term;
        if (k > 0) {
            coef *= rat_from_string(term.substr(0, k));
            mono_text = strip(term.substr(k));
            if (!mono_text.empty() && mono_text.front() == '*')
                mono_text = strip(mono_text.substr(1));
        }
        const Monomial m = parse_monomial(p, mono_text);
        out[m] += coef;
        if (out[m] == 0) out.erase(m);
        if (j < body.size()) {
            sign = body[j] == '-' ? -1 : 1;
            ++j;
        }
        i = j;
    }
    return out;
}

inline std::string monomial_to_string(const RingPresentation& p, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += p.vars[i].name;
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string poly_to_string(const RingPresentation& p, const TermMap& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string ms = monomial_to_string(p, m);
        if (mag == 1 && ms != "1") out += ms;
        else if (ms == "1") out += to_string(mag);
        else out += to_string(mag) + "*" + ms;
    }
    return out;
}

} // namespace presdetail

/// Parses the declarative presentation format:
///   var NAME deg N | top N | rule MONO -> POLY | int MONO = RAT | # comment
inline RingPresentation parse_presentation(const std::string& text, const std::string& name = "") {
    RingPresentation p;
    p.name = name;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = presdetail::strip(line);
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string head;
        ls >> head;
        auto fail = [&](const std::string& why) {
            throw parse_error(name + ":" + std::to_string(lineno) + ": " + why);
        };
        if (head == "var") {
            std::string vname, degkw;
            int deg = 0;
            if (!(ls >> vname >> degkw >> deg) || degkw != "deg" || deg < 1)
                fail("expected 'var NAME deg N'");
            p.vars.push_back({vname, deg});
        } else if (head == "top") {
            if (!(ls >> p.top_degree) || p.top_degree < 0) fail("expected 'top N'");
        } else if (head == "rule") {
            std::string rest;
            std::getline(ls, rest);
            const auto arrow = rest.find("->");
            if (arrow == std::string::npos) fail("expected 'rule LHS -> RHS'");
            RewriteRule r;
            r.lhs = presdetail::parse_monomial(p, rest.substr(0, arrow));
            r.rhs = presdetail::parse_poly(p, rest.substr(arrow + 2));
            p.rules.push_back(std::move(r));
        } else if (head == "int") {
            std::string rest;
            std::getline(ls, rest);
            const auto eq = rest.find('=');
            if (eq == std::string::npos) fail("expected 'int MONO = RAT'");
            const Monomial m = presdetail::parse_monomial(p, rest.substr(0, eq));
            p.integrals[m] = rat_from_string(presdetail::strip(rest.substr(eq + 1)));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    validate_presentation(p);
    return p;
}

inline std::string emit_presentation(const RingPresentation& p) {
    std::string out;
    for (const auto& v : p.vars)
        out += "var " + v.name + " deg " + std::to_string(v.degree) + "\n";
    out += "top " + std::to_string(p.top_degree) + "\n";
    for (const auto& r : p.rules)
        out += "rule " + presdetail::monomial_to_string(p, r.lhs) + " -> " +
               presdetail::poly_to_string(p, r.rhs) + "\n";
    for (const auto& [m, c] : p.integrals)
        out += "int " + presdetail::monomial_to_string(p, m) + " = " + to_string(c) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Shipped presets.  The same text lives in presets/*.ring; these constants
// keep the CLI independent of the working directory.
// ---------------------------------------------------------------------------

// P^6-bundle over P^2 (degree-3 maps to the plane): eta = fiber hyperplane,
// l = base line class.
inline const char* preset_m03_p2_text() {
    return "# P^6-bundle over P^2: singular-cubic incidence model\n"
           "var eta deg 1\n"
           "var l deg 1\n"
           "top 8\n"
           "rule l^3 -> 0\n"
           "rule eta^7 -> 6*eta^6*l - 24*eta^5*l^2\n"
           "int eta^6*l^2 = 1\n";
}

// P^6-bundle over the point-plane flag threefold-pair (degree-3 maps to P^3):
// eta = fiber hyperplane, kappa/lam = plane and point hyperplane classes.
inline const char* preset_m03_p3_text() {
    return "# P^6-bundle over the point-plane flag variety\n"
           "var eta deg 1\n"
           "var kappa deg 1\n"
           "var lam deg 1\n"
           "top 11\n"
           "rule lam^4 -> 0\n"
           "rule kappa^4 -> 0\n"
           "rule kappa^3 -> kappa^2*lam - kappa*lam^2 + lam^3\n"
           "rule eta^7 -> -9*kappa*eta^6 + 6*lam*eta^6"
           " - 45*kappa^2*eta^5 + 52*kappa*lam*eta^5 - 24*lam^2*eta^5"
           " - 85*lam^3*eta^4 - 35*kappa*lam^2*eta^4 + 85*kappa^2*lam*eta^4"
           " - 40*kappa^2*lam^2*eta^3 - 240*kappa*lam^3*eta^3"
           " - 280*kappa^2*lam^3*eta^2\n"
           "int eta^6*kappa^2*lam^3 = 1\n";
}

inline const std::map<std::string, std::string>& presentation_presets() {
    static const std::map<std::string, std::string> presets = {
        {"m03-p2", preset_m03_p2_text()},
        {"m03-p3", preset_m03_p3_text()},
    };
    return presets;
}

inline RingPresentation load_preset(const std::string& name) {
    const auto& presets = presentation_presets();
    auto it = presets.find(name);
    if (it == presets.end()) throw parse_error("unknown presentation preset '" + name + "'");
    return parse_presentation(it->second, name);
}

} // namespace mstab
