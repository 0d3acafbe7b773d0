#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mstab/errors.hpp"
#include "mstab/rational.hpp"

namespace mstab {

// Exponent vector over the presentation's variables.
using Monomial = std::vector<int>;

// Pure lex with variable 0 highest: the orientation order for every rule.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

using TermMap = std::map<Monomial, Rat, LexGreater>;

struct RingVariable {
    std::string name;
    int degree = 1;
};

struct RewriteRule {
    Monomial lhs;
    TermMap rhs;
};

/// Graded commutative ring given by variables, oriented rewrite rules, a top
/// degree, and an integration table on normal-form top monomials.
struct RingPresentation {
    std::string name;
    std::vector<RingVariable> vars;
    std::vector<RewriteRule> rules;
    int top_degree = 0;
    TermMap integrals;

    int var_index(const std::string& v) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == v) return static_cast<int>(i);
        throw parse_error("unknown variable '" + v + "'");
    }

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * vars[i].degree;
        return d;
    }
};

namespace ringdetail {

inline bool divides(const Monomial& lhs, const Monomial& m) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (m[i] < lhs[i]) return false;
    return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Monomial quotient(const Monomial& m, const Monomial& lhs) {
    Monomial out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] - lhs[i];
    return out;
}

} // namespace ringdetail

// The invariant the shipped presentations satisfy: no rule's leading monomial
// divides a monomial of any right-hand side, and every rule is homogeneous.
inline void validate_presentation(const RingPresentation& p) {
    for (const auto& rule : p.rules) {
        const int ldeg = p.degree_of(rule.lhs);
        for (const auto& [m, c] : rule.rhs) {
            if (p.degree_of(m) != ldeg)
                throw parse_error("inhomogeneous rule in presentation " + p.name);
            for (const auto& other : p.rules)
                if (ringdetail::divides(other.lhs, m))
                    throw parse_error("rules are not inter-reduced in presentation " + p.name);
        }
    }
    for (const auto& [m, c] : p.integrals)
        if (p.degree_of(m) != p.top_degree)
            throw parse_error("integration table entry of wrong degree in " + p.name);
}

enum class ReduceOrder { high_first, low_last };

/// Sparse exact-rational ring element, stored in normal form.
class RingElement {
  public:
    RingElement() = default;
    explicit RingElement(const RingPresentation* pres) : pres_(pres) {}

    static RingElement constant(const RingPresentation& pres, const Rat& c) {
        RingElement e(&pres);
        if (c != 0) e.terms_[Monomial(pres.vars.size(), 0)] = c;
        return e;
    }

    static RingElement variable(const RingPresentation& pres, const std::string& name) {
        RingElement e(&pres);
        Monomial m(pres.vars.size(), 0);
        m[pres.var_index(name)] = 1;
        e.terms_[m] = 1;
        return e.normalized();
    }

    static RingElement from_terms(const RingPresentation& pres, TermMap terms) {
        RingElement e(&pres);
        e.terms_ = std::move(terms);
        return e.normalized();
    }

    const RingPresentation& presentation() const { return *pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator-(RingElement a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend RingElement operator*(const Rat& s, RingElement a) {
        if (s == 0) return RingElement(a.pres_);
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        RingElement out(a.pres_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ringdetail::mul(ma, mb), ca * cb);
        return out.normalized();
    }

    RingElement pow(int n) const {
        RingElement acc = constant(*pres_, 1);
        for (int i = 0; i < n; ++i) acc = acc * (*this);
        return acc;
    }

    // Degree of a homogeneous element; nullopt when mixed. Zero reports 0.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            const int d = pres_->degree_of(m);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg ? deg : std::optional<int>(0);
    }

    RingElement component(int degree) const {
        RingElement out(pres_);
        for (const auto& [m, c] : terms_)
            if (pres_->degree_of(m) == degree) out.terms_[m] = c;
        return out;
    }

    RingElement truncated(int max_degree) const {
        RingElement out(pres_);
        for (const auto& [m, c] : terms_)
            if (pres_->degree_of(m) <= max_degree) out.terms_[m] = c;
        return out;
    }

    RingElement normalized(ReduceOrder order = ReduceOrder::high_first,
                           long long budget = 1 << 20) const {
        RingElement out(pres_);
        out.terms_ = normal_form_terms(*pres_, terms_, order, budget);
        return out;
    }

  private:
    const RingPresentation* pres_ = nullptr;
    TermMap terms_;

    void add_term(const Monomial& m, const Rat& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static TermMap normal_form_terms(const RingPresentation& pres, TermMap terms,
                                     ReduceOrder order, long long budget) {
        auto reducible_by = [&](const Monomial& m) -> const RewriteRule* {
            if (order == ReduceOrder::high_first) {
                for (const auto& r : pres.rules)
                    if (ringdetail::divides(r.lhs, m)) return &r;
            } else {
                const RewriteRule* hit = nullptr;
                for (const auto& r : pres.rules)
                    if (ringdetail::divides(r.lhs, m)) hit = &r;
                if (hit) return hit;
            }
            return nullptr;
        };
        while (true) {
            if (--budget < 0) throw non_terminating("rewrite step budget exhausted");
            const Monomial* pick = nullptr;
            const RewriteRule* rule = nullptr;
            bool kill = false;
            auto consider = [&](const TermMap::value_type& kv) -> bool {
                if (pres.degree_of(kv.first) > pres.top_degree) {
                    pick = &kv.first;
                    kill = true;
                    return true;
                }
                if (const RewriteRule* r = reducible_by(kv.first)) {
                    pick = &kv.first;
                    rule = r;
                    return true;
                }
                return false;
            };
            if (order == ReduceOrder::high_first) {
                for (const auto& kv : terms)
                    if (consider(kv)) break;
            } else {
                for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                    if (consider(*it)) break;
            }
            if (!pick) return terms;
            const Monomial m = *pick;
            const Rat c = terms.at(m);
            terms.erase(m);
            if (kill) continue;
            const Monomial rest = ringdetail::quotient(m, rule->lhs);
            for (const auto& [mr, cr] : rule->rhs) {
                const Monomial mm = ringdetail::mul(rest, mr);
                auto it = terms.find(mm);
                if (it == terms.end()) {
                    Rat val = c * cr;
                    if (val != 0) terms[mm] = std::move(val);
                } else {
                    it->second += c * cr;
                    if (it->second == 0) terms.erase(it);
                }
            }
        }
    }
};

inline RingElement normal_form(const RingElement& e,
                               ReduceOrder order = ReduceOrder::high_first) {
    return e.normalized(order);
}

/// Integral of a top-degree element against the presentation's table.
/// Elements of lower degree are rejected rather than silently zeroed.
inline Rat integrate(const RingElement& e) {
    const auto& pres = e.presentation();
    if (e.is_zero()) return 0;
    Rat acc = 0;
    for (const auto& [m, c] : e.terms()) {
        if (pres.degree_of(m) != pres.top_degree)
            throw wrong_degree("integrand is not homogeneous of top degree");
        auto it = pres.integrals.find(m);
        if (it != pres.integrals.end()) acc += c * it->second;
        // normal-form top monomials missing from the table integrate to zero
    }
    return acc;
}

/// Total Chern class truncated at the base dimension.  Components above
/// min(rank, base dimension) are dropped, and the degree-0 part must be 1.
struct ChernClass {
    int rank = 0;
    int trunc = 0; // truncation degree (base dimension)
    RingElement total;

    ChernClass(int r, int truncation, RingElement t)
        : rank(r), trunc(truncation), total(t.truncated(std::min(r, truncation))) {
        const auto c0 = total.component(0);
        if (!(c0 == RingElement::constant(total.presentation(), 1)))
            throw non_unit_leading_term("total Chern class must start with 1");
    }

    RingElement part(int i) const { return total.component(i); }
};

/// c(E) = c(F) c(Q) along an exact sequence: quotient as truncated series.
inline ChernClass whitney_quotient(const ChernClass& c_total, const ChernClass& c_sub) {
    const auto& pres = c_total.total.presentation();
    if (c_total.rank < c_sub.rank)
        throw bad_parameters("quotient of Chern classes needs rank(total) >= rank(sub)");
    const auto sub0 = c_sub.total.component(0);
    if (!(sub0 == RingElement::constant(pres, 1)))
        throw non_unit_leading_term("series inverse needs degree-0 term 1");
    const int trunc = c_total.trunc;
    // series inverse of c_sub, degree by degree
    std::vector<RingElement> inv(trunc + 1, RingElement(&pres));
    inv[0] = RingElement::constant(pres, 1);
    for (int k = 1; k <= trunc; ++k) {
        RingElement acc(&pres);
        for (int j = 1; j <= k; ++j) acc += (c_sub.total.component(j) * inv[k - j]).component(k);
        inv[k] = -acc;
    }
    RingElement inv_total(&pres);
    for (int k = 0; k <= trunc; ++k) inv_total += inv[k];
    return ChernClass(c_total.rank - c_sub.rank, trunc,
                      (c_total.total * inv_total).truncated(trunc));
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

/// c_k(E (x) L) = sum_i binom(rank-i, k-i) c_i(E) c_1(L)^{k-i}.
inline ChernClass tensor_line(const ChernClass& c_e, const RingElement& c1_line) {
    const auto& pres = c_e.total.presentation();
    const auto deg = c1_line.homogeneous_degree();
    if (!c1_line.is_zero() && (!deg || *deg != 1))
        throw bad_parameters("line-bundle twist needs a degree-1 class");
    RingElement out = RingElement::constant(pres, 1);
    for (int k = 1; k <= c_e.trunc; ++k) {
        RingElement ck(&pres);
        for (int i = 0; i <= k; ++i) {
            const Int b = binomial(c_e.rank - i, k - i);
            if (b == 0) continue;
            ck += Rat(b) * (c_e.part(i) * c1_line.pow(k - i));
        }
        out += ck.component(k);
    }
    return ChernClass(c_e.rank, c_e.trunc, out);
}

/// Vanishing of the top Chern class of the universal quotient bundle:
/// fiber^rank -> -(c_1 fiber^{rank-1} + c_2 fiber^{rank-2} + ...).
inline RewriteRule projective_bundle_relation(const ChernClass& c_e,
                                              const std::string& fiber_var) {
    const auto& pres = c_e.total.presentation();
    const int vi = pres.var_index(fiber_var);
    if (pres.vars[vi].degree != 1)
        throw bad_parameters("fiber variable must have degree 1");
    const int n = c_e.rank;
    RewriteRule rule;
    rule.lhs = Monomial(pres.vars.size(), 0);
    rule.lhs[vi] = n;
    for (int i = 1; i <= std::min(n, c_e.trunc); ++i) {
        const RingElement part = c_e.part(i);
        for (const auto& [m, c] : part.terms()) {
            Monomial mm = m;
            mm[vi] += n - i;
            rule.rhs[mm] -= c;
            if (rule.rhs[mm] == 0) rule.rhs.erase(mm);
        }
    }
    return rule;
}

} // namespace mstab
