#include "pfa/ninfty.hpp"

#include <algorithm>

#include "pfa/errors.hpp"

namespace pfa {

namespace {

std::vector<uint32_t> normalize(std::vector<uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (uint32_t x : v)
        if (x == 0) throw Error("FinCofSet: naturals start at 1 here");
    return v;
}

std::vector<uint32_t> set_intersect(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<uint32_t> set_union(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<uint32_t> set_diff(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const std::vector<uint32_t>& a, uint32_t x) {
    return std::binary_search(a.begin(), a.end(), x);
}

bool set_subset(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

FinCofSet FinCofSet::finite(std::vector<uint32_t> members) {
    return FinCofSet{Kind::Finite, normalize(std::move(members))};
}

FinCofSet FinCofSet::cofinite(std::vector<uint32_t> exceptions) {
    return FinCofSet{Kind::Cofinite, normalize(std::move(exceptions))};
}

bool FinCofSet::contains_nat(uint32_t n) const {
    return kind == Kind::Finite ? set_contains(support, n) : !set_contains(support, n);
}

FinCofSet FinCofSet::intersect(const FinCofSet& other) const {
    if (kind == Kind::Finite && other.kind == Kind::Finite)
        return FinCofSet{Kind::Finite, set_intersect(support, other.support)};
    if (kind == Kind::Cofinite && other.kind == Kind::Cofinite)
        return FinCofSet{Kind::Cofinite, set_union(support, other.support)};
    const FinCofSet& fin = kind == Kind::Finite ? *this : other;
    const FinCofSet& cof = kind == Kind::Finite ? other : *this;
    return FinCofSet{Kind::Finite, set_diff(fin.support, cof.support)};
}

FinCofSet FinCofSet::complement() const {
    return FinCofSet{kind == Kind::Finite ? Kind::Cofinite : Kind::Finite, support};
}

bool FinCofSet::subset_of(const FinCofSet& other) const {
    if (kind == Kind::Finite && other.kind == Kind::Finite)
        return set_subset(support, other.support);
    if (kind == Kind::Finite) // finite vs cofinite: avoid the exceptions
        return set_intersect(support, other.support).empty();
    if (other.kind == Kind::Finite) return false; // infinite set inside a finite one
    return set_subset(other.support, support);
}

std::string FinCofSet::to_string() const {
    std::string s = kind == Kind::Cofinite ? "N+inf minus {" : "{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(support[i]);
    }
    return s + "}";
}

FElement FElement::f() {
    FElement e;
    e.is_f = true;
    return e;
}

FElement FElement::id_restriction(bool p_flag, FinCofSet b) {
    FElement e;
    e.p_flag = p_flag;
    e.b = std::move(b);
    return e;
}

std::string FElement::to_string() const {
    if (is_f) return "f";
    std::string s = "id(";
    if (p_flag) s += "p,";
    return s + b.to_string() + ")";
}

FElement f_compose(const FElement& x, const FElement& y) {
    if (x.is_f && y.is_f) return FElement::zero(); // f lands on inf, f is defined only at p
    if (x.is_f) return y.b.contains_inf() ? FElement::f() : FElement::zero();
    if (y.is_f) return x.p_flag ? FElement::f() : FElement::zero();
    return FElement::id_restriction(x.p_flag && y.p_flag, x.b.intersect(y.b));
}

FElement f_meet(const FElement& x, const FElement& y) {
    if (x.is_f && y.is_f) return FElement::f();
    if (x.is_f || y.is_f) return FElement::zero(); // identity graphs never meet (p, inf)
    return FElement::id_restriction(x.p_flag && y.p_flag, x.b.intersect(y.b));
}

FElement f_antidomain(const FElement& x) {
    if (x.is_f) return FElement::id_restriction(false, FinCofSet::cofinite({}));
    return FElement::id_restriction(!x.p_flag, x.b.complement());
}

bool f_leq(const FElement& x, const FElement& y) { return f_meet(x, y) == x; }

FElement g_element(uint32_t i) {
    std::vector<uint32_t> prefix;
    for (uint32_t v = 1; v <= i; ++v) prefix.push_back(v);
    return FElement::id_restriction(false, FinCofSet::finite(std::move(prefix)));
}

FElement h_element(uint32_t i) {
    if (i == 0) throw Error("h_element: index starts at 1");
    std::vector<uint32_t> exceptions;
    for (uint32_t v = 1; v < i; ++v) exceptions.push_back(v);
    return FElement::id_restriction(false, FinCofSet::cofinite(std::move(exceptions)));
}

bool ChainReport::verified() const {
    auto all = [](const std::vector<ProofStep>& steps) {
        return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.holds; });
    };
    return all(bound_cases) && all(extremality_cases);
}

bool bounds_all_g(const FElement& candidate) {
    // g_i <= c must hold for every prefix {1..i}.
    if (candidate.is_f) return false;                           // g_1 /\ f = 0 != g_1
    if (candidate.b.kind == FinCofSet::Kind::Finite) return false; // fails at i = max+1
    return candidate.b.support.empty(); // any exception e lies in the prefix {1..e}
}

bool below_all_h(const FElement& candidate) {
    // c <= h_i must hold for every exception prefix {1..i-1}.
    if (candidate.is_f) return false;    // f /\ h_i = 0 != f
    if (candidate.p_flag) return false;  // no h_i is defined at p
    if (candidate.b.kind == FinCofSet::Kind::Cofinite) return false; // needs {1..i-1} inside the exceptions for every i
    return candidate.b.support.empty();  // a member s of b escapes h_{s+1}
}

ChainReport chain_join_g() {
    ChainReport report;
    report.value = FElement::id_restriction(false, FinCofSet::cofinite({}));

    // Bound property, universally in i: g_i /\ J = fin({1..i} \ E) with E the
    // exception set of J; that equals g_i for every i exactly when E is empty.
    report.bound_cases.push_back(
        {"prefix-meets-candidate", bounds_all_g(report.value),
         "exception set is empty, so {1..i} is untouched for every i"});

    // Extremality: every structural shape of a competing upper bound.
    const bool f_not_bound = !bounds_all_g(FElement::f());
    report.extremality_cases.push_back(
        {"candidate-f", f_not_bound, "g_1 /\\ f = 0, so f bounds no nonzero identity"});
    // finite b: fails at i = max(b)+1; checked on the shape with the largest prefix below it
    bool finite_fails = true;
    for (bool p : {false, true})
        for (const auto& b : {FinCofSet::finite({}), FinCofSet::finite({1, 2, 3})})
            finite_fails = finite_fails && !bounds_all_g(FElement::id_restriction(p, b));
    report.extremality_cases.push_back(
        {"candidate-finite-b", finite_fails, "a finite b cannot contain the prefix {1..max(b)+1}"});
    bool nonempty_exceptions_fail = true;
    for (bool p : {false, true})
        nonempty_exceptions_fail =
            nonempty_exceptions_fail &&
            !bounds_all_g(FElement::id_restriction(p, FinCofSet::cofinite({2})));
    report.extremality_cases.push_back(
        {"candidate-cofinite-with-exception", nonempty_exceptions_fail,
         "an exception e is lost from the prefix {1..e}"});
    // The surviving bounds are id(N_inf) and id({p} u N_inf); the claimed
    // value is below both.
    const FElement with_p = FElement::id_restriction(true, FinCofSet::cofinite({}));
    report.extremality_cases.push_back(
        {"candidate-with-p-is-bound-but-not-least",
         bounds_all_g(with_p) && f_leq(report.value, with_p) && !(with_p == report.value),
         "id(p, N_inf) bounds the chain but lies strictly above the claimed join"});
    report.extremality_cases.push_back(
        {"claimed-value-is-bound", bounds_all_g(report.value), "the claimed join bounds the chain"});
    return report;
}

ChainReport chain_meet_h() {
    ChainReport report;
    report.value = FElement::zero();

    report.bound_cases.push_back(
        {"zero-below-chain", below_all_h(report.value), "0 lies below every element"});

    const bool f_not_lb = !below_all_h(FElement::f());
    report.extremality_cases.push_back(
        {"candidate-f", f_not_lb, "f /\\ h_i = 0, so f is not below any h_i"});
    bool p_fails = true;
    for (const auto& b : {FinCofSet::finite({}), FinCofSet::cofinite({})})
        p_fails = p_fails && !below_all_h(FElement::id_restriction(true, b));
    report.extremality_cases.push_back(
        {"candidate-defined-at-p", p_fails, "no h_i is defined at p"});
    bool member_fails = !below_all_h(FElement::id_restriction(false, FinCofSet::finite({3})));
    report.extremality_cases.push_back(
        {"candidate-with-member", member_fails, "a member s is outside h_{s+1}"});
    bool cofinite_fails = true;
    for (const auto& b : {FinCofSet::cofinite({}), FinCofSet::cofinite({1, 2})})
        cofinite_fails = cofinite_fails && !below_all_h(FElement::id_restriction(false, b));
    report.extremality_cases.push_back(
        {"candidate-cofinite", cofinite_fails,
         "a cofinite b would need every prefix {1..i-1} among finitely many exceptions"});
    report.extremality_cases.push_back(
        {"claimed-value-is-bound", below_all_h(report.value), "0 is a lower bound"});
    return report;
}

bool Example43Report::verified() const {
    return join_g.verified() && meet_h.verified() && left_dist_join_fails &&
           left_dist_meet_fails && f_is_atom;
}

Example43Report verify_example_43() {
    Example43Report report;
    report.join_g = chain_join_g();
    report.meet_h = chain_meet_h();
    const FElement f = FElement::f();

    // f ; sup g_i = f, while every f ; g_i is 0 (no finite g_i reaches inf),
    // so the join of the composites is 0.
    report.f_compose_join_g = f_compose(f, report.join_g.value);
    bool composites_all_zero = true;
    // Symbolically: f ; id(false, finite S) is zero since inf is not in S;
    // spot-check the first few indices against the closed form as well.
    for (uint32_t i = 1; i <= 5; ++i)
        composites_all_zero = composites_all_zero && f_compose(f, g_element(i)).is_zero();
    report.join_of_composites = FElement::zero();
    report.left_dist_join_fails = composites_all_zero &&
                                  report.f_compose_join_g == f &&
                                  !(report.f_compose_join_g == report.join_of_composites);

    // f ; inf h_i = f ; 0 = 0, while every f ; h_i = f (every h_i contains
    // inf), so the meet of the composites is f.
    report.f_compose_meet_h = f_compose(f, report.meet_h.value);
    bool composites_all_f = true;
    for (uint32_t i = 1; i <= 5; ++i)
        composites_all_f = composites_all_f && f_compose(f, h_element(i)) == f;
    report.meet_of_composites = f;
    report.left_dist_meet_fails = composites_all_f &&
                                  report.f_compose_meet_h.is_zero() &&
                                  !(report.f_compose_meet_h == report.meet_of_composites);

    // f is an atom: the only elements below f are 0 and f itself, since the
    // meet of f with any identity restriction is 0.
    report.f_is_atom = f_meet(f, FElement::id_restriction(true, FinCofSet::cofinite({}))).is_zero() &&
                       f_meet(f, f) == f;
    return report;
}

PartialFunction Truncation::to_concrete(const FElement& x) const {
    const Base& base = algebra.base;
    if (x.is_f)
        return PartialFunction::from_pairs(base, {{"p", "inf"}});
    std::vector<int32_t> im(static_cast<size_t>(base.size()), PartialFunction::kUndefined);
    if (x.p_flag) im[0] = 0;
    for (uint32_t v = 1; v <= static_cast<uint32_t>(n); ++v)
        if (x.b.contains_nat(v)) im[v] = static_cast<int32_t>(v);
    if (x.b.contains_inf()) im[static_cast<size_t>(n) + 1] = n + 1;
    return PartialFunction(base, std::move(im));
}

Truncation truncate(int n) {
    if (n < 1) throw Error("truncate: n must be at least 1");
    if (n > 16) throw Error("truncate: desk-scale bound is 16");
    Truncation tr;
    tr.n = n;

    std::vector<std::string> points;
    points.push_back("p");
    for (int v = 1; v <= n; ++v) points.push_back(std::to_string(v));
    points.push_back("inf");
    tr.algebra.base = Base(std::move(points));
    tr.algebra.signature = Signature::cma();

    auto add = [&](const FElement& e) {
        tr.elements.push_back(e);
        tr.algebra.names.push_back(e.to_string());
        tr.algebra.functions.push_back(tr.to_concrete(e));
    };
    for (auto kind : {FinCofSet::Kind::Finite, FinCofSet::Kind::Cofinite})
        for (bool p : {false, true})
            for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<uint32_t> support;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) support.push_back(static_cast<uint32_t>(v + 1));
                FinCofSet b = kind == FinCofSet::Kind::Finite ? FinCofSet::finite(support)
                                                              : FinCofSet::cofinite(support);
                add(FElement::id_restriction(p, std::move(b)));
            }
    add(FElement::f());
    return tr;
}

bool truncation_agreement(int n) {
    const Truncation tr = truncate(n);
    const size_t count = tr.elements.size();
    for (size_t i = 0; i < count; ++i) {
        const FElement& x = tr.elements[i];
        const PartialFunction& cx = tr.algebra.functions[i];
        if (tr.to_concrete(f_antidomain(x)) != antidomain(cx)) return false;
        for (size_t j = 0; j < count; ++j) {
            const FElement& y = tr.elements[j];
            const PartialFunction& cy = tr.algebra.functions[j];
            if (tr.to_concrete(f_compose(x, y)) != compose(cx, cy)) return false;
            if (tr.to_concrete(f_meet(x, y)) != intersect(cx, cy)) return false;
        }
    }
    return true;
}

} // namespace pfa
