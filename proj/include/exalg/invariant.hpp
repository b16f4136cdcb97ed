#pragma once

// Grade-set subalgebra specifications, sample-based invariance testing,
// and the brute-force sweep that checks every closed grade set against
// the classification forms
//   (a)  k (+) A_{j+2k}                for even j > 0
//   (b)  (+)_{k in S} A_k (+) A_{i+2k} for odd j, S in P_j, even i <= j+1
// plus B_i = A_0 (+) A_i (+) ... (+) A_n and the trivial sets.
//
// A "pass" verdict is evidence over the sampled automorphisms, never a
// proof; a "refuted" verdict carries a replayable witness.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morphism.hpp"
#include "random.hpp"

namespace exalg {

struct GradeSetSpec {
    AlgebraSignature signature;
    std::set<int> grades;
    std::string provenance;

    GradeSetSpec(AlgebraSignature sig, std::set<int> g, std::string prov)
        : signature(sig), grades(std::move(g)), provenance(std::move(prov)) {
        for (int k : grades)
            if (k < 0 || k > sig.n) throw std::out_of_range("grade outside {0..n}");
    }
};

inline std::string gradeset_str(const std::set<int>& grades) {
    std::string s = "{";
    for (int g : grades) s += (s.size() > 1 ? "," : "") + std::to_string(g);
    return s + "}";
}

// form (a): k (+) A_j (+) A_{j+2} (+) ...
inline GradeSetSpec gradeset_form_a(const AlgebraSignature& sig, int j) {
    if (j <= 0 || j % 2 != 0) throw std::invalid_argument("form (a) requires even j > 0");
    std::set<int> g{0};
    for (int k = j; k <= sig.n; k += 2) g.insert(k);
    return {sig, std::move(g), "form_a(j=" + std::to_string(j) + ")"};
}

// form (b): (+)_{k in S} A_k (+) A_i (+) A_{i+2} (+) ...  as printed,
// without a unit summand; pass include_unit to adjoin grade 0.
inline GradeSetSpec gradeset_form_b(const AlgebraSignature& sig, int j, const std::set<int>& s, int i,
                                    bool include_unit = false) {
    if (j < 1 || j > sig.n || j % 2 != 1) throw std::invalid_argument("form (b) requires odd j in [1, n]");
    if (!s.count(j)) throw std::invalid_argument("form (b) requires j in S");
    for (int k : s)
        if (k < j || k > sig.n) throw std::invalid_argument("form (b) requires S subset of {j..n}");
    if (i <= 0 || i > j + 1 || i % 2 != 0) throw std::invalid_argument("form (b) requires even i with 0 < i <= j+1");
    for (int k : s)
        if (k + i <= sig.n && !s.count(k + i)) throw std::invalid_argument("form (b) shift condition fails at s = " + std::to_string(k));
    std::set<int> g = s;
    for (int k = i; k <= sig.n; k += 2) g.insert(k);
    std::string prov = "form_b(j=" + std::to_string(j) + ",S=" + gradeset_str(s) + ",i=" + std::to_string(i) + ")";
    if (include_unit) {
        g.insert(0);
        prov += "+unit";
    }
    return {sig, std::move(g), prov};
}

inline GradeSetSpec gradeset_b_i(const AlgebraSignature& sig, int i) {
    if (i < 1 || i > sig.n) throw std::invalid_argument("B_i requires 1 <= i <= n");
    std::set<int> g{0};
    for (int k = i; k <= sig.n; ++k) g.insert(k);
    return {sig, std::move(g), "B_" + std::to_string(i)};
}

inline GradeSetSpec gradeset_even(const AlgebraSignature& sig) {
    std::set<int> g;
    for (int k = 0; k <= sig.n; k += 2) g.insert(k);
    return {sig, std::move(g), "A_even"};
}

inline GradeSetSpec gradeset_center(const AlgebraSignature& sig) {
    std::set<int> g;
    for (int k = 0; k <= sig.n; k += 2) g.insert(k);
    g.insert(sig.n);
    return {sig, std::move(g), "center"};
}

inline GradeSetSpec gradeset_custom(const AlgebraSignature& sig, std::set<int> grades) {
    auto prov = "custom" + gradeset_str(grades);
    return {sig, std::move(grades), prov};
}

// Closure under the product grading A_g A_h <= A_{g+h}; grades past n
// vanish on their own.
inline bool is_subalgebra(const GradeSetSpec& spec) {
    spec.signature.require_enumerable();
    for (int g : spec.grades)
        for (int h : spec.grades)
            if (g + h <= spec.signature.n && !spec.grades.count(g + h)) return false;
    return true;
}

struct InvarianceWitness {
    Morphism automorphism;
    Blade blade;
    int escaping_grade;
};

enum class Verdict { invariant_on_sample, refuted };

struct InvarianceReport {
    GradeSetSpec spec;
    int samples_tested;
    Verdict verdict;
    std::optional<InvarianceWitness> witness;
};

// Replay a witness independently of any grade-set bookkeeping: apply the
// morphism to the blade and report the grades in the image's support.
inline std::set<int> witness_image_grades(const InvarianceWitness& w) {
    const AlgebraSignature& sig = w.automorphism.signature();
    Multivector img = w.automorphism.apply(Multivector::term(sig, w.blade, Scalar::one(sig.field)));
    std::set<int> grades;
    for (const auto& [b, c] : img.terms()) grades.insert(b.grade());
    return grades;
}

inline InvarianceReport invariance_check(const GradeSetSpec& spec, int samples, std::uint64_t seed) {
    const AlgebraSignature& sig = spec.signature;
    require_odd_characteristic(sig.field);
    if (sig.n > 8) throw std::invalid_argument("invariance_check limited to n <= 8");

    constexpr AutProfile kProfiles[] = {AutProfile::linear, AutProfile::inner, AutProfile::unipotent,
                                        AutProfile::composite};
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        Morphism f = detail::sample_automorphism(rng, sig, kProfiles[s % 4]);
        for (int g : spec.grades)
            for (Blade b : basis_enumerate(sig, g)) {
                Multivector img = f.apply(Multivector::term(sig, b, Scalar::one(sig.field)));
                for (const auto& [tb, tc] : img.terms())
                    if (!spec.grades.count(tb.grade()))
                        return {spec, s + 1, Verdict::refuted, InvarianceWitness{f, b, tb.grade()}};
            }
    }
    return {spec, samples, Verdict::invariant_on_sample, std::nullopt};
}

// --- brute-force classification sweep ------------------------------------

struct ClassifiedSet {
    std::set<int> grades;
    std::string matched_form;  // empty for anomalies
};

struct RefutedSet {
    std::set<int> grades;
    InvarianceWitness witness;
};

struct Classification {
    std::vector<ClassifiedSet> matched;    // survivors matching a form
    std::vector<ClassifiedSet> anomalies;  // survivors matching nothing
    std::vector<RefutedSet> refuted;       // closed sets with a witness
};

// Catalog of every form instance at this signature, keyed by grade set.
// The theorem leaves the unit grade ambiguous (form (a) carries a k
// summand, form (b) as printed does not), so each form is entered in both
// unit variants, labeled.
inline std::map<std::set<int>, std::string> classification_catalog(const AlgebraSignature& sig) {
    std::map<std::set<int>, std::string> catalog;
    auto enter = [&](const std::set<int>& grades, const std::string& label) {
        catalog.emplace(grades, label);  // first label wins
    };
    auto enter_both = [&](const GradeSetSpec& spec) {
        enter(spec.grades, spec.provenance);
        std::set<int> flipped = spec.grades;
        if (flipped.count(0)) {
            flipped.erase(0);
            enter(flipped, spec.provenance + " minus unit");
        } else {
            flipped.insert(0);
            enter(flipped, spec.provenance + " plus unit");
        }
    };

    std::set<int> full;
    for (int k = 0; k <= sig.n; ++k) full.insert(k);
    enter({}, "trivial 0");
    enter({0}, "trivial k");
    enter(full, "trivial A");
    full.erase(0);
    enter(full, "trivial A minus unit");

    for (int i = 1; i <= sig.n; ++i) enter_both(gradeset_b_i(sig, i));
    for (int j = 2; j <= sig.n; j += 2) enter_both(gradeset_form_a(sig, j));
    for (int j = 1; j <= sig.n; j += 2) {
        // all S subset of {j..n} containing j
        std::vector<int> rest;
        for (int k = j + 1; k <= sig.n; ++k) rest.push_back(k);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest.size()); ++bits) {
            std::set<int> s{j};
            for (std::size_t t = 0; t < rest.size(); ++t)
                if ((bits >> t) & 1) s.insert(rest[t]);
            for (int i = 2; i <= j + 1; i += 2) {
                bool shift_ok = true;
                for (int k : s)
                    if (k + i <= sig.n && !s.count(k + i)) { shift_ok = false; break; }
                if (!shift_ok) continue;
                enter_both(gradeset_form_b(sig, j, s, i));
            }
        }
    }
    return catalog;
}

inline Classification classify_bruteforce(const AlgebraSignature& sig, int samples, std::uint64_t seed) {
    require_odd_characteristic(sig.field);
    if (sig.n > 5) throw std::invalid_argument("classify_bruteforce limited to n <= 5");

    std::map<std::set<int>, std::string> catalog = classification_catalog(sig);
    Classification result;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (sig.n + 1)); ++bits) {
        std::set<int> grades;
        for (int k = 0; k <= sig.n; ++k)
            if ((bits >> k) & 1) grades.insert(k);
        GradeSetSpec spec = gradeset_custom(sig, grades);
        if (!is_subalgebra(spec)) continue;
        InvarianceReport report = invariance_check(spec, samples, seed ^ bits);
        if (report.verdict == Verdict::refuted) {
            result.refuted.push_back({grades, *report.witness});
        } else if (auto it = catalog.find(grades); it != catalog.end()) {
            result.matched.push_back({grades, it->second});
        } else {
            result.anomalies.push_back({grades, ""});
        }
    }
    return result;
}

}  // namespace exalg
