#pragma once

#include "hypcr/assemble.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace hypcr {

// Age computation used by the checks, injectable so a test harness can
// prove that a tampered value is caught and attributed.
using AgeProvider = std::function<Rational(const HypSector&)>;

inline Rational oracle_age(const HypSector& s) { return age_oracle(weight_vector(s)); }

// Every cross-check for one genus; returns the first violation, or nullopt.
// The checks are ordered so a failure is reported against the most local
// law it breaks.
inline std::optional<std::string> verify_genus(long long g,
                                               const AgeProvider& age_of = oracle_age) {
    auto fail = [g](const std::string& what) {
        return std::optional<std::string>("g=" + std::to_string(g) + ": " + what);
    };
    std::vector<HypSector> all = sectors_hyp(g);

    if (all.size() < 2 || all[0].kind != HypSectorKind::Untwisted ||
        all[1].kind != HypSectorKind::Tau)
        return fail("sector list must start with the two order-1 sectors");

    // Counting law per decomposition: phi(N) sectors for a in {0,2},
    // 2*phi(N) for a = 1; the N = 2 families contribute 1 each for g even
    // and 2 each for g odd.
    std::map<std::pair<long long, long long>, long long> counts;
    for (const HypSector& s : all)
        if (s.kind == HypSectorKind::Twisted) ++counts[{s.N, s.a}];
    for (long long N = 2; N <= 2 * g + 2; ++N) {
        for (auto [k, a] : decompositions(2 * g + 2, N)) {
            long long expected;
            if (N == 2)
                expected = g % 2 == 0 ? 1 : 2;
            else
                expected = a == 1 ? 2 * phi(N) : phi(N);
            if (counts[{N, a}] != expected)
                return fail("sector count for N=" + std::to_string(N) + " a=" +
                            std::to_string(a) + " is " + std::to_string(counts[{N, a}]) +
                            ", expected " + std::to_string(expected));
        }
    }

    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const HypSector& s = all[idx];
        Rational age = age_of(s);
        std::string id = s.id();

        if (s.kind != HypSectorKind::Twisted) {
            if (age != Rational(0)) return fail("sector " + id + ": order-1 age must be 0");
            if (s.kind == HypSectorKind::Tau && exponent_paper(s) != Rational(0))
                return fail("sector tau: printed exponent must be 0");
            continue;
        }

        WeightVector w = weight_vector(s);
        if (w.zero_count() != s.k - 1)
            return fail("sector " + id + ": " + std::to_string(w.zero_count()) +
                        " zero weights, expected k-1 = " + std::to_string(s.k - 1));

        Rational codim(s.codimension());
        if (age < Rational(0) || age > codim)
            return fail("sector " + id + ": age " + age.str() + " outside [0, " +
                        codim.str() + "]");
        if (!(age * Rational(s.N)).is_integer())
            return fail("sector " + id + ": N*age is not an integer");

        // Age must not depend on which class member is taken as the
        // representative.
        for (long long member : s.label->members) {
            HypSector alt = s;
            alt.label = CharacterClass{s.label->modulus, {member}, IdentKind::Full};
            if (age_oracle(weight_vector(alt)) != age_oracle(weight_vector(s)))
                return fail("sector " + id + ": age depends on class member " +
                            std::to_string(member));
        }

        std::size_t jdx = iota_index(idx, all);
        const HypSector& t = all[jdx];
        if (iota_index(jdx, all) != idx)
            return fail("sector " + id + ": inversion is not an involution");
        if (t.N != s.N || t.k != s.k || t.a != s.a || t.lambda != s.lambda ||
            t.coarse != s.coarse)
            return fail("sector " + id + ": inversion changed invariants");
        if (age + age_of(t) != codim)
            return fail("sector " + id + ": age " + age.str() + " + partner age " +
                        age_of(t).str() + " != codimension " + codim.str());

        // The printed exponent against the cotangent age.
        Rational expo = exponent_paper(s);
        Rational predicted =
            s.N > 2 ? age * Rational(2) + Rational(2 * (s.k - 1)) : age;
        if (expo != predicted)
            return fail("sector " + id + ": printed exponent " + expo.str() +
                        " != " + predicted.str() + " from the age");

        // Sectors differing only in lambda must agree in age.
        if (s.lambda && *s.lambda > 0) {
            for (const HypSector& u : all)
                if (u.kind == HypSectorKind::Twisted && u.N == s.N && u.k == s.k &&
                    u.a == s.a && u.label == s.label && u.lambda &&
                    *u.lambda < 0 && age_of(u) != age)
                    return fail("sector " + id + ": age depends on lambda");
        }
    }

    QPolynomial paper = pcr_paper(g);
    QPolynomial fp_real = pcr_first_principles(g, Grading::Real);
    QPolynomial fp_cplx = pcr_first_principles(g, Grading::Complex);
    if (paper.total() != fp_real.total() || paper.total() != fp_cplx.total())
        return fail("totals disagree: paper " + std::to_string(paper.total()) +
                    ", real " + std::to_string(fp_real.total()) + ", complex " +
                    std::to_string(fp_cplx.total()));
    for (const QPolynomial* p : {&paper, &fp_real, &fp_cplx})
        if (p->constant_term() != 2)
            return fail("constant term is " + std::to_string(p->constant_term()) +
                        ", expected 2");

    long long n_sectors = static_cast<long long>(all.size());
    for (Mode m : {Mode::Paper, Mode::FirstPrinciples}) {
        long long st = stringy_chow(g, m, Grading::Real).total();
        if (st != n_sectors)
            return fail("stringy total " + std::to_string(st) + " != sector count " +
                        std::to_string(n_sectors));
    }

    // Exponents of the real-graded sum stay within the coarse dimension
    // plus twice the largest codimension.
    Rational bound(3 * (2 * g - 1));
    if (fp_real.terms().rbegin()->first > bound)
        return fail("real-graded support exceeds " + bound.str());

    return std::nullopt;
}

// Sweep a genus range; with jobs > 1 the genera are checked concurrently
// and the report is still the lowest-genus violation.
inline std::optional<std::string> verify_range(long long g_min, long long g_max,
                                               int jobs = 1) {
    if (g_min < 2 || g_max < g_min)
        throw std::invalid_argument("verify_range: need 2 <= g_min <= g_max");
    std::vector<std::optional<std::string>> results(g_max - g_min + 1);
    auto check_one = [&](long long g) {
        try {
            results[g - g_min] = verify_genus(g);
        } catch (const std::exception& e) {
            results[g - g_min] = "g=" + std::to_string(g) + ": " + e.what();
        }
    };
    if (jobs <= 1) {
        for (long long g = g_min; g <= g_max; ++g) {
            check_one(g);
            if (results[g - g_min]) return results[g - g_min];
        }
        return std::nullopt;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (long long g = g_min + t; g <= g_max; g += jobs) check_one(g);
        });
    for (std::thread& th : pool) th.join();
    for (const auto& r : results)
        if (r) return r;
    return std::nullopt;
}

}  // namespace hypcr
