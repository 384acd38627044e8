#pragma once

#include "hypcr/m0n.hpp"

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Twisted sectors of the stack of hyperelliptic curves of genus g >= 2.
//
// A genus-g hyperelliptic curve y^2 = f(x), deg f = 2g+2, is a double cover
// of P^1 branched at the 2g+2 roots of f. Its reduced automorphisms (mod the
// hyperelliptic involution tau: y |-> -y) act on P^1 permuting the branch
// points, so a curve with a reduced automorphism of order N >= 2 comes from
// a branch configuration invariant under an order-N rotation: the 2g+2
// points split as n = kN + a with k free orbits and a in {0, 1, 2} of the
// two rotation fixed points branched. Sectors are therefore indexed, up to
// the ambiguity below, by a decomposition (k, a) together with a character
// distinguishing the lifts of the rotation to the curve.
//
// Normal forms for the lifts (sigma: x |-> zeta_N x on the base):
//   a = 0   y^2 = prod_m (x^N - alpha_m),        lifts y |-> +/- y;
//   a = 1   y^2 = x * prod_m (x^N - alpha_m),    lifts y |-> +/- zeta_{2N}^i y;
//   a = 2   y^2 = x * prod_m (x^N - alpha_m) with both fixed points branched
//           realized with odd k*N, same lift shape as a = 1.
// Conjugating sigma by x |-> cx, y |-> c'y sweeps the unit characters, and
// the residual moves are (i) inverting the rotation while exchanging its
// two fixed points and (ii) exchanging the fixed points by x |-> 1/x alone.
// That yields the label sets per decomposition of n = 2g+2 (N > 2):
//   a = 0, k even  inverse-identified classes mod N, each appearing twice,
//                  split by the sign lambda = +/-1 of the y-lift;
//   a = 0, k odd   full characters mod N (N even here, the two lifts are
//                  conjugate);
//   a = 1          full characters mod N and mod 2N (N odd: the lift has
//                  order N or 2N according to the parity of the character);
//   a = 2, k even  inverse-identified classes mod 2N, plus, for N odd,
//                  inverse-identified classes mod N;
//   a = 2, k odd   twist-identified classes mod 2N (N even is forced:
//                  2g = kN with k odd).
// For N = 2 the rotation is an involution and the identifications collapse:
//   g even  one sector with (k, a) = (g+1, 0) and one with (g, 2), both
//           labeled by the unit character mod 2, coarse symmetry TwoFixed
//           (the fixed-point exchange is absorbed into the cover);
//   g odd   (g+1, 0) splits by lambda into two sectors mod 2, and (g, 2)
//           carries the two twist-identified classes mod 4; all TwoSwapped.
// The untwisted sector and the tau sector (reduced order 1) complete the
// list. Coarse spaces of twisted sectors have dimension k - 1; the two
// N = 1 sectors sit over the full (2g-1)-dimensional moduli.

namespace hypcr {

enum class HypSectorKind { Untwisted, Tau, Twisted };

// The action of a distinguished monomial lift on (x, y). The y-multiplier
// is either a sign or an odd power of zeta_{2N}; fullOrder is the order of
// the whole monomial transformation, always N or 2N (2 for tau, 1 for the
// untwisted sector).
struct LiftAction {
    enum class YClass { PlusMinusOne, PlusMinusZeta };

    long long x_exp;
    YClass y_class;
    long long full_order;

    bool operator==(const LiftAction&) const = default;
};

// Order of (x, y) |-> (zeta_N^xexp x, zeta_{2N}^yexp y). The x-exponent is
// a unit, so the x-part alone has order N.
inline long long lift_order(long long N, long long y_exp) {
    long long twoN = 2 * N;
    long long e = ((y_exp % twoN) + twoN) % twoN;
    long long y_order = e == 0 ? 1 : twoN / std::gcd(e, twoN);
    return std::lcm(N, y_order);
}

struct HypSector {
    long long g;
    HypSectorKind kind;
    long long N;  // reduced order; 1 for Untwisted and Tau
    long long k;  // meaningful iff Twisted
    long long a;  // meaningful iff Twisted
    std::optional<CharacterClass> label;
    std::optional<int> lambda;         // sign of the y-lift where it separates sectors
    std::optional<CoarseSpace> coarse; // nullopt: the full coarse moduli
    LiftAction lift;

    long long coarse_dimension() const { return coarse ? coarse->dimension() : 2 * g - 1; }
    QPolynomial coarse_poincare() const {
        return coarse ? coarse->poincare() : QPolynomial::one();
    }
    long long codimension() const { return (2 * g - 1) - coarse_dimension(); }

    std::string id() const {
        if (kind == HypSectorKind::Untwisted) return "untwisted";
        if (kind == HypSectorKind::Tau) return "tau";
        std::string s = "N" + std::to_string(N) + ".k" + std::to_string(k) + ".a" +
                        std::to_string(a) + ".chi" + std::to_string(label->rep()) + "m" +
                        std::to_string(label->modulus);
        if (lambda) s += *lambda > 0 ? ".L+" : ".L-";
        return s;
    }
};

namespace detail {

inline HypSector make_twisted(long long g, long long N, long long k, long long a,
                              CharacterClass label, std::optional<int> lambda,
                              CoarseSymmetry sym, long long x_exp,
                              LiftAction::YClass y_class, long long y_exp) {
    long long order = lift_order(N, y_exp);
    if (order != N && order != 2 * N)
        throw std::logic_error("hyperelliptic: lift order outside {N, 2N}");
    if (label.modulus == 2 * N && order != 2 * N)
        throw std::logic_error("hyperelliptic: mod-2N label with order-N lift");
    return HypSector{g,
                     HypSectorKind::Twisted,
                     N,
                     k,
                     a,
                     std::move(label),
                     lambda,
                     CoarseSpace{k, sym},
                     LiftAction{x_exp, y_class, order}};
}

// For labels carried mod N (N odd), the distinguished lift is the one of
// order N: the even square root of zeta_N^rep in mu_{2N}.
inline long long even_root_exp(long long rep, long long N) {
    return rep % 2 == 0 ? rep : rep + N;
}

}  // namespace detail

inline std::vector<HypSector> sectors_hyp(long long g) {
    if (g < 2) throw std::invalid_argument("sectors_hyp: genus must be at least 2");
    const long long n = 2 * g + 2;
    using YC = LiftAction::YClass;

    std::vector<HypSector> out;
    out.push_back(HypSector{g, HypSectorKind::Untwisted, 1, 0, 0, std::nullopt, std::nullopt,
                            std::nullopt, LiftAction{0, YC::PlusMinusOne, 1}});
    out.push_back(HypSector{g, HypSectorKind::Tau, 1, 0, 0, std::nullopt, std::nullopt,
                            std::nullopt, LiftAction{0, YC::PlusMinusOne, 2}});

    for (long long N = 2; N <= n; ++N) {
        for (auto [k, a] : decompositions(n, N)) {
            if (N == 2) {
                CharacterClass one{2, {1}, IdentKind::Full};
                if (g % 2 == 0) {
                    // Branch data n = 2k or 2k+2 with an odd orbit count on
                    // one side: the fixed-point exchange lifts into the
                    // cover and the two y-signs are conjugate.
                    long long y = a == 0 ? 0 : 1;
                    out.push_back(detail::make_twisted(
                        g, N, k, a, one, std::nullopt, CoarseSymmetry::TwoFixed, 1,
                        a == 0 ? YC::PlusMinusOne : YC::PlusMinusZeta, y));
                } else if (a == 0) {
                    for (int lam : {+1, -1})
                        out.push_back(detail::make_twisted(
                            g, N, k, a, CharacterClass{2, {1}, IdentKind::Inv}, lam,
                            CoarseSymmetry::TwoSwapped, 1, YC::PlusMinusOne,
                            lam > 0 ? 0 : N));
                } else {
                    for (const CharacterClass& cls : unit_classes(4, IdentKind::Twist))
                        out.push_back(detail::make_twisted(
                            g, N, k, a, cls, std::nullopt, CoarseSymmetry::TwoSwapped, 1,
                            YC::PlusMinusZeta, cls.rep()));
                }
                continue;
            }
            if (a == 0 && k % 2 == 0) {
                for (const CharacterClass& cls : unit_classes(N, IdentKind::Inv))
                    for (int lam : {+1, -1})
                        out.push_back(detail::make_twisted(
                            g, N, k, a, cls, lam, CoarseSymmetry::TwoSwapped, cls.rep(),
                            YC::PlusMinusOne, lam > 0 ? 0 : N));
            } else if (a == 0) {
                for (long long u : units(N))
                    out.push_back(detail::make_twisted(
                        g, N, k, a, CharacterClass{N, {u}, IdentKind::Full}, std::nullopt,
                        CoarseSymmetry::TwoSwapped, u, YC::PlusMinusOne, 0));
            } else if (a == 1) {
                for (long long u : units(N))
                    out.push_back(detail::make_twisted(
                        g, N, k, a, CharacterClass{N, {u}, IdentKind::Full}, std::nullopt,
                        CoarseSymmetry::TwoFixed, u, YC::PlusMinusZeta,
                        detail::even_root_exp(u, N)));
                for (long long u : units(2 * N))
                    out.push_back(detail::make_twisted(
                        g, N, k, a, CharacterClass{2 * N, {u}, IdentKind::Full},
                        std::nullopt, CoarseSymmetry::TwoFixed, u % N, YC::PlusMinusZeta,
                        u));
            } else if (k % 2 == 0) {
                if (N % 2 == 1)
                    for (const CharacterClass& cls : unit_classes(N, IdentKind::Inv))
                        out.push_back(detail::make_twisted(
                            g, N, k, a, cls, std::nullopt, CoarseSymmetry::TwoSwapped,
                            cls.rep(), YC::PlusMinusZeta,
                            detail::even_root_exp(cls.rep(), N)));
                for (const CharacterClass& cls : unit_classes(2 * N, IdentKind::Inv))
                    out.push_back(detail::make_twisted(
                        g, N, k, a, cls, std::nullopt, CoarseSymmetry::TwoSwapped,
                        cls.rep() % N, YC::PlusMinusZeta, cls.rep()));
            } else {
                if (N % 2 != 0)
                    throw std::logic_error("sectors_hyp: odd k*N = 2g in a = 2 case");
                for (const CharacterClass& cls : unit_classes(2 * N, IdentKind::Twist))
                    out.push_back(detail::make_twisted(
                        g, N, k, a, cls, std::nullopt, CoarseSymmetry::TwoSwapped,
                        cls.rep() % N, YC::PlusMinusZeta, cls.rep()));
            }
        }
    }
    return out;
}

// Inversion involution on sectors: the label is negated within its own
// identification kind, everything else (including lambda) is preserved.
// Untwisted and tau are fixed points.
inline std::size_t iota_index(std::size_t idx, const std::vector<HypSector>& all) {
    const HypSector& s = all[idx];
    if (s.kind != HypSectorKind::Twisted) return idx;
    long long m = s.label->modulus;
    long long target = inverse_image(s.label->rep(), m);
    for (std::size_t j = 0; j < all.size(); ++j) {
        const HypSector& t = all[j];
        if (t.kind != HypSectorKind::Twisted) continue;
        if (t.N != s.N || t.k != s.k || t.a != s.a) continue;
        if (t.lambda != s.lambda) continue;
        if (t.label->modulus != m || t.label->kind != s.label->kind) continue;
        if (t.label->contains(target)) return j;
    }
    throw std::logic_error("iota: no inverse partner for sector " + s.id());
}

inline const HypSector& iota(const HypSector& s, const std::vector<HypSector>& all) {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].id() == s.id()) return all[iota_index(i, all)];
    throw std::invalid_argument("iota: sector not in list: " + s.id());
}

}  // namespace hypcr
