#pragma once

#include "hypcr/characters.hpp"
#include "hypcr/qpoly.hpp"

#include <stdexcept>
#include <vector>

namespace hypcr {

// A twisted-sector coarse space is a configuration space of k unordered
// points on P^1 relative to two distinguished points (the fixed points of
// the rotation), divided by S_k when the two are held pointwise (TwoFixed)
// or by S_k x S_2 when they may be exchanged (TwoSwapped).
enum class CoarseSymmetry { TwoFixed, TwoSwapped };

struct CoarseSpace {
    long long k;
    CoarseSymmetry symmetry;

    long long dimension() const { return k - 1; }
    QPolynomial poincare() const {
        return symmetry == CoarseSymmetry::TwoFixed ? p0_two_fixed(k) : p0_swap(k);
    }
    bool operator==(const CoarseSpace&) const = default;
};

// One twisted sector of the inertia of [M_{0,n}/S_n]: an order-N rotation
// class of P^1 whose point configuration splits as n = kN + a, with k free
// orbits and a in {0, 1, 2} marked fixed points, together with a character
// label distinguishing conjugate rotations.
struct M0nSector {
    long long n;
    long long N;
    long long k;
    long long a;
    CharacterClass label;
    CoarseSpace coarse;
};

// All twisted sectors for n >= 3 marked points, ordered by (N, a, canonical
// label representative). For each order N and each decomposition:
//   a = 1        one sector per unit character (both fixed points marked
//                individually), coarse symmetry TwoFixed;
//   a in {0, 2}  one sector per inverse-identified class (an automorphism
//                of the configuration swaps the fixed points and inverts
//                the rotation), coarse symmetry TwoSwapped.
// For N = 2 inversion is trivial: n odd gives the single a = 1 sector, and
// n even gives the a = 0 and a = 2 sectors, each labeled by the one unit
// character mod 2.
inline std::vector<M0nSector> sectors_m0n(long long n) {
    if (n < 3) throw std::invalid_argument("sectors_m0n: need n >= 3");
    std::vector<M0nSector> out;
    for (long long N = 2; N <= n; ++N) {
        for (auto [k, a] : decompositions(n, N)) {
            if (N == 2) {
                CharacterClass one{2, {1}, IdentKind::Full};
                CoarseSymmetry sym =
                    a == 1 ? CoarseSymmetry::TwoFixed : CoarseSymmetry::TwoSwapped;
                out.push_back(M0nSector{n, N, k, a, one, CoarseSpace{k, sym}});
                continue;
            }
            if (a == 1) {
                for (long long u : units(N))
                    out.push_back(M0nSector{n, N, k, a,
                                            CharacterClass{N, {u}, IdentKind::Full},
                                            CoarseSpace{k, CoarseSymmetry::TwoFixed}});
            } else {
                for (const CharacterClass& cls : unit_classes(N, IdentKind::Inv))
                    out.push_back(
                        M0nSector{n, N, k, a, cls, CoarseSpace{k, CoarseSymmetry::TwoSwapped}});
            }
        }
    }
    return out;
}

// Poincare polynomial of the full inertia: 1 for the untwisted sector plus
// the coarse-space polynomial of every twisted sector.
inline QPolynomial inertia_poincare_m0n(long long n) {
    QPolynomial p = QPolynomial::one();
    for (const M0nSector& s : sectors_m0n(n)) p += s.coarse.poincare();
    return p;
}

}  // namespace hypcr
