#pragma once

#include "hypcr/hyperelliptic.hpp"

#include <stdexcept>
#include <vector>

// Ages of hyperelliptic sectors, computed two independent ways.
//
// The oracle route diagonalizes the action on the cotangent space of the
// moduli at a fixed curve. A basis is given by the quadratic differentials
// X^j (dX/Y)^2, j = 0..2g-2. For the lift of x |-> zeta_N^i x acting on
//   a = 0:  y^2 = prod (x^N - alpha_m)         eigenvalue zeta_N^{i(j+2)}
//   a != 0: y^2 = x * prod (x^N - alpha_m)     eigenvalue zeta_N^{i(j+1)}
// (the y-sign cancels in (dX/Y)^2, so only the residue class of the
// x-exponent enters). The age is sum over nonzero weights of (1 - w/N).
//
// The closed-form route evaluates the printed degree shifts
//   exponent_a(g,i,N) = 2(2g-1 - sum_{j=1}^{2g-1} {i(j+1)/N})
//   exponent_b(g,i,N) = 2(2g-1 - sum_{j=1}^{2g-1} {ij/N})
// which equal 2*age + 2(k-1) on their sectors; the N = 2 families are
// printed with the bare age. reconcile() holds the two routes against
// each other for every sector.

namespace hypcr {

// Cotangent weights mod the reduced order N; 2g-1 residues.
struct WeightVector {
    long long modulus;
    std::vector<long long> residues;

    long long zero_count() const {
        long long z = 0;
        for (long long r : residues)
            if (r == 0) ++z;
        return z;
    }
};

inline WeightVector weight_vector(const HypSector& s) {
    long long dim = 2 * s.g - 1;
    if (s.kind != HypSectorKind::Twisted)
        return WeightVector{1, std::vector<long long>(dim, 0)};
    long long N = s.N;
    long long i = s.label->rep() % N;
    long long c = s.a == 0 ? 2 : 1;
    WeightVector w{N, {}};
    w.residues.reserve(dim);
    for (long long j = 0; j <= 2 * s.g - 2; ++j) w.residues.push_back((i * (j + c)) % N);
    return w;
}

inline Rational age_oracle(const WeightVector& w) {
    long long nonzero = 0, sum = 0;
    for (long long r : w.residues) {
        if (r == 0) continue;
        ++nonzero;
        sum += r;
    }
    return Rational(nonzero * w.modulus - sum, w.modulus);
}

namespace detail {

inline Rational frac_sum(long long g, long long i, long long N, long long m_lo) {
    Rational s(0);
    for (long long m = m_lo; m < m_lo + 2 * g - 1; ++m) s += frac(Rational(i * m, N));
    return s;
}

}  // namespace detail

// Degree shift printed for the sectors with no branched fixed point (a = 0).
inline Rational exponent_a(long long g, long long i, long long N) {
    return (Rational(2 * g - 1) - detail::frac_sum(g, i, N, 2)) * Rational(2);
}

// Degree shift printed for the sectors with one or two branched fixed
// points (a = 1, 2).
inline Rational exponent_b(long long g, long long i, long long N) {
    return (Rational(2 * g - 1) - detail::frac_sum(g, i, N, 1)) * Rational(2);
}

// The exponent the closed formula attaches to a sector. Pre: not untwisted.
inline Rational exponent_paper(const HypSector& s) {
    if (s.kind == HypSectorKind::Untwisted)
        throw std::invalid_argument("exponent_paper: untwisted sector carries no shift");
    if (s.kind == HypSectorKind::Tau) return Rational(0);
    if (s.N == 2) return s.a == 0 ? Rational(s.g - 1, 2) : Rational(s.g, 2);
    long long i = s.label->rep() % s.N;
    return s.a == 0 ? exponent_a(s.g, i, s.N) : exponent_b(s.g, i, s.N);
}

}  // namespace hypcr
