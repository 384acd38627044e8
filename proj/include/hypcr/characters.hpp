#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypcr {

// Euler totient, by trial-division factorization.
inline long long phi(long long m) {
    if (m < 1) throw std::invalid_argument("phi: modulus must be positive");
    long long result = m, n = m;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Units of Z/m in ascending order. The trivial group m = 1 is {0}.
inline std::vector<long long> units(long long m) {
    if (m < 1) throw std::invalid_argument("units: modulus must be positive");
    if (m == 1) return {0};
    std::vector<long long> out;
    for (long long u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) out.push_back(u);
    return out;
}

// How unit characters of Z/m are identified into one sector label:
//   Full   every character is its own label;
//   Inv    u is identified with its inverse image m - u;
//   Twist  u is identified with u * (m/2 - 1) mod m.
// The Twist map squares to multiplication by (m/2 - 1)^2 = m^2/4 - m + 1,
// which is 1 mod m exactly when 4 | m, so Twist is rejected otherwise.
enum class IdentKind { Full, Inv, Twist };

inline long long inverse_image(long long u, long long m) {
    return m == 1 ? 0 : (m - u % m) % m;
}

inline long long twist_image(long long u, long long m) {
    if (m % 4 != 0)
        throw std::invalid_argument("twisted identification not involutive for this modulus");
    return (u * (m / 2 - 1)) % m;
}

// One identification orbit. Members are sorted ascending; the canonical
// representative is the smallest member.
struct CharacterClass {
    long long modulus;
    std::vector<long long> members;
    IdentKind kind;

    long long rep() const { return members.front(); }
    bool contains(long long u) const {
        for (long long v : members)
            if (v == u) return true;
        return false;
    }
    bool operator==(const CharacterClass&) const = default;
};

// All identification orbits on the units of Z/m, ordered by canonical
// representative. Orbits have size 1 or 2 and partition the units.
inline std::vector<CharacterClass> unit_classes(long long m, IdentKind kind) {
    if (kind == IdentKind::Twist && m % 4 != 0)
        throw std::invalid_argument("twisted identification not involutive for this modulus");
    std::vector<CharacterClass> out;
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (long long u : units(m)) {
        if (seen[u]) continue;
        long long v = u;
        switch (kind) {
            case IdentKind::Full:  v = u; break;
            case IdentKind::Inv:   v = inverse_image(u, m); break;
            case IdentKind::Twist: v = twist_image(u, m); break;
        }
        std::vector<long long> orbit{u};
        if (v != u) orbit.push_back(v);
        for (long long w : orbit) seen[w] = 1;
        out.push_back(CharacterClass{m, std::move(orbit), kind});
    }
    return out;
}

// All ways to write n = k*N + a with k >= 1 and a in {0, 1, 2}, ascending
// in a. For N > 2 at most one decomposition exists.
inline std::vector<std::pair<long long, long long>> decompositions(long long n, long long N) {
    std::vector<std::pair<long long, long long>> out;
    for (long long a = 0; a <= 2; ++a) {
        if ((n - a) % N != 0) continue;
        long long k = (n - a) / N;
        if (k >= 1) out.emplace_back(k, a);
    }
    return out;
}

}  // namespace hypcr
