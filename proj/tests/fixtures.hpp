#pragma once

#include "affnc/coxeter.hpp"
#include "affnc/cycles_io.hpp"
#include "affnc/interval.hpp"
#include "affnc/perm.hpp"
#include "affnc/typec.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fx {

using namespace affnc;

inline CoxeterElement c7() { return CoxeterElement::from_word({6, 5, 2, 1, 3, 4, 7}); }
inline PeriodicPermutation P1() { return parse_cycles("(1 -7 -4)_7 (2 -3)_7 (5)_7 (6)_7", 7); }
inline PeriodicPermutation P2() { return parse_cycles("(... 1 -5 -6 ...)(... 3 4 7 10 ...)(5 6)_7", 7); }
inline PeriodicPermutation P3() { return parse_cycles("(1 -1 -2)_7 (2)_7 (3)_7 (... 4 7 11 ...)", 7); }

inline CoxeterElement c4() { return CoxeterElement::from_word({4, 3, 1, 2}); }

inline Signing sC() { return Signing::from_word(7, {6, 4, 3, 0, 1, 2, 5}); }
inline PeriodicPermutation C1() { return parse_cycles("((... 1 5 11 15 ...)) ((2))_14 ((4 6))_14", 14); }
inline PeriodicPermutation C2() { return parse_cycles("(1 -1)_14 (2 8 12 6)_14 ((3 4))_14 ((5))_14", 14); }
inline PeriodicPermutation C3() { return parse_cycles("((1 -2))_14 ((5 8 4 3))_14", 14); }
inline PeriodicPermutation C4() { return parse_cycles("((1 2))_14 ((3))_14 ((4 33))_14 ((6 36))_14", 14); }

// all Coxeter elements (inner/outer choices) for a given n
inline std::vector<CoxeterElement> all_coxeter(Int n) {
    std::vector<CoxeterElement> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<Int> outer;
        for (Int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) outer.push_back(i);
        out.emplace_back(n, outer);
    }
    return out;
}

// seeded random member of [1,c]_{T u L}: walk down from c along random covers
inline PeriodicPermutation random_member(const CoxeterElement& c, std::mt19937_64& rng, Int bound, bool restricted = false) {
    auto w = to_permutation(c);
    std::uniform_int_distribution<int> steps(0, static_cast<int>(c.n()));
    int k = steps(rng);
    for (int s = 0; s < k; ++s) {
        auto cov = covers_down(w, c, bound);
        if (cov.empty()) break;
        w = cov[std::uniform_int_distribution<std::size_t>(0, cov.size() - 1)(rng)];
    }
    if (restricted) {
        while (!is_member(w, c, true)) {
            auto cov = covers_down(w, c, bound);
            w = cov[std::uniform_int_distribution<std::size_t>(0, cov.size() - 1)(rng)];
        }
    }
    return w;
}

}  // namespace fx
