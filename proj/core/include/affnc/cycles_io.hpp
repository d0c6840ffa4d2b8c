#pragma once

#include "affnc/perm.hpp"

#include <string>
#include <vector>

namespace affnc {

// Cycle notation:
//   (a1 ... ak)_n        a class of finite cycles (suffix optional, also _{n})
//   (... a1 ... ak ...)  an infinite cycle; a trailing entry congruent to a1 fixes the drift,
//                        otherwise the listed entries must be strictly monotone
//   ((...))              the cycle together with its negation (period 2n, type C)
// Unicode minus, "…" and "⋯" are accepted.
PeriodicPermutation parse_cycles(const std::string& text, Int n);
std::string print_cycles(const PeriodicPermutation& p);
// pairs {C, -C} printed once with double parentheses; falls back to print_cycles when p is not symmetric
std::string print_cycles_signed(const PeriodicPermutation& p);

// rotate so the entry with smallest residue is first, then translate it into {1..n}
std::vector<Int> canonical_class(std::vector<Int> cycle, Int n);

std::string perm_to_json(const PeriodicPermutation& p);
PeriodicPermutation perm_from_json(const std::string& text);

}  // namespace affnc
