#pragma once

#include "affnc/coxeter.hpp"
#include "affnc/perm.hpp"

#include <cstddef>
#include <vector>

namespace affnc {

// [1,c] in the order generated by reflections and loops; restricted = the interval [1,c]_T
// (members without a dangling annular block)
bool is_member(const PeriodicPermutation& p, const CoxeterElement& c, bool restricted = false);

// order through containment of curve sets of the decoded diagrams
bool leq(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c);
// u^{-1} w annular and n - fcc lengths add
bool leq_by_length(const PeriodicPermutation& u, const PeriodicPermutation& w);

int rank(const PeriodicPermutation& p, const CoxeterElement& c);

PeriodicPermutation kreweras(const PeriodicPermutation& p, const CoxeterElement& c);
PeriodicPermutation kreweras_inv(const PeriodicPermutation& p, const CoxeterElement& c);

// lower covers tau w for the ascent generators tau of w (cross-cycle reflections within bound)
std::vector<PeriodicPermutation> covers_down(const PeriodicPermutation& w, const CoxeterElement& c, Int bound);
// upper covers, obtained from the lower covers of the Kreweras complement
std::vector<PeriodicPermutation> covers_up(const PeriodicPermutation& u, const CoxeterElement& c, Int bound);

PeriodicPermutation meet(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c);
PeriodicPermutation join(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c);

struct UniverseOptions {
    Int winding_bound = 2;
    Int generator_bound = 0;  // 0 means (winding_bound + 2) * n
    bool restricted = false;
    std::size_t step_budget = 5'000'000;
};

// members of winding at most the bound, found by breadth-first search upward from the identity;
// throws std::runtime_error when the step budget runs out
std::vector<PeriodicPermutation> enumerate_universe(const CoxeterElement& c, const UniverseOptions& opt);
// members reachable from c by a chain of covers staying within the winding bound; a subset of
// enumerate_universe (winding is not monotone along chains, so a few members can be missed)
std::vector<PeriodicPermutation> enumerate_universe_down(const CoxeterElement& c, const UniverseOptions& opt);

std::vector<PeriodicPermutation> minimal_upper_bounds_restricted(const PeriodicPermutation& u,
                                                                 const PeriodicPermutation& w,
                                                                 const CoxeterElement& c, Int winding_bound);

// maximal elements of the bounded universe lying below both u and w
std::vector<PeriodicPermutation> maximal_common_lower_bounds(const std::vector<PeriodicPermutation>& universe,
                                                             const PeriodicPermutation& u,
                                                             const PeriodicPermutation& w,
                                                             const CoxeterElement& c);

}  // namespace affnc
