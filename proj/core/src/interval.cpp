#include "affnc/interval.hpp"

#include "affnc/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace affnc {

namespace {

void check_period(const PeriodicPermutation& p, const CoxeterElement& c) {
    if (p.n() != c.n()) throw std::invalid_argument("period does not match the Coxeter element");
}

void require_member(const PeriodicPermutation& p, const CoxeterElement& c) {
    if (!is_member(p, c)) throw std::invalid_argument("not a member of [1,c]");
}

std::vector<PeriodicPermutation> sorted_unique(std::vector<PeriodicPermutation> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool is_member(const PeriodicPermutation& p, const CoxeterElement& c, bool restricted) {
    check_period(p, c);
    auto d = decompose(p);
    if (!is_annular(d)) return false;
    auto k = p.inverse() * to_permutation(c);
    auto dk = decompose(k);
    if (!is_annular(dk)) return false;
    const Int n = c.n();
    Int len = (n - static_cast<Int>(d.finite_classes.size())) + (n - static_cast<Int>(dk.finite_classes.size()));
    if (len != n) return false;
    if (restricted && d.infinite_cycles.size() == 1) return false;
    return true;
}

bool leq(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c) {
    return curve_subset(decode(u, c), decode(w, c), c);
}

bool leq_by_length(const PeriodicPermutation& u, const PeriodicPermutation& w) {
    auto x = u.inverse() * w;
    if (!is_annular(u) || !is_annular(w) || !is_annular(x)) return false;
    return annular_length(u) + annular_length(x) == annular_length(w);
}

int rank(const PeriodicPermutation& p, const CoxeterElement& c) {
    require_member(p, c);
    return annular_length(p);
}

PeriodicPermutation kreweras(const PeriodicPermutation& p, const CoxeterElement& c) {
    require_member(p, c);
    return p.inverse() * to_permutation(c);
}

PeriodicPermutation kreweras_inv(const PeriodicPermutation& p, const CoxeterElement& c) {
    require_member(p, c);
    return to_permutation(c) * p.inverse();
}

std::vector<PeriodicPermutation> covers_down(const PeriodicPermutation& w, const CoxeterElement& c, Int bound) {
    require_member(w, c);
    std::vector<PeriodicPermutation> out;
    for (const auto& g : ascent_generators(w, bound)) out.push_back(g.to_permutation() * w);
    return sorted_unique(std::move(out));
}

std::vector<PeriodicPermutation> covers_up(const PeriodicPermutation& u, const CoxeterElement& c, Int bound) {
    auto cp = to_permutation(c);
    std::vector<PeriodicPermutation> out;
    for (const auto& y : covers_down(kreweras(u, c), c, bound)) out.push_back(cp * y.inverse());
    return sorted_unique(std::move(out));
}

PeriodicPermutation meet(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c) {
    return encode(meet_reconstruct(decode(u, c), decode(w, c), c));
}

PeriodicPermutation join(const PeriodicPermutation& u, const PeriodicPermutation& w, const CoxeterElement& c) {
    return kreweras_inv(meet(kreweras(u, c), kreweras(w, c), c), c);
}

static std::vector<PeriodicPermutation> bfs_universe(const CoxeterElement& c, const UniverseOptions& opt, bool up) {
    const Int n = c.n();
    const Int bound = opt.generator_bound > 0 ? opt.generator_bound : (opt.winding_bound + 2) * n;
    auto start = up ? PeriodicPermutation::identity(n) : to_permutation(c);
    std::unordered_set<PeriodicPermutation, PermHash> seen{start};
    std::vector<PeriodicPermutation> frontier{start};
    std::size_t steps = 0;
    while (!frontier.empty()) {
        std::vector<PeriodicPermutation> next;
        for (const auto& x : frontier) {
            auto nbrs = up ? covers_up(x, c, bound) : covers_down(x, c, bound);
            for (auto& y : nbrs) {
                if (++steps > opt.step_budget) throw std::runtime_error("universe enumeration exceeded its step budget");
                if (winding(y) > opt.winding_bound) continue;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    std::vector<PeriodicPermutation> out;
    for (const auto& x : seen)
        if (!opt.restricted || is_member(x, c, true)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PeriodicPermutation> enumerate_universe(const CoxeterElement& c, const UniverseOptions& opt) {
    return bfs_universe(c, opt, true);
}

std::vector<PeriodicPermutation> enumerate_universe_down(const CoxeterElement& c, const UniverseOptions& opt) {
    return bfs_universe(c, opt, false);
}

static std::vector<PeriodicPermutation> extremal(std::vector<PeriodicPermutation> v, const CoxeterElement& c,
                                                 bool minimal) {
    std::vector<int> ranks;
    for (const auto& x : v) ranks.push_back(annular_length(x));
    std::vector<PeriodicPermutation> out;
    for (std::size_t a = 0; a < v.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < v.size() && !dominated; ++b) {
            if (a == b) continue;
            if (minimal && ranks[b] < ranks[a] && leq(v[b], v[a], c)) dominated = true;
            if (!minimal && ranks[b] > ranks[a] && leq(v[a], v[b], c)) dominated = true;
        }
        if (!dominated) out.push_back(v[a]);
    }
    return out;
}

std::vector<PeriodicPermutation> minimal_upper_bounds_restricted(const PeriodicPermutation& u,
                                                                 const PeriodicPermutation& w,
                                                                 const CoxeterElement& c, Int winding_bound) {
    if (!is_member(u, c, true) || !is_member(w, c, true))
        throw std::invalid_argument("minimal_upper_bounds_restricted needs members of [1,c]_T");
    UniverseOptions opt;
    opt.winding_bound = winding_bound;
    opt.restricted = true;
    std::vector<PeriodicPermutation> ub;
    for (const auto& m : enumerate_universe(c, opt))
        if (leq(u, m, c) && leq(w, m, c)) ub.push_back(m);
    return extremal(std::move(ub), c, true);
}

std::vector<PeriodicPermutation> maximal_common_lower_bounds(const std::vector<PeriodicPermutation>& universe,
                                                             const PeriodicPermutation& u,
                                                             const PeriodicPermutation& w,
                                                             const CoxeterElement& c) {
    auto du = decode(u, c), dw = decode(w, c);
    std::vector<PeriodicPermutation> lb;
    for (const auto& x : universe) {
        auto dx = decode(x, c);
        if (curve_subset(dx, du, c) && curve_subset(dx, dw, c)) lb.push_back(x);
    }
    return extremal(std::move(lb), c, false);
}

}  // namespace affnc
