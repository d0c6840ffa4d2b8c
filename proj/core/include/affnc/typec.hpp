#pragma once

#include "affnc/coxeter.hpp"
#include "affnc/perm.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace affnc {

// Type C~_{n-1} inside the periodic permutations of period 2n fixing all multiples of n.
class Signing {
public:
    Signing() = default;
    // signs[i-1] is the sign of i, for i = 1..n-1
    Signing(Int n, std::vector<int> signs);
    // sign + on i iff s_{i-1} precedes s_i (word over 0..n-1)
    static Signing from_word(Int n, const std::vector<Int>& word);

    Int n() const { return n_; }
    int sign(Int i) const { return signs_.at(i - 1); }
    // i for sign +, -i for sign -, sorted increasing
    std::vector<Int> elements() const;
    // x (not a multiple of n) is outer iff x mod 2n is the residue of a signing element
    bool is_outer(Int x) const;

    friend bool operator==(const Signing&, const Signing&) = default;

private:
    Int n_ = 0;
    std::vector<int> signs_;
};

std::string signing_to_json(const Signing& s);
Signing signing_from_json(const std::string& text);

bool fixes_multiples_of_n(const PeriodicPermutation& p, Int n);
// phi(p)(i) = -p(-i)
PeriodicPermutation phi(const PeriodicPermutation& p);
bool is_phi_fixed(const PeriodicPermutation& p);

PeriodicPermutation coxeter_from_signing(const Signing& s);
// s_0 = (-1 1)_{2n}, s_i = ((i i+1))_{2n}, s_{n-1} = (n-1 n+1)_{2n}
PeriodicPermutation simple_reflection_C(Int n, Int i);
PeriodicPermutation word_product_C(Int n, const std::vector<Int>& word);
// s'_0 = (-1 1), s'_i = (i i+1) for 1 <= i <= n-2, s'_{n-1} = (n-1 n+1), s'_i = (i+1 i+2) for n <= i <= 2n-3
PeriodicPermutation simple_reflection_W(Int n, Int i);

// order-preserving relabelling of the non-multiples of n onto Z
Int fold_value(Int x, Int n);
Int unfold_value(Int y, Int n);
PeriodicPermutation fold_index(const PeriodicPermutation& w, Int n);
PeriodicPermutation unfold_index(const PeriodicPermutation& v, Int n);
CoxeterElement folded_coxeter(const Signing& s);

bool is_member_C(const PeriodicPermutation& w, const Signing& s);

struct ReflectionC {
    PeriodicPermutation element;
    std::vector<Generator> orbit;  // the phi-orbit in T' (period 2n generators)
    int multiplicity() const { return static_cast<int>(orbit.size()); }
};
// the phi-orbit product of a T' reflection
ReflectionC reflection_C(Int n, Int a, Int b);
// every reflection whose T' factors have representatives with endpoints in [-bound, bound]
std::vector<ReflectionC> reflections_C(Int n, Int bound);
// recognizes a C~ reflection; nullopt otherwise
std::optional<ReflectionC> as_reflection_C(const PeriodicPermutation& w, Int n);

// ---- the two-orbifold disk ----

struct OrbifoldBlock {
    int orbifold_count = 0;                  // 0, 1 or 2 enclosed orbifold points
    std::vector<Int> points;                 // residues folded to 1..n-1
    std::vector<std::vector<Int>> cycles;    // upstairs finite cycles (one or two)
    std::vector<InfiniteCycle> infinite;     // upstairs infinite cycles (two, for the annular block)
};

struct OrbifoldDiagram {
    Int n = 0;
    std::vector<OrbifoldBlock> blocks;
    int enclosed_orbifold_points() const;
};

OrbifoldDiagram decode_orbifold(const PeriodicPermutation& w, const Signing& s);
PeriodicPermutation perm_C(const OrbifoldDiagram& d);

int rank_C(const PeriodicPermutation& w, const Signing& s);
// (n-1) - #symmetric pairs of distinct disk blocks + #annular blocks, read from the folded annulus
int rank_C_symmetric(const PeriodicPermutation& w, const Signing& s);

std::vector<PeriodicPermutation> translations_C(const Signing& s);
PeriodicPermutation translation_nu(Int n, Int i);

std::vector<Generator> fold_lift_word(const std::vector<PeriodicPermutation>& word, const Signing& s);

std::vector<PeriodicPermutation> covers_down_C(const PeriodicPermutation& w, const Signing& s, Int bound);
PeriodicPermutation kreweras_C(const PeriodicPermutation& w, const Signing& s);

// ---- direct reflection length over C~ reflections ----

struct LengthSearch {
    Int reflection_bound = 0;        // 0 means max(3n, max |lift| of the element + 2n)
    std::size_t node_budget = 2'000'000;
};

// admissible lower bound used to prune: max(ceil(L'/2), codimension of the fixed space of the linear part)
int length_lower_bound_C(const PeriodicPermutation& w, Int n);
// is there a word of at most k bounded reflections? nullopt when the budget ran out
std::optional<bool> length_at_most_C(const PeriodicPermutation& w, Int n, int k, const LengthSearch& opt);
std::optional<int> reflection_length_C(const PeriodicPermutation& w, Int n, int max_length, const LengthSearch& opt);
// length additivity l(w) + l(w^{-1} c) = n; nullopt when undecided within the budget
std::optional<bool> direct_member_C(const PeriodicPermutation& w, const Signing& s, const LengthSearch& opt);

}  // namespace affnc
