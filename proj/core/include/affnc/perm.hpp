#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace affnc {

using Int = std::int64_t;

// floor division and the representative of x mod n in {1..n}
Int floor_div(Int a, Int b);
Int residue(Int x, Int n);

// A bijection of Z commuting with i -> i + n, stored by its window p(1..n).
class PeriodicPermutation {
public:
    PeriodicPermutation() = default;
    PeriodicPermutation(Int n, std::vector<Int> window);

    static PeriodicPermutation identity(Int n);

    Int n() const { return n_; }
    const std::vector<Int>& window() const { return window_; }

    Int operator()(Int i) const;

    // (sum of window - n(n+1)/2) / n
    Int shift() const;
    bool is_affine() const { return shift() == 0; }
    bool is_identity() const;

    PeriodicPermutation inverse() const;

    // largest |p(i)| and |i| over the window, used for default enumeration bounds
    Int max_abs_lift() const;

    friend bool operator==(const PeriodicPermutation&, const PeriodicPermutation&) = default;
    friend auto operator<=>(const PeriodicPermutation& a, const PeriodicPermutation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.window_ <=> b.window_;
    }

private:
    Int n_ = 0;
    std::vector<Int> window_;
};

// (a * b)(i) = a(b(i))
PeriodicPermutation compose(const PeriodicPermutation& a, const PeriodicPermutation& b);
inline PeriodicPermutation operator*(const PeriodicPermutation& a, const PeriodicPermutation& b) {
    return compose(a, b);
}

struct PermHash {
    std::size_t operator()(const PeriodicPermutation& p) const;
};

struct InfiniteCycle {
    std::vector<Int> entries;  // a_1 .. a_k, a_1 in {1..n}
    Int drift = 0;             // next entry after a_k is a_1 + drift * n
    friend bool operator==(const InfiniteCycle&, const InfiniteCycle&) = default;
};

struct CycleDecomposition {
    Int n = 0;
    // one representative per mod-n class, smallest residue first and lying in {1..n};
    // fixed points appear as singleton classes
    std::vector<std::vector<Int>> finite_classes;
    std::vector<InfiniteCycle> infinite_cycles;
};

CycleDecomposition decompose(const PeriodicPermutation& p);
PeriodicPermutation recompose(const CycleDecomposition& d);

int finite_class_count(const PeriodicPermutation& p);
bool is_annular(const CycleDecomposition& d);
bool is_annular(const PeriodicPermutation& p);
// n - finite_class_count; throws std::invalid_argument for non-annular input
int annular_length(const PeriodicPermutation& p);

// maximum over finite classes of floor((max - min) / n)
Int winding(const PeriodicPermutation& p);

struct Generator {
    enum class Kind { Reflection, Loop };
    Kind kind = Kind::Reflection;
    Int n = 0;
    Int i = 0;     // reflection: first endpoint in {1..n}; loop: base point in {1..n}
    Int j = 0;     // reflection: second endpoint, j > i, j != i mod n
    int sign = 1;  // loop direction

    static Generator reflection(Int n, Int a, Int b);  // canonicalizes
    static Generator loop(Int n, Int i, int sign = 1);

    bool is_reflection() const { return kind == Kind::Reflection; }
    bool is_loop() const { return kind == Kind::Loop; }
    PeriodicPermutation to_permutation() const;
    Generator inverse() const;
    std::string to_string() const;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator& a, const Generator& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.sign <=> b.sign;
    }
};

// recognizes a rank-one element (a reflection or a loop); nullopt otherwise
std::optional<Generator> as_generator(const PeriodicPermutation& p);

struct GeneratorAction {
    PeriodicPermutation result;
    int finite_class_delta = 0;
};

GeneratorAction apply_generator(const Generator& g, const PeriodicPermutation& p);

// every reflection (a b)_n with canonical |b| <= bound, plus all loops and inverse loops
std::vector<Generator> all_generators(Int n, Int bound, bool with_loops = true);

// generators tau with fcc(tau p) = fcc(p) + 1, read off from the cycle structure of p;
// reflections across different infinite cycles are limited to canonical |b| <= bound
std::vector<Generator> ascent_generators(const PeriodicPermutation& p, Int bound);
std::vector<Generator> ascent_generators(const PeriodicPermutation& p);
Int default_bound(const PeriodicPermutation& p);

}  // namespace affnc
