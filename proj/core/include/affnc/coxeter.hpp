#pragma once

#include "affnc/perm.hpp"
#include "affnc/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affnc {

// A Coxeter element of the affine symmetric group, recorded by which of 1..n are outer points.
class CoxeterElement {
public:
    CoxeterElement() = default;
    CoxeterElement(Int n, const std::vector<Int>& outer_points);

    // i is outer iff s_{i-1} precedes s_i in the word (s_0 = s_n)
    static CoxeterElement from_word(const std::vector<Int>& word);

    Int n() const { return n_; }
    bool is_outer(Int i) const { return outer_[residue(i, n_)]; }
    bool is_inner(Int i) const { return !is_outer(i); }
    std::vector<Int> outer_points() const;
    std::vector<Int> inner_points() const;
    Int num_outer() const;
    Int num_inner() const { return n_ - num_outer(); }

    // some word for c, obtained as a linear extension of the orientation
    std::vector<Int> word() const;
    // true iff s_i occurs before s_j in every word for c (i, j adjacent mod n)
    bool precedes(Int i, Int j) const;

    friend bool operator==(const CoxeterElement&, const CoxeterElement&) = default;

private:
    Int n_ = 0;
    std::vector<char> outer_;  // indexed 1..n
};

PeriodicPermutation to_permutation(const CoxeterElement& c);
// s_i = (i i+1)_n for 1 <= i <= n
PeriodicPermutation simple_reflection(Int n, Int i);
PeriodicPermutation word_product(Int n, const std::vector<Int>& word);

std::string coxeter_to_json(const CoxeterElement& c);
CoxeterElement coxeter_from_json(const std::string& text);

// ---- exact root and weight arithmetic ----

struct RationalVector {
    enum class Basis { SimpleRoots, FundamentalWeights, Ambient };
    Basis basis = Basis::SimpleRoots;
    std::vector<Rational> coords;

    static RationalVector zero(Basis b, Int n) { return {b, std::vector<Rational>(n)}; }
    bool is_integral() const;
    std::string to_string() const;

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& k, const RationalVector& a);

// affine Cartan matrix (n = 2 has off-diagonal -2)
RationalMatrix cartan_matrix(Int n);
// entry [i-1][j-1] = omega_c(alpha_i, alpha_j)
RationalMatrix omega_matrix(const CoxeterElement& c);
Rational omega(const CoxeterElement& c, const RationalVector& x, const RationalVector& y);

RationalVector delta(Int n);
RationalVector simple_root(Int n, Int i);
// e_j in simple-root coordinates, modulo e_1 + ... + e_n
RationalVector e_vector(Int n, Int j);

RationalVector reflect(Int n, Int i, const RationalVector& x);
// c x, with c = s_{w_1} ... s_{w_n}
RationalVector apply_coxeter(const CoxeterElement& c, const RationalVector& x);

Rational omega_delta(const CoxeterElement& c, Int j);
Rational half_omega_delta(const CoxeterElement& c, Int j);

// b_k = (1/n)[inn(<=k) out(>k) - inn(>k) out(<=k)]
RationalVector gamma_c(const CoxeterElement& c);
// (1/n)((#inn) sum_{outer} e_i - (#out) sum_{inner} e_i)
RationalVector gamma_c_from_e(const CoxeterElement& c);

// (omega_c(gamma_c, e_j), omega_c(delta, e_j))
std::pair<Rational, Rational> project(const CoxeterElement& c, Int j);

// <rho_i, e_j> = i/n + floor((j - i - 1)/n)
Rational weight_pairing(Int n, Int i, Int j);
// the same pairing computed from the simple-root coordinates of e_j
Rational weight_pairing_direct(Int n, Int i, Int j);

// omega_c(delta, .) as a functional, in fundamental-weight coordinates
RationalVector omega_delta_weights(const CoxeterElement& c);
// the three closed forms for (1/2) omega_c(delta, .)
RationalVector half_omega_delta_outer_sum(const CoxeterElement& c);
RationalVector half_omega_delta_inner_sum(const CoxeterElement& c);
RationalVector half_omega_delta_boundary_sum(const CoxeterElement& c);

RationalVector fundamental_weight(Int n, Int i);
// rho_i - rho_{i-1}
RationalVector sigma(Int n, Int i);
// finite-type reflection acting on a vector in weight coordinates
RationalVector reflect_weights(Int n, Int i, const RationalVector& v);

// ---- horizontal reflections and translations ----

bool is_horizontal(const CoxeterElement& c, const Generator& g);
std::vector<Generator> horizontal_interval_reflections(const CoxeterElement& c);

// translation vector (weight coordinates) of a translation in the affine symmetric group,
// read from its action on the simple roots: w alpha_k = alpha_k - <lambda, alpha_k> delta
std::optional<RationalVector> translation_vector(const PeriodicPermutation& w);

struct IntervalTranslation {
    Int outer_point = 0;
    Int inner_point = 0;
    PeriodicPermutation element;  // l_i l_j^{-1}
    RationalVector vector;        // sigma_i - sigma_j
};
std::vector<IntervalTranslation> interval_translations(const CoxeterElement& c);

// ---- factored translations ----

struct FactoredTranslationScheme {
    Rational q_out;
    Rational q_inn;

    FactoredTranslationScheme(Rational out, Rational inn);
    static FactoredTranslationScheme canonical(const CoxeterElement& c);
};

struct TranslationFactors {
    RationalVector out;
    RationalVector inn;
};

RationalVector vector_a(const CoxeterElement& c);  // (1/2) omega_c(delta, .)
RationalVector lambda_0(const CoxeterElement& c);
RationalVector lambda_out(const CoxeterElement& c, Int i);
RationalVector lambda_inn(const CoxeterElement& c, Int j);

TranslationFactors factor_translation(const FactoredTranslationScheme& s, const CoxeterElement& c, Int i, Int j);

struct ClosureResult {
    bool ok = true;
    std::string reason;          // "non-integral" or "not permuted"
    RationalVector witness;      // offending vector
    Int reflection = 0;          // offending simple reflection for "not permuted"
};
ClosureResult closure_check(const FactoredTranslationScheme& s, const CoxeterElement& c);

RationalVector scheme_relabel(const FactoredTranslationScheme& from, const FactoredTranslationScheme& to,
                              const CoxeterElement& c, const RationalVector& factor);

}  // namespace affnc
