#include "affnc/coxeter.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affnc {

CoxeterElement::CoxeterElement(Int n, const std::vector<Int>& outer_points) : n_(n), outer_(n + 1, 0) {
    if (n < 2) throw std::invalid_argument("Coxeter element needs n >= 2");
    for (Int i : outer_points) {
        if (i < 1 || i > n) throw std::invalid_argument("outer point out of range: " + std::to_string(i));
        outer_[i] = 1;
    }
    Int k = num_outer();
    if (k == 0 || k == n)
        throw std::invalid_argument("an all-outer or all-inner orientation is cyclic; not a Coxeter element");
}

CoxeterElement CoxeterElement::from_word(const std::vector<Int>& word) {
    const Int n = static_cast<Int>(word.size());
    std::vector<Int> pos(n + 1, -1);
    for (Int k = 0; k < n; ++k) {
        Int s = word[k];
        if (s < 1 || s > n || pos[s] != -1) throw std::invalid_argument("word is not a permutation of 1..n");
        pos[s] = k;
    }
    std::vector<Int> outer;
    for (Int i = 1; i <= n; ++i) {
        Int prev = i == 1 ? n : i - 1;
        if (pos[prev] < pos[i]) outer.push_back(i);
    }
    return CoxeterElement(n, outer);
}

std::vector<Int> CoxeterElement::outer_points() const {
    std::vector<Int> v;
    for (Int i = 1; i <= n_; ++i)
        if (outer_[i]) v.push_back(i);
    return v;
}

std::vector<Int> CoxeterElement::inner_points() const {
    std::vector<Int> v;
    for (Int i = 1; i <= n_; ++i)
        if (!outer_[i]) v.push_back(i);
    return v;
}

Int CoxeterElement::num_outer() const { return std::count(outer_.begin() + 1, outer_.end(), 1); }

bool CoxeterElement::precedes(Int i, Int j) const {
    i = residue(i, n_);
    j = residue(j, n_);
    if (residue(i + 1, n_) == j) return is_outer(j);
    if (residue(j + 1, n_) == i) return !is_outer(i);
    throw std::invalid_argument("precedes is only defined for adjacent simple reflections");
}

std::vector<Int> CoxeterElement::word() const {
    // Kahn's algorithm on the oriented cycle graph
    std::vector<int> indeg(n_ + 1, 0);
    std::vector<std::vector<Int>> out(n_ + 1);
    for (Int i = 1; i <= n_; ++i) {
        Int prev = i == 1 ? n_ : i - 1;
        if (n_ == 2 && i == 2) {
            // both edges join the same two nodes and agree; add one
            continue;
        }
        if (outer_[i]) {
            out[prev].push_back(i);
            ++indeg[i];
        } else {
            out[i].push_back(prev);
            ++indeg[prev];
        }
    }
    std::vector<Int> ready, w;
    for (Int i = 1; i <= n_; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end(), std::greater<>());
        Int v = ready.back();
        ready.pop_back();
        w.push_back(v);
        for (Int u : out[v])
            if (--indeg[u] == 0) ready.push_back(u);
    }
    return w;
}

PeriodicPermutation to_permutation(const CoxeterElement& c) {
    CycleDecomposition d;
    d.n = c.n();
    auto outer = c.outer_points();
    auto inner = c.inner_points();
    std::reverse(inner.begin(), inner.end());
    d.infinite_cycles.push_back({outer, 1});
    d.infinite_cycles.push_back({inner, -1});
    return recompose(d);
}

PeriodicPermutation simple_reflection(Int n, Int i) {
    if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
    return Generator::reflection(n, i, i + 1).to_permutation();
}

PeriodicPermutation word_product(Int n, const std::vector<Int>& word) {
    auto p = PeriodicPermutation::identity(n);
    for (Int s : word) p = p * simple_reflection(n, s);
    return p;
}

std::string coxeter_to_json(const CoxeterElement& c) {
    nlohmann::json j;
    j["n"] = c.n();
    j["outer"] = c.outer_points();
    return j.dump();
}

CoxeterElement coxeter_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        return CoxeterElement(j.at("n").get<Int>(), j.at("outer").get<std::vector<Int>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("coxeter json: ") + e.what());
    }
}

// ---- vectors ----

bool RationalVector::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return affnc::is_integer(q); });
}

std::string RationalVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? ", " : "") << affnc::to_string(coords[k]);
    os << ')';
    return os.str();
}

static void check_same(const RationalVector& a, const RationalVector& b) {
    if (a.basis != b.basis || a.coords.size() != b.coords.size())
        throw std::invalid_argument("vector basis or dimension mismatch");
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    check_same(a, b);
    RationalVector r = a;
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
    return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    check_same(a, b);
    RationalVector r = a;
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= b.coords[k];
    return r;
}

RationalVector operator-(const RationalVector& a) {
    RationalVector r = a;
    for (auto& x : r.coords) x = -x;
    return r;
}

RationalVector operator*(const Rational& k, const RationalVector& a) {
    RationalVector r = a;
    for (auto& x : r.coords) x *= k;
    return r;
}

using Basis = RationalVector::Basis;

RationalMatrix cartan_matrix(Int n) {
    RationalMatrix K(n, RationalRow(n));
    for (Int i = 0; i < n; ++i) {
        K[i][i] += 2;
        K[i][(i + 1) % n] -= 1;
        K[i][(i + n - 1) % n] -= 1;
    }
    return K;
}

RationalMatrix omega_matrix(const CoxeterElement& c) {
    const Int n = c.n();
    RationalMatrix W(n, RationalRow(n));
    // one contribution per edge {k-1, k} of the cycle diagram; parallel edges add up when n = 2
    for (Int k = 1; k <= n; ++k) {
        Int a = (k == 1 ? n : k - 1) - 1;
        Int b = k - 1;
        int v = c.is_outer(k) ? 1 : -1;  // s_{k-1} precedes s_k iff k is outer
        W[a][b] += v;
        W[b][a] -= v;
    }
    return W;
}

Rational omega(const CoxeterElement& c, const RationalVector& x, const RationalVector& y) {
    if (x.basis != Basis::SimpleRoots || y.basis != Basis::SimpleRoots)
        throw std::invalid_argument("omega takes simple-root coordinates");
    auto W = omega_matrix(c);
    Rational s = 0;
    for (Int i = 0; i < c.n(); ++i) {
        if (x.coords[i] == 0) continue;
        for (Int j = 0; j < c.n(); ++j) s += x.coords[i] * W[i][j] * y.coords[j];
    }
    return s;
}

RationalVector delta(Int n) {
    auto v = RationalVector::zero(Basis::SimpleRoots, n);
    for (auto& x : v.coords) x = 1;
    return v;
}

RationalVector simple_root(Int n, Int i) {
    auto v = RationalVector::zero(Basis::SimpleRoots, n);
    v.coords[residue(i, n) - 1] = 1;
    return v;
}

RationalVector e_vector(Int n, Int j) {
    Int r = residue(j, n);
    Int q = (j - r) / n;
    // e_1 = sum_m (m/n - 1) alpha_m, then e_{k+1} = e_k + alpha_k
    auto v = RationalVector::zero(Basis::SimpleRoots, n);
    for (Int m = 1; m <= n; ++m) v.coords[m - 1] = Rational(m, n) - 1;
    for (Int m = 1; m < r; ++m) v.coords[m - 1] += 1;
    for (auto& x : v.coords) x += q;
    return v;
}

RationalVector reflect(Int n, Int i, const RationalVector& x) {
    auto K = cartan_matrix(n);
    Int k = residue(i, n) - 1;
    Rational pairing = 0;
    for (Int m = 0; m < n; ++m) pairing += K[k][m] * x.coords[m];
    RationalVector r = x;
    r.coords[k] -= pairing;
    return r;
}

RationalVector apply_coxeter(const CoxeterElement& c, const RationalVector& x) {
    auto w = c.word();
    RationalVector r = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(c.n(), *it, r);
    return r;
}

Rational omega_delta(const CoxeterElement& c, Int j) { return omega(c, delta(c.n()), e_vector(c.n(), j)); }

Rational half_omega_delta(const CoxeterElement& c, Int j) { return omega_delta(c, j) / 2; }

RationalVector gamma_c(const CoxeterElement& c) {
    const Int n = c.n();
    auto v = RationalVector::zero(Basis::SimpleRoots, n);
    for (Int k = 1; k <= n; ++k) {
        Int inn_le = 0, out_le = 0;
        for (Int i = 1; i <= k; ++i) (c.is_outer(i) ? out_le : inn_le) += 1;
        Int inn_gt = c.num_inner() - inn_le, out_gt = c.num_outer() - out_le;
        v.coords[k - 1] = Rational(inn_le * out_gt - inn_gt * out_le, n);
    }
    return v;
}

RationalVector gamma_c_from_e(const CoxeterElement& c) {
    const Int n = c.n();
    auto v = RationalVector::zero(Basis::SimpleRoots, n);
    for (Int i = 1; i <= n; ++i) {
        Rational k = c.is_outer(i) ? Rational(c.num_inner()) : Rational(-c.num_outer());
        v = v + k * e_vector(n, i);
    }
    return Rational(1, n) * v;
}

std::pair<Rational, Rational> project(const CoxeterElement& c, Int j) {
    auto e = e_vector(c.n(), j);
    return {omega(c, gamma_c(c), e), omega(c, delta(c.n()), e)};
}

Rational weight_pairing(Int n, Int i, Int j) { return Rational(i, n) + floor_div(j - i - 1, n); }

Rational weight_pairing_direct(Int n, Int i, Int j) { return e_vector(n, j).coords[residue(i, n) - 1]; }

RationalVector omega_delta_weights(const CoxeterElement& c) {
    auto v = RationalVector::zero(Basis::FundamentalWeights, c.n());
    for (Int i = 1; i <= c.n(); ++i) v.coords[i - 1] = omega(c, delta(c.n()), simple_root(c.n(), i));
    return v;
}

RationalVector fundamental_weight(Int n, Int i) {
    auto v = RationalVector::zero(Basis::FundamentalWeights, n);
    v.coords[residue(i, n) - 1] = 1;
    return v;
}

RationalVector sigma(Int n, Int i) { return fundamental_weight(n, i) - fundamental_weight(n, i - 1); }

RationalVector half_omega_delta_outer_sum(const CoxeterElement& c) {
    auto v = RationalVector::zero(Basis::FundamentalWeights, c.n());
    for (Int i : c.outer_points()) v = v + sigma(c.n(), i);
    return v;
}

RationalVector half_omega_delta_inner_sum(const CoxeterElement& c) {
    auto v = RationalVector::zero(Basis::FundamentalWeights, c.n());
    for (Int i : c.inner_points()) v = v - sigma(c.n(), i);
    return v;
}

RationalVector half_omega_delta_boundary_sum(const CoxeterElement& c) {
    auto v = RationalVector::zero(Basis::FundamentalWeights, c.n());
    for (Int i = 1; i <= c.n(); ++i) {
        if (c.is_outer(i) && c.is_inner(i + 1)) v = v + fundamental_weight(c.n(), i);
        if (c.is_inner(i) && c.is_outer(i + 1)) v = v - fundamental_weight(c.n(), i);
    }
    return v;
}

RationalVector reflect_weights(Int n, Int i, const RationalVector& v) {
    auto K = cartan_matrix(n);
    Int k = residue(i, n) - 1;
    RationalVector r = v;
    for (Int m = 0; m < n; ++m) r.coords[m] -= v.coords[k] * K[k][m];
    return r;
}

bool is_horizontal(const CoxeterElement& c, const Generator& g) {
    return g.is_reflection() && c.is_outer(g.i) == c.is_outer(g.j);
}

std::vector<Generator> horizontal_interval_reflections(const CoxeterElement& c) {
    std::vector<Generator> out;
    for (Int i = 1; i <= c.n(); ++i)
        for (Int j = i + 1; j <= c.n(); ++j) {
            if (c.is_outer(i) != c.is_outer(j)) continue;
            out.push_back(Generator::reflection(c.n(), i, j));
            out.push_back(Generator::reflection(c.n(), i, j - c.n()));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RationalVector> translation_vector(const PeriodicPermutation& w) {
    const Int n = w.n();
    if (w.shift() != 0) return std::nullopt;
    auto lambda = RationalVector::zero(Basis::FundamentalWeights, n);
    for (Int k = 1; k <= n; ++k) {
        auto image = e_vector(n, w(k + 1)) - e_vector(n, w(k));
        auto diff = image - simple_root(n, k);
        for (Int m = 1; m < n; ++m)
            if (diff.coords[m] != diff.coords[0]) return std::nullopt;
        lambda.coords[k - 1] = -diff.coords[0];
    }
    return lambda;
}

std::vector<IntervalTranslation> interval_translations(const CoxeterElement& c) {
    std::vector<IntervalTranslation> out;
    const Int n = c.n();
    for (Int i : c.outer_points())
        for (Int j : c.inner_points()) {
            auto t = Generator::loop(n, i, 1).to_permutation() * Generator::loop(n, j, -1).to_permutation();
            out.push_back({i, j, t, sigma(n, i) - sigma(n, j)});
        }
    return out;
}

FactoredTranslationScheme::FactoredTranslationScheme(Rational out, Rational inn)
    : q_out(std::move(out)), q_inn(std::move(inn)) {
    if (q_out + q_inn != 1) throw std::invalid_argument("factoring constants must sum to 1");
}

FactoredTranslationScheme FactoredTranslationScheme::canonical(const CoxeterElement& c) {
    return {Rational(c.num_inner(), c.n()), Rational(c.num_outer(), c.n())};
}

RationalVector vector_a(const CoxeterElement& c) { return Rational(1, 2) * omega_delta_weights(c); }

RationalVector lambda_0(const CoxeterElement& c) {
    return (Rational(1, c.num_outer()) + Rational(1, c.num_inner())) * vector_a(c);
}

RationalVector lambda_out(const CoxeterElement& c, Int i) {
    return sigma(c.n(), i) - Rational(1, c.num_outer()) * vector_a(c);
}

RationalVector lambda_inn(const CoxeterElement& c, Int j) {
    return -sigma(c.n(), j) - Rational(1, c.num_inner()) * vector_a(c);
}

TranslationFactors factor_translation(const FactoredTranslationScheme& s, const CoxeterElement& c, Int i, Int j) {
    if (!c.is_outer(i) || !c.is_inner(j)) throw std::invalid_argument("factor_translation needs i outer and j inner");
    auto l0 = lambda_0(c);
    return {lambda_out(c, i) + s.q_out * l0, lambda_inn(c, j) + s.q_inn * l0};
}

ClosureResult closure_check(const FactoredTranslationScheme& s, const CoxeterElement& c) {
    const Int n = c.n();
    auto l0 = lambda_0(c);
    std::vector<RationalVector> factors;
    for (Int i : c.outer_points()) factors.push_back(lambda_out(c, i) + s.q_out * l0);
    for (Int j : c.inner_points()) factors.push_back(lambda_inn(c, j) + s.q_inn * l0);
    for (const auto& f : factors)
        if (!f.is_integral()) return {false, "non-integral", f, 0};
    std::vector<RationalVector> signed_set = factors;
    for (const auto& f : factors) signed_set.push_back(-f);
    for (Int k = 1; k < n; ++k)
        for (const auto& v : signed_set) {
            auto img = reflect_weights(n, k, v);
            if (std::find(signed_set.begin(), signed_set.end(), img) == signed_set.end())
                return {false, "not permuted", v, k};
        }
    return {true, "", {}, 0};
}

RationalVector scheme_relabel(const FactoredTranslationScheme& from, const FactoredTranslationScheme& to,
                              const CoxeterElement& c, const RationalVector& factor) {
    auto l0 = lambda_0(c);
    for (Int i : c.outer_points())
        if (lambda_out(c, i) + from.q_out * l0 == factor) return lambda_out(c, i) + to.q_out * l0;
    for (Int j : c.inner_points())
        if (lambda_inn(c, j) + from.q_inn * l0 == factor) return lambda_inn(c, j) + to.q_inn * l0;
    throw std::invalid_argument("vector is not a factor of the source scheme");
}

}  // namespace affnc
