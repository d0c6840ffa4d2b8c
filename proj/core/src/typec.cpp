#include "affnc/typec.hpp"

#include "affnc/cycles_io.hpp"
#include "affnc/diagram.hpp"
#include "affnc/interval.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace affnc {

Signing::Signing(Int n, std::vector<int> signs) : n_(n), signs_(std::move(signs)) {
    if (n_ < 3) throw std::invalid_argument("a signing needs n >= 3");
    if (static_cast<Int>(signs_.size()) != n_ - 1) throw std::invalid_argument("a signing assigns a sign to each of 1..n-1");
    for (int v : signs_)
        if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
}

Signing Signing::from_word(Int n, const std::vector<Int>& word) {
    if (static_cast<Int>(word.size()) != n) throw std::invalid_argument("word must use each of s_0..s_{n-1} once");
    std::vector<Int> pos(n, -1);
    for (Int k = 0; k < n; ++k) {
        Int s = word[k];
        if (s < 0 || s >= n || pos[s] != -1) throw std::invalid_argument("word must use each of s_0..s_{n-1} once");
        pos[s] = k;
    }
    std::vector<int> signs;
    for (Int i = 1; i < n; ++i) signs.push_back(pos[i - 1] < pos[i] ? 1 : -1);
    return Signing(n, signs);
}

std::vector<Int> Signing::elements() const {
    std::vector<Int> v;
    for (Int i = 1; i < n_; ++i) v.push_back(signs_[i - 1] * i);
    std::sort(v.begin(), v.end());
    return v;
}

bool Signing::is_outer(Int x) const {
    Int r = residue(x, 2 * n_);
    if (r == n_ || r == 2 * n_) throw std::invalid_argument("multiples of n are not boundary points");
    if (r < n_) return signs_[r - 1] > 0;
    return signs_[2 * n_ - r - 1] < 0;
}

std::string signing_to_json(const Signing& s) {
    nlohmann::json j;
    j["n"] = s.n();
    nlohmann::json signs = nlohmann::json::object();
    for (Int i = 1; i < s.n(); ++i) signs[std::to_string(i)] = s.sign(i);
    j["signs"] = signs;
    return j.dump();
}

Signing signing_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        Int n = j.at("n").get<Int>();
        std::vector<int> signs;
        for (Int i = 1; i < n; ++i) signs.push_back(j.at("signs").at(std::to_string(i)).get<int>());
        return Signing(n, signs);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("signing json: ") + e.what());
    }
}

bool fixes_multiples_of_n(const PeriodicPermutation& p, Int n) {
    return p.n() == 2 * n && p(n) == n && p(2 * n) == 2 * n;
}

PeriodicPermutation phi(const PeriodicPermutation& p) {
    const Int m = p.n();
    if (m % 2 != 0 || !fixes_multiples_of_n(p, m / 2)) throw std::invalid_argument("phi needs multiples of n fixed");
    std::vector<Int> w(m);
    for (Int i = 1; i <= m; ++i) w[i - 1] = -p(-i);
    return PeriodicPermutation(m, std::move(w));
}

bool is_phi_fixed(const PeriodicPermutation& p) {
    if (p.n() % 2 != 0 || !fixes_multiples_of_n(p, p.n() / 2)) return false;
    return phi(p) == p;
}

PeriodicPermutation coxeter_from_signing(const Signing& s) {
    CycleDecomposition d;
    d.n = 2 * s.n();
    auto a = s.elements();
    std::vector<Int> neg;
    for (Int x : a) neg.push_back(-x);
    d.infinite_cycles.push_back({a, 1});
    d.infinite_cycles.push_back({neg, -1});
    return recompose(d);
}

static PeriodicPermutation refl(Int m, Int a, Int b) { return Generator::reflection(m, a, b).to_permutation(); }

PeriodicPermutation simple_reflection_C(Int n, Int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    if (i == 0) return refl(2 * n, -1, 1);
    if (i == n - 1) return refl(2 * n, n - 1, n + 1);
    return refl(2 * n, i, i + 1) * refl(2 * n, -i, -i - 1);
}

PeriodicPermutation word_product_C(Int n, const std::vector<Int>& word) {
    auto p = PeriodicPermutation::identity(2 * n);
    for (Int s : word) p = p * simple_reflection_C(n, s);
    return p;
}

PeriodicPermutation simple_reflection_W(Int n, Int i) {
    if (i < 0 || i > 2 * n - 3) throw std::invalid_argument("simple reflection index out of range");
    if (i == 0) return refl(2 * n, -1, 1);
    if (i <= n - 2) return refl(2 * n, i, i + 1);
    if (i == n - 1) return refl(2 * n, n - 1, n + 1);
    return refl(2 * n, i + 1, i + 2);
}

Int fold_value(Int x, Int n) {
    Int q = floor_div(x, n);
    Int r = x - q * n;
    if (r == 0) throw std::invalid_argument("multiples of n have no folded index");
    return q * (n - 1) + r;
}

Int unfold_value(Int y, Int n) {
    Int q = floor_div(y - 1, n - 1);
    return q * n + (y - q * (n - 1));
}

PeriodicPermutation fold_index(const PeriodicPermutation& w, Int n) {
    if (!fixes_multiples_of_n(w, n)) throw std::invalid_argument("fold_index needs period 2n with multiples of n fixed");
    const Int m = 2 * n - 2;
    std::vector<Int> v(m);
    for (Int y = 1; y <= m; ++y) v[y - 1] = fold_value(w(unfold_value(y, n)), n);
    return PeriodicPermutation(m, std::move(v));
}

PeriodicPermutation unfold_index(const PeriodicPermutation& v, Int n) {
    if (v.n() != 2 * n - 2) throw std::invalid_argument("unfold_index needs period 2n-2");
    std::vector<Int> w(2 * n);
    for (Int x = 1; x <= 2 * n; ++x) w[x - 1] = x % n == 0 ? x : unfold_value(v(fold_value(x, n)), n);
    return PeriodicPermutation(2 * n, std::move(w));
}

CoxeterElement folded_coxeter(const Signing& s) {
    const Int m = 2 * s.n() - 2;
    std::vector<Int> outer;
    for (Int a : s.elements()) outer.push_back(residue(fold_value(a, s.n()), m));
    return CoxeterElement(m, outer);
}

bool is_member_C(const PeriodicPermutation& w, const Signing& s) {
    const Int n = s.n();
    if (w.n() != 2 * n || !fixes_multiples_of_n(w, n)) return false;
    if (phi(w) != w) return false;
    return is_member(fold_index(w, n), folded_coxeter(s), true);
}

ReflectionC reflection_C(Int n, Int a, Int b) {
    if (a % n == 0 || b % n == 0) throw std::invalid_argument("reflection endpoints must avoid multiples of n");
    auto t = Generator::reflection(2 * n, a, b);
    auto ft = Generator::reflection(2 * n, -a, -b);
    ReflectionC r;
    if (t == ft) {
        r.orbit = {t};
        r.element = t.to_permutation();
    } else {
        r.orbit = {std::min(t, ft), std::max(t, ft)};
        r.element = t.to_permutation() * ft.to_permutation();
    }
    return r;
}

std::vector<ReflectionC> reflections_C(Int n, Int bound) {
    std::map<PeriodicPermutation, ReflectionC> seen;
    for (const auto& g : all_generators(2 * n, bound, false)) {
        if (g.i % n == 0 || g.j % n == 0) continue;
        auto r = reflection_C(n, g.i, g.j);
        seen.emplace(r.element, r);
    }
    std::vector<ReflectionC> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

std::optional<ReflectionC> as_reflection_C(const PeriodicPermutation& w, Int n) {
    if (!is_phi_fixed(w) || w.n() != 2 * n) return std::nullopt;
    auto d = decompose(w);
    if (!d.infinite_cycles.empty()) return std::nullopt;
    std::vector<const std::vector<Int>*> nontrivial;
    for (const auto& c : d.finite_classes)
        if (c.size() > 1) nontrivial.push_back(&c);
    if (nontrivial.empty() || nontrivial.size() > 2 || nontrivial.front()->size() != 2) return std::nullopt;
    auto r = reflection_C(n, (*nontrivial.front())[0], (*nontrivial.front())[1]);
    if (r.element != w) return std::nullopt;
    return r;
}

int OrbifoldDiagram::enclosed_orbifold_points() const {
    int k = 0;
    for (const auto& b : blocks) k += b.orbifold_count;
    return k;
}

static std::vector<Int> negated_class(const std::vector<Int>& c, Int m) {
    std::vector<Int> neg;
    for (Int x : c) neg.push_back(-x);
    return canonical_class(neg, m);
}

static std::vector<Int> folded_points(const OrbifoldBlock& b, Int n) {
    std::set<Int> pts;
    auto add = [&](Int x) {
        Int r = residue(x, 2 * n);
        pts.insert(std::min(r, 2 * n - r));
    };
    for (const auto& c : b.cycles)
        for (Int x : c) add(x);
    for (const auto& c : b.infinite)
        for (Int x : c.entries) add(x);
    return {pts.begin(), pts.end()};
}

OrbifoldDiagram decode_orbifold(const PeriodicPermutation& w, const Signing& s) {
    if (!is_member_C(w, s)) throw std::invalid_argument("decode_orbifold: not a member of the C~ interval");
    const Int n = s.n(), m = 2 * n;
    auto d = decompose(w);
    OrbifoldDiagram out;
    out.n = n;
    if (!d.infinite_cycles.empty()) {
        OrbifoldBlock b;
        b.orbifold_count = 2;
        b.infinite = d.infinite_cycles;
        b.points = folded_points(b, n);
        out.blocks.push_back(std::move(b));
    }
    std::set<std::vector<Int>> done;
    for (const auto& c : d.finite_classes) {
        if (c.front() % n == 0 || done.count(c)) continue;
        auto neg = negated_class(c, m);
        OrbifoldBlock b;
        if (neg == c) {
            b.orbifold_count = 1;
            b.cycles = {c};
        } else {
            b.orbifold_count = 0;
            b.cycles = {c, neg};
            done.insert(neg);
        }
        done.insert(c);
        b.points = folded_points(b, n);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

PeriodicPermutation perm_C(const OrbifoldDiagram& d) {
    CycleDecomposition dec;
    dec.n = 2 * d.n;
    for (const auto& b : d.blocks) {
        for (const auto& c : b.cycles) dec.finite_classes.push_back(c);
        for (const auto& c : b.infinite) dec.infinite_cycles.push_back(c);
    }
    return recompose(dec);
}

int rank_C(const PeriodicPermutation& w, const Signing& s) {
    auto d = decode_orbifold(w, s);
    return static_cast<int>(s.n() - 1) - static_cast<int>(d.blocks.size()) + d.enclosed_orbifold_points();
}

int rank_C_symmetric(const PeriodicPermutation& w, const Signing& s) {
    if (!is_member_C(w, s)) throw std::invalid_argument("rank_C_symmetric: not a member");
    const Int n = s.n();
    auto fc = folded_coxeter(s);
    auto diagram = decode(fold_index(w, n), fc);
    // phi acts on folded labels by y -> 1 - y
    auto mirror = [&](const Block& b) {
        std::vector<Int> neg;
        for (Int y : b.cycle) neg.push_back(1 - y);
        return canonical_class(neg, fc.n());
    };
    int pairs = 0, annular = 0;
    for (const auto& b : diagram.blocks) {
        if (b.is_annular()) {
            ++annular;
            continue;
        }
        auto img = mirror(b);
        if (img != b.cycle && b.cycle < img) ++pairs;
    }
    return static_cast<int>(n - 1) - pairs + annular;
}

PeriodicPermutation translation_nu(Int n, Int i) {
    CycleDecomposition d;
    d.n = 2 * n;
    d.infinite_cycles.push_back({{i}, 1});
    d.infinite_cycles.push_back({{-i}, -1});
    return recompose(d);
}

std::vector<PeriodicPermutation> translations_C(const Signing& s) {
    std::vector<PeriodicPermutation> out;
    for (Int a : s.elements()) out.push_back(translation_nu(s.n(), a));
    return out;
}

PeriodicPermutation kreweras_C(const PeriodicPermutation& w, const Signing& s) {
    if (!is_member_C(w, s)) throw std::invalid_argument("kreweras_C: not a member");
    return w.inverse() * coxeter_from_signing(s);
}

std::vector<Generator> fold_lift_word(const std::vector<PeriodicPermutation>& word, const Signing& s) {
    const Int n = s.n();
    auto w = PeriodicPermutation::identity(2 * n);
    std::vector<Generator> out;
    for (const auto& t : word) {
        auto r = as_reflection_C(t, n);
        if (!r) throw std::invalid_argument("fold_lift_word: letter is not a C~ reflection");
        out.insert(out.end(), r->orbit.begin(), r->orbit.end());
        w = w * t;
    }
    if (!is_member_C(w, s) || static_cast<int>(word.size()) != rank_C(w, s))
        throw std::invalid_argument("fold_lift_word: word is not reduced below c");
    return out;
}

std::vector<PeriodicPermutation> covers_down_C(const PeriodicPermutation& w, const Signing& s, Int bound) {
    const Int n = s.n();
    int r = rank_C(w, s);
    std::set<PeriodicPermutation> out;
    for (const auto& g : ascent_generators(fold_index(w, n), bound)) {
        if (!g.is_reflection()) continue;
        auto t = reflection_C(n, unfold_value(g.i, n), unfold_value(g.j, n));
        auto u = t.element * w;
        if (is_member_C(u, s) && rank_C(u, s) == r - 1) out.insert(u);
    }
    return {out.begin(), out.end()};
}

// ---- direct reflection length ----

int length_lower_bound_C(const PeriodicPermutation& w, Int n) {
    const Int m = 2 * n;
    auto fw = fold_index(w, n);
    int lp = static_cast<int>((2 * n - 2) - finite_class_count(fw));
    int half = (lp + 1) / 2;
    // cycles of the signed permutation of residues; each pair {C, -C} with C != -C fixes a line
    std::vector<char> seen(m + 1, 0);
    int unpaired_cycles = 0;
    std::vector<std::vector<Int>> cycles;
    for (Int r = 1; r < m; ++r) {
        if (r == n || seen[r]) continue;
        std::vector<Int> cyc;
        for (Int x = r; !seen[x]; x = residue(w(x), m)) {
            seen[x] = 1;
            cyc.push_back(x);
        }
        cycles.push_back(cyc);
    }
    for (const auto& cyc : cycles) {
        bool self = std::find(cyc.begin(), cyc.end(), m - cyc.front()) != cyc.end();
        if (!self) ++unpaired_cycles;
    }
    int codim = static_cast<int>(n - 1) - unpaired_cycles / 2;
    return std::max(half, codim);
}

namespace {

struct Searcher {
    Int n;
    std::vector<PeriodicPermutation> letters;
    std::size_t budget;
    std::size_t nodes = 0;
    bool exhausted = false;
    std::unordered_map<PeriodicPermutation, int, PermHash> failed;  // largest k proven impossible

    bool dfs(const PeriodicPermutation& x, int k) {
        if (x.is_identity()) return true;
        if (k <= 0) return false;
        if (auto it = failed.find(x); it != failed.end() && it->second >= k) return false;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        std::vector<std::pair<int, PeriodicPermutation>> kids;
        for (const auto& t : letters) {
            auto y = t * x;
            int h = y.is_identity() ? 0 : length_lower_bound_C(y, n);
            if (h <= k - 1) kids.emplace_back(h, std::move(y));
        }
        std::stable_sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [h, y] : kids) {
            if (dfs(y, k - 1)) return true;
            if (exhausted) return false;
        }
        auto& f = failed[x];
        f = std::max(f, k);
        return false;
    }
};

// reflections whose lifts reach past the element's own lifts by 2n
Searcher make_searcher(const PeriodicPermutation& w, Int n, const LengthSearch& opt) {
    Int bound = opt.reflection_bound > 0 ? opt.reflection_bound : std::max(3 * n, w.max_abs_lift() + 2 * n);
    Searcher s{n, {}, opt.node_budget, 0, false, {}};
    for (const auto& r : reflections_C(n, bound)) s.letters.push_back(r.element);
    return s;
}

}  // namespace

std::optional<bool> length_at_most_C(const PeriodicPermutation& w, Int n, int k, const LengthSearch& opt) {
    if (!is_phi_fixed(w) || w.n() != 2 * n) throw std::invalid_argument("length_at_most_C needs a phi-fixed element");
    if (!w.is_identity() && length_lower_bound_C(w, n) > k) return false;
    auto s = make_searcher(w, n, opt);
    bool ok = s.dfs(w, k);
    if (s.exhausted) return std::nullopt;
    return ok;
}

std::optional<int> reflection_length_C(const PeriodicPermutation& w, Int n, int max_length, const LengthSearch& opt) {
    if (!is_phi_fixed(w) || w.n() != 2 * n) throw std::invalid_argument("reflection_length_C needs a phi-fixed element");
    if (w.is_identity()) return 0;
    auto s = make_searcher(w, n, opt);
    for (int k = length_lower_bound_C(w, n); k <= max_length; ++k) {
        bool ok = s.dfs(w, k);
        if (s.exhausted) return std::nullopt;
        if (ok) return k;
    }
    return max_length + 1;
}

std::optional<bool> direct_member_C(const PeriodicPermutation& w, const Signing& s, const LengthSearch& opt) {
    const Int n = s.n();
    if (!is_phi_fixed(w) || w.n() != 2 * n) return false;
    auto a = reflection_length_C(w, n, static_cast<int>(n), opt);
    if (!a) return std::nullopt;
    if (*a > n) return false;
    return length_at_most_C(w.inverse() * coxeter_from_signing(s), n, static_cast<int>(n) - *a, opt);
}

}  // namespace affnc
