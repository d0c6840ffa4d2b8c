#include "affnc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affnc {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int residue(Int x, Int n) {
    Int r = x % n;
    if (r <= 0) r += n;
    return r;
}

PeriodicPermutation::PeriodicPermutation(Int n, std::vector<Int> window)
    : n_(n), window_(std::move(window)) {
    if (n_ <= 0) throw std::invalid_argument("period must be positive");
    if (static_cast<Int>(window_.size()) != n_)
        throw std::invalid_argument("window length does not match period");
    std::vector<char> seen(n_, 0);
    for (Int v : window_) {
        Int r = residue(v, n_);
        if (seen[r - 1]) throw std::invalid_argument("window residues repeat");
        seen[r - 1] = 1;
    }
}

PeriodicPermutation PeriodicPermutation::identity(Int n) {
    std::vector<Int> w(n);
    std::iota(w.begin(), w.end(), Int{1});
    return PeriodicPermutation(n, std::move(w));
}

Int PeriodicPermutation::operator()(Int i) const {
    Int r = residue(i, n_);
    return window_[r - 1] + (i - r);
}

Int PeriodicPermutation::shift() const {
    Int s = std::accumulate(window_.begin(), window_.end(), Int{0});
    return (s - n_ * (n_ + 1) / 2) / n_;
}

bool PeriodicPermutation::is_identity() const {
    for (Int i = 0; i < n_; ++i)
        if (window_[i] != i + 1) return false;
    return true;
}

PeriodicPermutation PeriodicPermutation::inverse() const {
    std::vector<Int> inv(n_);
    for (Int r = 1; r <= n_; ++r) {
        Int v = window_[r - 1];
        Int rv = residue(v, n_);
        inv[rv - 1] = r - (v - rv);
    }
    return PeriodicPermutation(n_, std::move(inv));
}

Int PeriodicPermutation::max_abs_lift() const {
    Int m = n_;
    for (Int v : window_) m = std::max(m, v < 0 ? -v : v);
    return m;
}

PeriodicPermutation compose(const PeriodicPermutation& a, const PeriodicPermutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("period mismatch in compose");
    std::vector<Int> w(a.n());
    for (Int i = 1; i <= a.n(); ++i) w[i - 1] = a(b(i));
    return PeriodicPermutation(a.n(), std::move(w));
}

std::size_t PermHash::operator()(const PeriodicPermutation& p) const {
    std::size_t h = std::hash<Int>{}(p.n());
    for (Int v : p.window()) h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

CycleDecomposition decompose(const PeriodicPermutation& p) {
    const Int n = p.n();
    CycleDecomposition d;
    d.n = n;
    std::vector<char> seen(n + 1, 0);
    for (Int r = 1; r <= n; ++r) {
        if (seen[r]) continue;
        std::vector<Int> entries{r};
        seen[r] = 1;
        Int x = r;
        for (;;) {
            Int y = p(x);
            if (residue(y, n) == r) {
                Int q = (y - r) / n;
                if (q == 0)
                    d.finite_classes.push_back(std::move(entries));
                else
                    d.infinite_cycles.push_back({std::move(entries), q});
                break;
            }
            seen[residue(y, n)] = 1;
            entries.push_back(y);
            x = y;
        }
    }
    return d;
}

PeriodicPermutation recompose(const CycleDecomposition& d) {
    const Int n = d.n;
    std::vector<Int> w(n, 0);
    std::vector<char> set(n, 0);
    auto assign = [&](Int x, Int y) {
        Int r = residue(x, n);
        if (set[r - 1]) throw std::invalid_argument("residue appears in two cycles");
        set[r - 1] = 1;
        w[r - 1] = y - (x - r);
    };
    for (const auto& cyc : d.finite_classes)
        for (std::size_t k = 0; k < cyc.size(); ++k) assign(cyc[k], cyc[(k + 1) % cyc.size()]);
    for (const auto& inf : d.infinite_cycles) {
        if (inf.entries.empty() || inf.drift == 0) throw std::invalid_argument("bad infinite cycle");
        for (std::size_t k = 0; k + 1 < inf.entries.size(); ++k) assign(inf.entries[k], inf.entries[k + 1]);
        assign(inf.entries.back(), inf.entries.front() + inf.drift * n);
    }
    for (Int r = 1; r <= n; ++r)
        if (!set[r - 1]) w[r - 1] = r;
    return PeriodicPermutation(n, std::move(w));
}

int finite_class_count(const PeriodicPermutation& p) {
    return static_cast<int>(decompose(p).finite_classes.size());
}

static bool monotone(const InfiniteCycle& c, Int n) {
    const auto& e = c.entries;
    for (std::size_t k = 0; k < e.size(); ++k) {
        Int next = (k + 1 < e.size()) ? e[k + 1] : e.front() + c.drift * n;
        if (c.drift > 0 && next <= e[k]) return false;
        if (c.drift < 0 && next >= e[k]) return false;
    }
    return true;
}

bool is_annular(const CycleDecomposition& d) {
    const auto& inf = d.infinite_cycles;
    if (inf.size() > 2) return false;
    for (const auto& c : inf)
        if ((c.drift != 1 && c.drift != -1) || !monotone(c, d.n)) return false;
    if (inf.size() == 2 && inf[0].drift == inf[1].drift) return false;
    return true;
}

bool is_annular(const PeriodicPermutation& p) { return is_annular(decompose(p)); }

int annular_length(const PeriodicPermutation& p) {
    auto d = decompose(p);
    if (!is_annular(d)) throw std::invalid_argument("annular_length of a non-annular permutation");
    return static_cast<int>(p.n() - static_cast<Int>(d.finite_classes.size()));
}

Int winding(const PeriodicPermutation& p) {
    Int w = 0;
    for (const auto& cyc : decompose(p).finite_classes) {
        auto [lo, hi] = std::minmax_element(cyc.begin(), cyc.end());
        w = std::max(w, floor_div(*hi - *lo, p.n()));
    }
    return w;
}

Generator Generator::reflection(Int n, Int a, Int b) {
    if (residue(a, n) == residue(b, n)) throw std::invalid_argument("reflection endpoints share a residue");
    if (a > b) std::swap(a, b);
    Int t = residue(a, n) - a;
    Generator g;
    g.kind = Kind::Reflection;
    g.n = n;
    g.i = a + t;
    g.j = b + t;
    return g;
}

Generator Generator::loop(Int n, Int i, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("loop sign must be +1 or -1");
    Generator g;
    g.kind = Kind::Loop;
    g.n = n;
    g.i = residue(i, n);
    g.sign = sign;
    return g;
}

PeriodicPermutation Generator::to_permutation() const {
    auto w = PeriodicPermutation::identity(n).window();
    if (is_loop()) {
        w[i - 1] = i + sign * n;
    } else {
        Int rj = residue(j, n);
        w[i - 1] = j;
        w[rj - 1] = i - (j - rj);
    }
    return PeriodicPermutation(n, std::move(w));
}

Generator Generator::inverse() const {
    Generator g = *this;
    if (is_loop()) g.sign = -sign;
    return g;
}

std::string Generator::to_string() const {
    if (is_loop()) return "l_" + std::to_string(i) + (sign < 0 ? "^-1" : "");
    return "(" + std::to_string(i) + " " + std::to_string(j) + ")_" + std::to_string(n);
}

std::optional<Generator> as_generator(const PeriodicPermutation& p) {
    auto d = decompose(p);
    const std::vector<Int>* nontrivial = nullptr;
    for (const auto& cyc : d.finite_classes) {
        if (cyc.size() == 1) continue;
        if (nontrivial) return std::nullopt;
        nontrivial = &cyc;
    }
    if (d.infinite_cycles.empty()) {
        if (nontrivial && nontrivial->size() == 2)
            return Generator::reflection(p.n(), (*nontrivial)[0], (*nontrivial)[1]);
        return std::nullopt;
    }
    if (nontrivial || d.infinite_cycles.size() != 1) return std::nullopt;
    const auto& inf = d.infinite_cycles.front();
    if (inf.entries.size() != 1 || (inf.drift != 1 && inf.drift != -1)) return std::nullopt;
    return Generator::loop(p.n(), inf.entries.front(), static_cast<int>(inf.drift));
}

GeneratorAction apply_generator(const Generator& g, const PeriodicPermutation& p) {
    if (g.n != p.n()) throw std::invalid_argument("period mismatch in apply_generator");
    GeneratorAction a{compose(g.to_permutation(), p), 0};
    a.finite_class_delta = finite_class_count(a.result) - finite_class_count(p);
    return a;
}

// a reflection is within the bound if some representative pair has both endpoints in [-bound, bound]
static bool within_lift_bound(Int n, Int i, Int j, Int bound) {
    Int a = -bound + (residue(i - (-bound), n) % n);  // smallest lift of i that is >= -bound
    return a + (j - i) <= bound;
}

std::vector<Generator> all_generators(Int n, Int bound, bool with_loops) {
    std::vector<Generator> out;
    for (Int i = 1; i <= n; ++i)
        for (Int j = i + 1; j <= i + 2 * bound + n; ++j) {
            if (residue(j, n) == residue(i, n)) continue;
            if (within_lift_bound(n, i, j, bound)) out.push_back(Generator::reflection(n, i, j));
        }
    if (with_loops)
        for (Int i = 1; i <= n; ++i) {
            out.push_back(Generator::loop(n, i, 1));
            out.push_back(Generator::loop(n, i, -1));
        }
    std::sort(out.begin(), out.end());
    return out;
}

Int default_bound(const PeriodicPermutation& p) { return p.max_abs_lift() + p.n(); }

std::vector<Generator> ascent_generators(const PeriodicPermutation& p) {
    return ascent_generators(p, default_bound(p));
}

std::vector<Generator> ascent_generators(const PeriodicPermutation& p, Int bound) {
    const Int n = p.n();
    auto d = decompose(p);
    if (!is_annular(d)) throw std::invalid_argument("ascent_generators needs an annular permutation");
    std::set<Generator> out;

    for (const auto& cyc : d.finite_classes)
        for (std::size_t s = 0; s < cyc.size(); ++s)
            for (std::size_t t = s + 1; t < cyc.size(); ++t) out.insert(Generator::reflection(n, cyc[s], cyc[t]));

    // side[r] = +1 increasing infinite cycle, -1 decreasing, 0 finite
    std::vector<int> side(n + 1, 0);
    for (const auto& inf : d.infinite_cycles)
        for (Int x : inf.entries) side[residue(x, n)] = static_cast<int>(inf.drift);

    for (Int i = 1; i <= n; ++i) {
        if (side[i] == 0) continue;
        for (Int j = i + 1; j < i + n; ++j)
            if (side[residue(j, n)] == side[i]) out.insert(Generator::reflection(n, i, j));
        for (Int j = i + 1; j <= i + 2 * bound + n; ++j) {
            int sj = side[residue(j, n)];
            if (sj != 0 && sj != side[i] && within_lift_bound(n, i, j, bound))
                out.insert(Generator::reflection(n, i, j));
        }
        out.insert(Generator::loop(n, i, side[i] < 0 ? 1 : -1));
    }
    return {out.begin(), out.end()};
}

}  // namespace affnc
