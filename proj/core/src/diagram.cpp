#include "affnc/diagram.hpp"

#include "affnc/cycles_io.hpp"
#include "affnc/interval.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace affnc {

const char* kind_name(Block::Kind k) {
    switch (k) {
        case Block::Kind::Trivial: return "trivial";
        case Block::Kind::ArcOrSegment: return "arc";
        case Block::Kind::Disk: return "disk";
        case Block::Kind::DanglingAnnular: return "dangling-annular";
        case Block::Kind::NonDanglingAnnular: return "annular";
    }
    return "?";
}

std::vector<Int> Block::residues(Int n) const {
    std::vector<Int> r;
    for (Int x : cycle) r.push_back(residue(x, n));
    for (Int x : increasing.entries) r.push_back(residue(x, n));
    for (Int x : decreasing.entries) r.push_back(residue(x, n));
    std::sort(r.begin(), r.end());
    return r;
}

const Block* AnnularDiagram::annular_block() const {
    for (const auto& b : blocks)
        if (b.is_annular()) return &b;
    return nullptr;
}

const Block& AnnularDiagram::block_of(Int r) const {
    r = residue(r, n);
    for (const auto& b : blocks) {
        auto rs = b.residues(n);
        if (std::binary_search(rs.begin(), rs.end(), r)) return b;
    }
    throw std::logic_error("diagram does not cover residue " + std::to_string(r));
}

Curve Curve::chord(Int n, Int x, Int y) {
    auto g = Generator::reflection(n, x, y);
    return {Kind::Chord, g.i, g.j};
}

Curve Curve::self_loop(Int n, Int i) { return {Kind::SelfLoop, residue(i, n), 0}; }

std::string Curve::to_string() const {
    if (kind == Kind::SelfLoop) return "loop(" + std::to_string(a) + ")";
    return "chord(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

AnnularDiagram from_decomposition(const CycleDecomposition& d, const CoxeterElement& c) {
    AnnularDiagram out;
    out.n = d.n;
    if (!d.infinite_cycles.empty()) {
        Block b;
        b.kind = d.infinite_cycles.size() == 1 ? Block::Kind::DanglingAnnular : Block::Kind::NonDanglingAnnular;
        for (const auto& inf : d.infinite_cycles) {
            bool inc = inf.drift > 0;
            for (Int x : inf.entries)
                if (c.is_outer(x) != inc)
                    throw std::invalid_argument("annular boundary record runs along the wrong boundary");
            (inc ? b.increasing : b.decreasing) = inf;
        }
        out.blocks.push_back(std::move(b));
    }
    for (const auto& cyc : d.finite_classes) {
        Block b;
        b.kind = cyc.size() == 1 ? Block::Kind::Trivial
                 : cyc.size() == 2 ? Block::Kind::ArcOrSegment
                                   : Block::Kind::Disk;
        b.cycle = cyc;
        out.blocks.push_back(std::move(b));
    }
    return out;
}

bool finite(const Block& b) { return !b.is_annular(); }

// +1 on the increasing record, -1 on the decreasing record, 0 elsewhere
int annular_side(const Block& b, Int r, Int n) {
    for (Int x : b.increasing.entries)
        if (residue(x, n) == residue(r, n)) return 1;
    for (Int x : b.decreasing.entries)
        if (residue(x, n) == residue(r, n)) return -1;
    return 0;
}

std::optional<Int> lift_in(const std::vector<Int>& cycle, Int r, Int n) {
    for (Int x : cycle)
        if (residue(x, n) == residue(r, n)) return x;
    return std::nullopt;
}

bool contains(const std::vector<Int>& v, Int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

AnnularDiagram decode(const PeriodicPermutation& p, const CoxeterElement& c) {
    if (!is_member(p, c)) throw std::invalid_argument("decode: not a member of [1,c]");
    return from_decomposition(decompose(p), c);
}

PeriodicPermutation encode(const AnnularDiagram& d) {
    CycleDecomposition dec;
    dec.n = d.n;
    for (const auto& b : d.blocks) {
        if (finite(b)) {
            dec.finite_classes.push_back(b.cycle);
            continue;
        }
        if (!b.increasing.entries.empty()) dec.infinite_cycles.push_back(b.increasing);
        if (!b.decreasing.entries.empty()) dec.infinite_cycles.push_back(b.decreasing);
    }
    return recompose(dec);
}

bool has_dangling(const AnnularDiagram& d) {
    return std::any_of(d.blocks.begin(), d.blocks.end(),
                       [](const Block& b) { return b.kind == Block::Kind::DanglingAnnular; });
}

int non_annular_block_count(const AnnularDiagram& d) {
    return static_cast<int>(std::count_if(d.blocks.begin(), d.blocks.end(), [](const Block& b) { return finite(b); }));
}

bool curve_contains(const Block& block, const Curve& k, const CoxeterElement& c) {
    const Int n = c.n();
    if (block.kind == Block::Kind::Trivial) return false;
    if (finite(block)) {
        if (k.kind == Curve::Kind::SelfLoop) return false;
        auto x = lift_in(block.cycle, k.a, n);
        if (!x) return false;
        return contains(block.cycle, k.b + (*x - k.a));
    }
    if (k.kind == Curve::Kind::SelfLoop) return annular_side(block, k.a, n) != 0;
    int sa = annular_side(block, k.a, n), sb = annular_side(block, k.b, n);
    if (sa == 0 || sb == 0) return false;
    if (sa == sb) return k.b - k.a < n;
    return true;
}

bool curve_in(const AnnularDiagram& d, const Curve& k, const CoxeterElement& c) {
    return std::any_of(d.blocks.begin(), d.blocks.end(), [&](const Block& b) { return curve_contains(b, k, c); });
}

bool curve_subset(const AnnularDiagram& d1, const AnnularDiagram& d2, const CoxeterElement& c) {
    const Int n = c.n();
    for (const auto& b1 : d1.blocks) {
        if (b1.kind == Block::Kind::Trivial) continue;
        if (b1.is_annular()) {
            const Block* a2 = d2.annular_block();
            if (!a2) return false;
            for (Int r : b1.residues(n))
                if (annular_side(*a2, r, n) == 0) return false;
            continue;
        }
        const auto& e = b1.cycle;
        const Block& b2 = d2.block_of(e.front());
        if (b2.kind == Block::Kind::Trivial) return false;
        if (finite(b2)) {
            Int t = *lift_in(b2.cycle, e.front(), n) - e.front();
            for (Int x : e)
                if (!contains(b2.cycle, x + t)) return false;
            continue;
        }
        for (std::size_t s = 0; s < e.size(); ++s)
            for (std::size_t t = s + 1; t < e.size(); ++t)
                if (!curve_contains(b2, Curve::chord(n, e[s], e[t]), c)) return false;
    }
    return true;
}

Generator generator_of_curve(const Curve& k, const CoxeterElement& c) {
    if (k.kind == Curve::Kind::SelfLoop) return Generator::loop(c.n(), k.a, c.is_outer(k.a) ? 1 : -1);
    return Generator::reflection(c.n(), k.a, k.b);
}

std::optional<Curve> curve_of_generator(const Generator& g, const CoxeterElement& c) {
    if (g.is_reflection()) return Curve::chord(c.n(), g.i, g.j);
    if ((g.sign > 0) != c.is_outer(g.i)) return std::nullopt;
    return Curve::self_loop(c.n(), g.i);
}

std::vector<Curve> generating_curves(const AnnularDiagram& d, const CoxeterElement& c) {
    const Int n = c.n();
    std::vector<Curve> out;
    for (const auto& b : d.blocks) {
        if (b.kind == Block::Kind::Trivial) continue;
        if (b.is_annular()) {
            for (Int r : b.residues(n)) out.push_back(Curve::self_loop(n, r));
            continue;
        }
        const auto& e = b.cycle;
        if (e.size() == 2) {
            out.push_back(Curve::chord(n, e[0], e[1]));
            continue;
        }
        for (std::size_t s = 0; s < e.size(); ++s) out.push_back(Curve::chord(n, e[s], e[(s + 1) % e.size()]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Curve> curve_universe(Int n, Int span) {
    std::vector<Curve> out;
    for (Int i = 1; i <= n; ++i) {
        out.push_back(Curve::self_loop(n, i));
        for (Int j = i + 1; j <= i + span; ++j)
            if (residue(j, n) != residue(i, n)) out.push_back(Curve::chord(n, i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct OffsetUnionFind {
    std::vector<Int> parent, offset;  // offset[x] = lift(x) - lift(parent[x])
    explicit OffsetUnionFind(Int n) : parent(n + 1), offset(n + 1, 0) { std::iota(parent.begin(), parent.end(), 0); }

    std::pair<Int, Int> find(Int x) {
        if (parent[x] == x) return {x, 0};
        auto [root, off] = find(parent[x]);
        parent[x] = root;
        offset[x] += off;
        return {root, offset[x]};
    }

    // record lift(s) - lift(r) = o
    void unite(Int r, Int s, Int o) {
        auto [rr, orr] = find(r);
        auto [rs, ors] = find(s);
        if (rr == rs) {
            if (ors - orr != o) throw std::logic_error("meet_reconstruct: inconsistent winding labels");
            return;
        }
        parent[rs] = rr;
        offset[rs] = orr + o - ors;
    }
};

}  // namespace

AnnularDiagram meet_reconstruct(const AnnularDiagram& d1, const AnnularDiagram& d2, const CoxeterElement& c) {
    const Int n = c.n();
    if (d1.n != n || d2.n != n) throw std::invalid_argument("meet_reconstruct: period mismatch");
    const Block* a1 = d1.annular_block();
    const Block* a2 = d2.annular_block();
    std::vector<char> in_annulus(n + 1, 0);
    CycleDecomposition dec;
    dec.n = n;
    InfiniteCycle inc{{}, 1}, decr{{}, -1};
    for (Int r = 1; r <= n; ++r) {
        if (a1 && a2 && annular_side(*a1, r, n) != 0 && annular_side(*a2, r, n) != 0) {
            in_annulus[r] = 1;
            (c.is_outer(r) ? inc : decr).entries.push_back(r);
        }
    }
    std::reverse(decr.entries.begin(), decr.entries.end());
    if (!inc.entries.empty()) dec.infinite_cycles.push_back(inc);
    if (!decr.entries.empty()) dec.infinite_cycles.push_back(decr);

    OffsetUnionFind uf(n);
    auto try_pair = [&](const AnnularDiagram& here, const AnnularDiagram& there, Int r, Int s) {
        const Block& b = here.block_of(r);
        if (!finite(b) || b.kind == Block::Kind::Trivial) return;
        auto xs = lift_in(b.cycle, s, n);
        if (!xs) return;
        Int xr = *lift_in(b.cycle, r, n);
        if (curve_in(there, Curve::chord(n, xr, *xs), c)) uf.unite(r, s, *xs - xr);
    };
    for (Int r = 1; r <= n; ++r) {
        if (in_annulus[r]) continue;
        for (Int s = r + 1; s <= n; ++s) {
            if (in_annulus[s]) continue;
            try_pair(d1, d2, r, s);
            try_pair(d2, d1, r, s);
        }
    }
    std::map<Int, std::vector<Int>> comps;
    for (Int r = 1; r <= n; ++r) {
        if (in_annulus[r]) continue;
        auto [root, off] = uf.find(r);
        comps[root].push_back(root + off);
    }
    for (auto& [root, lifts] : comps) {
        // disk boundary: outer lifts ascending, then inner lifts descending
        std::vector<Int> outer, inner;
        for (Int x : lifts) (c.is_outer(x) ? outer : inner).push_back(x);
        std::sort(outer.begin(), outer.end());
        std::sort(inner.begin(), inner.end(), std::greater<>());
        outer.insert(outer.end(), inner.begin(), inner.end());
        dec.finite_classes.push_back(canonical_class(outer, n));
    }
    return from_decomposition(decompose(recompose(dec)), c);
}

Augmentation simple_connector_augment(const AnnularDiagram& d, const Curve& k, const CoxeterElement& c) {
    if (curve_in(d, k, c)) throw std::invalid_argument("augment: curve already lies in the diagram");
    auto p = encode(d);
    auto g = generator_of_curve(k, c).to_permutation();
    auto j = join(p, g, c);
    if (rank(j, c) != rank(p, c) + 1) throw std::invalid_argument("augment: curve is not a simple connector");
    auto tau = as_generator(j * p.inverse());
    if (!tau) throw std::logic_error("augment: cover step is not a generator");
    return {decode(j, c), *tau};
}

std::string diagram_to_json(const AnnularDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : d.blocks) {
        nlohmann::json jb;
        jb["kind"] = kind_name(b.kind);
        if (b.is_annular()) {
            auto closed = [&](const InfiniteCycle& r) {
                std::vector<Int> v = r.entries;
                if (!v.empty()) v.push_back(v.front() + r.drift * d.n);
                return v;
            };
            jb["lifts"] = {closed(b.increasing), closed(b.decreasing)};
        } else {
            jb["lifts"] = {b.cycle};
        }
        j["blocks"].push_back(jb);
    }
    return j.dump();
}

}  // namespace affnc
