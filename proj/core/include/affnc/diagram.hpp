#pragma once

#include "affnc/coxeter.hpp"
#include "affnc/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affnc {

struct Block {
    enum class Kind { Trivial, ArcOrSegment, Disk, DanglingAnnular, NonDanglingAnnular };
    Kind kind = Kind::Trivial;
    std::vector<Int> cycle;     // finite blocks: canonical cycle
    InfiniteCycle increasing;   // annular blocks: outer boundary record (empty entries if absent)
    InfiniteCycle decreasing;   // annular blocks: inner boundary record

    bool is_annular() const { return kind == Kind::DanglingAnnular || kind == Kind::NonDanglingAnnular; }
    std::vector<Int> residues(Int n) const;
    friend bool operator==(const Block&, const Block&) = default;
};

const char* kind_name(Block::Kind k);

struct AnnularDiagram {
    Int n = 0;
    std::vector<Block> blocks;

    const Block* annular_block() const;
    // the block holding residue r
    const Block& block_of(Int r) const;
    friend bool operator==(const AnnularDiagram&, const AnnularDiagram&) = default;
};

struct Curve {
    enum class Kind { Chord, SelfLoop };
    Kind kind = Kind::Chord;
    Int a = 0;  // chord: a in 1..n, a < b; self loop: the residue
    Int b = 0;

    static Curve chord(Int n, Int x, Int y);
    static Curve self_loop(Int n, Int i);
    std::string to_string() const;
    friend bool operator==(const Curve&, const Curve&) = default;
    friend auto operator<=>(const Curve&, const Curve&) = default;
};

AnnularDiagram decode(const PeriodicPermutation& p, const CoxeterElement& c);
PeriodicPermutation encode(const AnnularDiagram& d);

bool has_dangling(const AnnularDiagram& d);
// number of blocks that are not annular (trivial blocks included)
int non_annular_block_count(const AnnularDiagram& d);

bool curve_contains(const Block& block, const Curve& curve, const CoxeterElement& c);
bool curve_in(const AnnularDiagram& d, const Curve& curve, const CoxeterElement& c);
bool curve_subset(const AnnularDiagram& d1, const AnnularDiagram& d2, const CoxeterElement& c);

// curves correspond to the rank-one members: chords to reflections, the self loop at i
// to l_i (i outer) or l_i^{-1} (i inner)
Generator generator_of_curve(const Curve& k, const CoxeterElement& c);
std::optional<Curve> curve_of_generator(const Generator& g, const CoxeterElement& c);

// consecutive boundary chords of finite blocks, and self loops plus boundary chords of the annular block
std::vector<Curve> generating_curves(const AnnularDiagram& d, const CoxeterElement& c);
// every curve whose chord lifts satisfy b - a <= span, together with all self loops
std::vector<Curve> curve_universe(Int n, Int span);

AnnularDiagram meet_reconstruct(const AnnularDiagram& d1, const AnnularDiagram& d2, const CoxeterElement& c);

struct Augmentation {
    AnnularDiagram diagram;
    Generator tau;  // encode(diagram) = tau * encode(d)
};
Augmentation simple_connector_augment(const AnnularDiagram& d, const Curve& k, const CoxeterElement& c);

struct SvgOptions {
    double outer_radius = 100;
    double inner_radius = 40;
    bool labels = true;
};
std::string render_svg(const AnnularDiagram& d, const CoxeterElement& c, const SvgOptions& opt = {});

std::string diagram_to_json(const AnnularDiagram& d);

}  // namespace affnc
