#include "suites.hpp"

#include "affnc/coxeter.hpp"
#include "affnc/cycles_io.hpp"
#include "affnc/diagram.hpp"
#include "affnc/interval.hpp"
#include "affnc/typec.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace affnc;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Int> env_winding_bound() {
    const char* s = std::getenv("AFFNC_WINDING_BOUND");
    if (!s || !*s) return std::nullopt;
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("AFFNC_WINDING_BOUND is not an integer: ") + s);
    }
}

// Coxeter data shared by every verb: either an A~ element (--word or --outer) or a C~ signing
template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            out.push_back(static_cast<T>(v));
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": not an integer list: " + text);
        }
    }
    return out;
}

// Coxeter data shared by every verb: either an A~ element (--word or --outer) or a C~ signing
struct CoxeterArgs {
    Int n = 0;
    std::string word_s, outer_s, signing_s, signs_s;

    void add(CLI::App* app) {
        app->add_option("--n", n, "rank parameter (period n for A~, 2n for C~)")->required();
        auto* w = app->add_option("--word", word_s, "A~ Coxeter word over 1..n, comma separated");
        auto* o = app->add_option("--outer", outer_s, "A~ outer points in 1..n, comma separated");
        auto* s = app->add_option("--signing", signing_s, "C~ Coxeter word over 0..n-1, comma separated");
        auto* g = app->add_option("--signs", signs_s, "C~ signs (+1/-1) of 1..n-1, comma separated");
        w->excludes(o)->excludes(s)->excludes(g);
        o->excludes(s)->excludes(g);
        s->excludes(g);
    }
    bool type_c() const { return !signing_s.empty() || !signs_s.empty(); }
    Int period() const { return type_c() ? 2 * n : n; }

    CoxeterElement coxeter() const {
        if (!word_s.empty()) {
            auto word = parse_list<Int>(word_s, "--word");
            if (static_cast<Int>(word.size()) != n) throw UsageError("--word must list each of 1..n once");
            return CoxeterElement::from_word(word);
        }
        if (!outer_s.empty()) return CoxeterElement(n, parse_list<Int>(outer_s, "--outer"));
        throw UsageError("need --word or --outer (or --signing/--signs for type C)");
    }
    Signing signing() const {
        if (!signing_s.empty()) return Signing::from_word(n, parse_list<Int>(signing_s, "--signing"));
        return Signing(n, parse_list<int>(signs_s, "--signs"));
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// cycle notation, an inline JSON object, or @file holding either
PeriodicPermutation parse_operand(std::string text, Int period) {
    if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
    auto first = text.find_first_not_of(" \t\r\n");
    PeriodicPermutation p = (first != std::string::npos && text[first] == '{') ? perm_from_json(text)
                                                                              : parse_cycles(text, period);
    if (p.n() != period) throw UsageError("operand has period " + std::to_string(p.n()) + ", expected " +
                                          std::to_string(period));
    return p;
}

json perm_json(const PeriodicPermutation& p) { return print_cycles(p); }

json orbifold_json(const OrbifoldDiagram& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks)
        blocks.push_back({{"points", b.points}, {"orbifold_points", b.orbifold_count}, {"annular", !b.infinite.empty()}});
    return {{"n", d.n}, {"blocks", blocks}, {"enclosed_orbifold_points", d.enclosed_orbifold_points()}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ---- coxeter ----

int cmd_coxeter(const CoxeterArgs& ca, Int from, Int to) {
    if (ca.type_c()) {
        auto s = ca.signing();
        auto c = coxeter_from_signing(s);
        emit({{"type", "C"},
              {"n", s.n()},
              {"signing", json::parse(signing_to_json(s))},
              {"elements", s.elements()},
              {"coxeter", print_cycles_signed(c)},
              {"folded_outer", folded_coxeter(s).outer_points()}});
        return kPass;
    }
    auto c = ca.coxeter();
    emit({{"type", "A"},
          {"n", c.n()},
          {"outer", c.outer_points()},
          {"inner", c.inner_points()},
          {"word", c.word()},
          {"coxeter", print_cycles(to_permutation(c))},
          {"omega_gamma_delta", to_string(omega(c, gamma_c(c), delta(c.n())))}});
    if (from > to) std::swap(from, to);
    for (Int j = from; j <= to; ++j) {
        auto [x, y] = project(c, j);
        emit({{"j", j}, {"side", c.is_outer(j) ? "outer" : "inner"}, {"omega_gamma", to_string(x)},
              {"omega_delta", to_string(y)}});
    }
    return kPass;
}

// ---- interval ----

struct IntervalArgs {
    std::string op;
    std::vector<std::string> operands;
    Int bound = 0;
};

Int default_bound(const std::vector<PeriodicPermutation>& ps, Int n, Int base_lift) {
    if (auto w = env_winding_bound()) return (*w + 2) * n;
    Int m = base_lift;
    for (const auto& p : ps) m = std::max(m, p.max_abs_lift());
    return m + n;
}

int cmd_interval_A(const CoxeterArgs& ca, const IntervalArgs& ia) {
    auto c = ca.coxeter();
    const Int n = c.n();
    std::vector<PeriodicPermutation> ps;
    for (const auto& s : ia.operands) ps.push_back(parse_operand(s, n));
    auto need = [&](std::size_t k) {
        if (ps.size() != k) throw UsageError(ia.op + " takes " + std::to_string(k) + " operand(s)");
        for (const auto& p : ps)
            if (!is_member(p, c)) {
                emit({{"error", "not a member"}, {"element", perm_json(p)}});
                return false;
            }
        return true;
    };
    if (ia.op == "member") {
        if (ps.size() != 1) throw UsageError("member takes 1 operand");
        bool full = is_member(ps[0], c);
        emit({{"member", full}, {"full", full}, {"restricted", full && is_member(ps[0], c, true)}});
        return kPass;
    }
    if (ia.op == "leq") {
        if (!need(2)) return kFail;
        emit({{"leq", leq(ps[0], ps[1], c)}});
    } else if (ia.op == "rank") {
        if (!need(1)) return kFail;
        emit({{"rank", rank(ps[0], c)}});
    } else if (ia.op == "meet") {
        if (!need(2)) return kFail;
        emit({{"meet", perm_json(meet(ps[0], ps[1], c))}});
    } else if (ia.op == "join") {
        if (!need(2)) return kFail;
        emit({{"join", perm_json(join(ps[0], ps[1], c))}});
    } else if (ia.op == "krew") {
        if (!need(1)) return kFail;
        emit({{"krew", perm_json(kreweras(ps[0], c))}});
    } else if (ia.op == "covers") {
        if (!need(1)) return kFail;
        Int b = ia.bound > 0 ? ia.bound : default_bound(ps, n, to_permutation(c).max_abs_lift());
        json down = json::array(), up = json::array();
        for (const auto& u : covers_down(ps[0], c, b)) down.push_back(perm_json(u));
        for (const auto& u : covers_up(ps[0], c, b)) up.push_back(perm_json(u));
        emit({{"bound", b}, {"down", down}, {"up", up}});
    } else if (ia.op == "decode") {
        if (!need(1)) return kFail;
        emit(json::parse(diagram_to_json(decode(ps[0], c))));
    } else {
        throw UsageError("unknown interval operation " + ia.op);
    }
    return kPass;
}

int cmd_interval_C(const CoxeterArgs& ca, const IntervalArgs& ia) {
    auto s = ca.signing();
    const Int n = s.n();
    auto fc = folded_coxeter(s);
    std::vector<PeriodicPermutation> ps;
    for (const auto& t : ia.operands) ps.push_back(parse_operand(t, 2 * n));
    auto need = [&](std::size_t k) {
        if (ps.size() != k) throw UsageError(ia.op + " takes " + std::to_string(k) + " operand(s)");
        for (const auto& p : ps)
            if (!is_member_C(p, s)) {
                emit({{"error", "not a member"}, {"element", perm_json(p)}});
                return false;
            }
        return true;
    };
    auto fold = [&](const PeriodicPermutation& p) { return fold_index(p, n); };
    if (ia.op == "member") {
        if (ps.size() != 1) throw UsageError("member takes 1 operand");
        emit({{"member", is_member_C(ps[0], s)}, {"phi_fixed", is_phi_fixed(ps[0])}});
        return kPass;
    }
    if (ia.op == "leq") {
        if (!need(2)) return kFail;
        emit({{"leq", leq(fold(ps[0]), fold(ps[1]), fc)}});
    } else if (ia.op == "rank") {
        if (!need(1)) return kFail;
        emit({{"rank", rank_C(ps[0], s)}});
    } else if (ia.op == "meet") {
        if (!need(2)) return kFail;
        emit({{"meet", perm_json(unfold_index(meet(fold(ps[0]), fold(ps[1]), fc), n))}});
    } else if (ia.op == "join") {
        if (!need(2)) return kFail;
        emit({{"join", perm_json(unfold_index(join(fold(ps[0]), fold(ps[1]), fc), n))}});
    } else if (ia.op == "krew") {
        if (!need(1)) return kFail;
        emit({{"krew", perm_json(kreweras_C(ps[0], s))}});
    } else if (ia.op == "covers") {
        if (!need(1)) return kFail;
        Int b = ia.bound > 0 ? ia.bound : default_bound(ps, 2 * n, coxeter_from_signing(s).max_abs_lift());
        json down = json::array();
        for (const auto& u : covers_down_C(ps[0], s, b)) down.push_back(perm_json(u));
        emit({{"bound", b}, {"down", down}});
    } else if (ia.op == "decode") {
        if (!need(1)) return kFail;
        emit(orbifold_json(decode_orbifold(ps[0], s)));
    } else {
        throw UsageError("unknown interval operation " + ia.op);
    }
    return kPass;
}

// ---- verify ----

int cmd_verify(const std::string& suite, cli::SuiteOptions opt) {
    std::vector<std::string> names;
    if (suite == "all") names = cli::suite_names();
    else names = {suite};
    bool all_pass = true;
    for (const auto& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = cli::run_suite(name, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        emit(r.to_json());
        std::cerr << name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks - r.failures << "/" << r.checks
                  << " checks, " << secs << " s)\n";
        all_pass = all_pass && r.pass;
    }
    std::cerr << (all_pass ? "all suites passed" : "some suites FAILED") << '\n';
    return all_pass ? kPass : kFail;
}

// ---- render ----

int cmd_render(const CoxeterArgs& ca, const std::string& operand, const std::string& out) {
    std::string svg;
    if (ca.type_c()) {
        auto s = ca.signing();
        auto w = operand.empty() ? coxeter_from_signing(s) : parse_operand(operand, 2 * s.n());
        if (!is_member_C(w, s)) {
            emit({{"error", "not a member"}, {"element", perm_json(w)}});
            return kUsage;
        }
        // the symmetric annulus, drawn from the folded element
        auto fc = folded_coxeter(s);
        svg = render_svg(decode(fold_index(w, s.n()), fc), fc);
    } else {
        auto c = ca.coxeter();
        auto w = operand.empty() ? to_permutation(c) : parse_operand(operand, c.n());
        if (!is_member(w, c)) {
            emit({{"error", "not a member"}, {"element", perm_json(w)}});
            return kUsage;
        }
        svg = render_svg(decode(w, c), c);
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << svg)) {
        std::cerr << "cannot write " << out << '\n';
        return kUsage;
    }
    emit({{"written", out}, {"bytes", svg.size()}});
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine noncrossing partitions of types A~ and C~"};
    app.require_subcommand(1);

    CoxeterArgs cox_args;
    Int from = 1, to = 0;
    auto* cox = app.add_subcommand("coxeter", "describe a Coxeter element and its projection table");
    cox_args.add(cox);
    cox->add_option("--from", from, "first j of the projection table (default 1)");
    cox->add_option("--to", to, "last j of the projection table (default n)");

    CoxeterArgs int_args;
    IntervalArgs ia;
    auto* itv = app.add_subcommand("interval", "operations in the interval [1,c]");
    int_args.add(itv);
    itv->add_option("op", ia.op, "member|leq|rank|meet|join|krew|covers|decode")
        ->required()
        ->check(CLI::IsMember({"member", "leq", "rank", "meet", "join", "krew", "covers", "decode"}));
    itv->add_option("operands", ia.operands, "elements: cycle notation, {json} or @file");
    itv->add_option("--bound", ia.bound, "generator lift bound for covers (default from AFFNC_WINDING_BOUND, else max lift + n)");

    std::string suite = "all";
    cli::SuiteOptions sopt;
    auto* ver = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> choices = cli::suite_names();
    choices.push_back("all");
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(choices));
    ver->add_option("--n", sopt.n, "rank parameter")->check(CLI::Range(2, 8));
    ver->add_option("--seed", sopt.seed, "random seed (default 0)");
    auto* wb = ver->add_option("--winding-bound", sopt.winding_bound, "winding bound (default AFFNC_WINDING_BOUND or 2)");
    ver->add_option("--samples", sopt.samples, "samples per randomized suite")->check(CLI::PositiveNumber);

    CoxeterArgs ren_args;
    std::string element, out;
    auto* ren = app.add_subcommand("render", "write the diagram of an element as SVG");
    ren_args.add(ren);
    ren->add_option("element", element, "element (default: the Coxeter element)");
    ren->add_option("--out", out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*cox) {
            if (to == 0) to = cox_args.n;
            return cmd_coxeter(cox_args, from, to);
        }
        if (*itv) return int_args.type_c() ? cmd_interval_C(int_args, ia) : cmd_interval_A(int_args, ia);
        if (*ver) {
            if (wb->count() == 0)
                if (auto w = env_winding_bound()) sopt.winding_bound = *w;
            return cmd_verify(suite, sopt);
        }
        if (*ren) return cmd_render(ren_args, element, out);
    } catch (const std::exception& e) {
        emit({{"error", e.what()}});
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
