#include "affnc/cycles_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace affnc {

namespace {

struct Token {
    enum Kind { Open, Close, Ellipsis, Number, Suffix, End } kind;
    Int value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_space();
        if (pos_ >= s_.size()) return {Token::End};
        char ch = s_[pos_];
        if (ch == '(') { ++pos_; return {Token::Open}; }
        if (ch == ')') { ++pos_; return {Token::Close}; }
        if (ch == '_') {
            ++pos_;
            bool brace = pos_ < s_.size() && s_[pos_] == '{';
            if (brace) ++pos_;
            Int v = read_int();
            if (brace) {
                if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
                ++pos_;
            }
            return {Token::Suffix, v};
        }
        if (s_.compare(pos_, 3, "...") == 0) { pos_ += 3; return {Token::Ellipsis}; }
        if (s_.compare(pos_, 3, "⋯") == 0 || s_.compare(pos_, 3, "…") == 0) {
            pos_ += 3;
            return {Token::Ellipsis};
        }
        return {Token::Number, read_int()};
    }

    std::size_t mark() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cycle notation: " + what + " at offset " + std::to_string(pos_));
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ','))
            ++pos_;
    }

    Int read_int() {
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        } else if (s_.compare(pos_, 3, "−") == 0) {
            neg = true;
            pos_ += 3;
        }
        std::size_t start = pos_;
        Int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_) fail("expected an integer");
        return neg ? -v : v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

struct Assignments {
    Int n;
    std::map<Int, Int> window;  // residue -> window value
    std::map<Int, int> owner;   // residue -> cycle id

    void set(Int x, Int y, int id, bool mirror) {
        Int r = residue(x, n);
        Int v = y - (x - r);
        auto it = window.find(r);
        if (it != window.end()) {
            // a symmetric pair may list a self-negative class twice
            if (mirror && it->second == v) return;
            throw std::invalid_argument("cycle notation: residue " + std::to_string(r) + " repeated");
        }
        window[r] = v;
        owner[r] = id;
    }
};

void add_cycle(Assignments& a, const std::vector<Int>& entries, Int drift, int id, bool mirror) {
    std::vector<Int> res;
    for (Int x : entries) res.push_back(residue(x, a.n));
    std::sort(res.begin(), res.end());
    if (std::adjacent_find(res.begin(), res.end()) != res.end())
        throw std::invalid_argument("cycle notation: residue repeated inside a cycle");
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) a.set(entries[k], entries[k + 1], id, mirror);
    a.set(entries.back(), entries.front() + drift * a.n, id, mirror);
}

}  // namespace

std::vector<Int> canonical_class(std::vector<Int> cycle, Int n) {
    auto best = std::min_element(cycle.begin(), cycle.end(),
                                 [n](Int x, Int y) { return residue(x, n) < residue(y, n); });
    std::rotate(cycle.begin(), best, cycle.end());
    Int t = residue(cycle.front(), n) - cycle.front();
    for (Int& x : cycle) x += t;
    return cycle;
}

PeriodicPermutation parse_cycles(const std::string& text, Int n) {
    if (n <= 0) throw std::invalid_argument("period must be positive");
    Lexer lex(text);
    Assignments a{n, {}, {}};
    int id = 0;
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
        if (t.kind != Token::Open) lex.fail("expected '('");
        Token u = lex.next();
        bool pair = u.kind == Token::Open;
        if (pair) u = lex.next();
        bool infinite = false;
        std::vector<Int> entries;
        for (; u.kind != Token::Close; u = lex.next()) {
            if (u.kind == Token::Ellipsis) infinite = true;
            else if (u.kind == Token::Number) entries.push_back(u.value);
            else lex.fail("unexpected token inside a cycle");
        }
        if (pair && lex.next().kind != Token::Close) lex.fail("expected '))'");
        std::size_t before = lex.mark();
        Token s = lex.next();
        if (s.kind != Token::Suffix) {
            lex.reset(before);
        } else {
            if (s.value != n)
                throw std::invalid_argument("cycle notation: suffix " + std::to_string(s.value) +
                                            " does not match period " + std::to_string(n));
        }
        if (entries.empty()) continue;

        Int drift = 0;
        if (infinite) {
            if (entries.size() >= 2 && residue(entries.back(), n) == residue(entries.front(), n)) {
                drift = (entries.back() - entries.front()) / n;
                entries.pop_back();
                if (drift == 0) throw std::invalid_argument("cycle notation: drift inconsistency");
            } else if (entries.size() >= 2) {
                bool inc = true, dec = true;
                for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
                    inc = inc && entries[k] < entries[k + 1];
                    dec = dec && entries[k] > entries[k + 1];
                }
                if (inc && entries.back() < entries.front() + n) drift = 1;
                else if (dec && entries.back() > entries.front() - n) drift = -1;
                else throw std::invalid_argument("cycle notation: drift inconsistency");
            } else {
                throw std::invalid_argument("cycle notation: infinite cycle needs its closing entry");
            }
        }
        add_cycle(a, entries, drift, id++, false);
        if (pair) {
            std::vector<Int> neg;
            for (Int x : entries) neg.push_back(-x);
            add_cycle(a, neg, -drift, id++, true);
        }
    }
    std::vector<Int> w(n);
    for (Int r = 1; r <= n; ++r) {
        auto it = a.window.find(r);
        w[r - 1] = it == a.window.end() ? r : it->second;
    }
    try {
        return PeriodicPermutation(n, std::move(w));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cycle notation: cycles do not define a bijection");
    }
}

static void print_infinite(std::ostringstream& os, const InfiniteCycle& c, Int n) {
    os << "(...";
    for (Int x : c.entries) os << ' ' << x;
    os << ' ' << c.entries.front() + c.drift * n << " ...)";
}

static void print_finite(std::ostringstream& os, const std::vector<Int>& c) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
}

std::string print_cycles(const PeriodicPermutation& p) {
    auto d = decompose(p);
    std::ostringstream os;
    bool first = true;
    for (const auto& c : d.infinite_cycles) {
        if (!first) os << ' ';
        print_infinite(os, c, p.n());
        first = false;
    }
    for (const auto& c : d.finite_classes) {
        if (c.size() < 2) continue;
        if (!first) os << ' ';
        print_finite(os, c);
        os << '_' << p.n();
        first = false;
    }
    if (first) os << "()_" << p.n();
    return os.str();
}

std::string print_cycles_signed(const PeriodicPermutation& p) {
    const Int n2 = p.n();
    if (n2 % 2 != 0) return print_cycles(p);
    for (Int i = -n2; i <= n2; ++i)
        if (-p(-i) != p(i)) return print_cycles(p);
    auto d = decompose(p);
    std::ostringstream os;
    bool first = true;
    for (const auto& c : d.infinite_cycles) {
        if (c.drift < 0) continue;  // the decreasing one is the negation of an increasing one
        if (!first) os << ' ';
        os << '(';
        print_infinite(os, c, n2);
        os << ')';
        first = false;
    }
    std::vector<std::vector<Int>> printed;
    for (const auto& c : d.finite_classes) {
        if (c.size() < 2) continue;
        std::vector<Int> neg;
        for (Int x : c) neg.push_back(-x);
        neg = canonical_class(neg, n2);
        if (std::find(printed.begin(), printed.end(), neg) != printed.end()) continue;
        printed.push_back(c);
        if (!first) os << ' ';
        bool self = canonical_class(c, n2) == neg;
        if (!self) os << '(';
        print_finite(os, c);
        if (!self) os << ')';
        os << '_' << n2;
        first = false;
    }
    if (first) os << "()_" << n2;
    return os.str();
}

std::string perm_to_json(const PeriodicPermutation& p) {
    nlohmann::json j;
    j["n"] = p.n();
    j["window"] = p.window();
    return j.dump();
}

PeriodicPermutation perm_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        return PeriodicPermutation(j.at("n").get<Int>(), j.at("window").get<std::vector<Int>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("permutation json: ") + e.what());
    }
}

}  // namespace affnc
