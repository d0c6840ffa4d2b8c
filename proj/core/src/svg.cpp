#include "affnc/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace affnc {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Layout {
    Int n;
    const CoxeterElement& c;
    const SvgOptions& opt;
    double cx, cy;

    // unwrapped clockwise angle of a lift; one full turn per n
    double angle(Int x) const { return -kPi / 2 + 2 * kPi * static_cast<double>(x - 1) / static_cast<double>(n); }
    double radius(Int x) const { return c.is_outer(x) ? opt.outer_radius : opt.inner_radius; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

void point(std::ostringstream& os, const Layout& L, double ang, double r, bool first) {
    os << (first ? "M" : "L") << fmt(L.cx + r * std::cos(ang)) << ',' << fmt(L.cy + r * std::sin(ang)) << ' ';
}

// boundary edge from lift x to lift y, interpolating angle and radius so windings stay visible;
// radius dips toward the middle of the annulus between boundary points
void edge(std::ostringstream& os, const Layout& L, Int x, Int y, bool first) {
    const int steps = 24;
    double a0 = L.angle(x), a1 = L.angle(y), r0 = L.radius(x), r1 = L.radius(y);
    double mid = (L.opt.outer_radius + L.opt.inner_radius) / 2;
    for (int s = 0; s <= steps; ++s) {
        if (s == 0 && !first) continue;
        double t = static_cast<double>(s) / steps;
        double r = (1 - t) * r0 + t * r1;
        double bend = 4 * t * (1 - t);
        r = (1 - 0.35 * bend) * r + 0.35 * bend * mid;
        point(os, L, (1 - t) * a0 + t * a1, r, s == 0);
    }
}

void ring(std::ostringstream& os, const Layout& L, const InfiniteCycle& rec) {
    const auto& e = rec.entries;
    for (std::size_t k = 0; k < e.size(); ++k) {
        Int next = k + 1 < e.size() ? e[k + 1] : e.front() + rec.drift * L.n;
        edge(os, L, e[k], next, k == 0);
    }
    os << "Z ";
}

void circle_path(std::ostringstream& os, const Layout& L, double r) {
    const int steps = 72;
    for (int s = 0; s < steps; ++s) point(os, L, 2 * kPi * s / steps, r, s == 0);
    os << "Z ";
}

}  // namespace

std::string render_svg(const AnnularDiagram& d, const CoxeterElement& c, const SvgOptions& opt) {
    const double margin = 30;
    const double size = 2 * (opt.outer_radius + margin);
    Layout L{d.n, c, opt, size / 2, size / 2};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size) << "\" height=\""
       << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
    os << "<circle class=\"boundary\" cx=\"" << fmt(L.cx) << "\" cy=\"" << fmt(L.cy) << "\" r=\""
       << fmt(opt.outer_radius) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    os << "<circle class=\"boundary\" cx=\"" << fmt(L.cx) << "\" cy=\"" << fmt(L.cy) << "\" r=\""
       << fmt(opt.inner_radius) << "\" fill=\"#eee\" stroke=\"#444\"/>\n";

    for (const auto& b : d.blocks) {
        if (b.kind == Block::Kind::Trivial) continue;
        std::ostringstream path;
        if (b.is_annular()) {
            if (!b.increasing.entries.empty()) ring(path, L, b.increasing);
            else circle_path(path, L, opt.outer_radius * 0.8);
            if (!b.decreasing.entries.empty()) ring(path, L, b.decreasing);
            else circle_path(path, L, opt.inner_radius * 1.2);
        } else {
            const auto& e = b.cycle;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (b.kind == Block::Kind::ArcOrSegment && k == 1) break;
                edge(path, L, e[k], e[(k + 1) % e.size()], k == 0);
            }
            if (b.kind == Block::Kind::Disk) path << "Z ";
        }
        std::string fill = b.kind == Block::Kind::ArcOrSegment ? "none" : "#9cc3e6";
        std::string data = path.str();
        if (!data.empty() && data.back() == ' ') data.pop_back();
        os << "<path class=\"block " << kind_name(b.kind) << "\" d=\"" << data << "\" fill=\"" << fill
           << "\" fill-opacity=\"0.6\" fill-rule=\"evenodd\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
    }

    for (Int i = 1; i <= d.n; ++i) {
        double a = L.angle(i), r = L.radius(i);
        os << "<circle class=\"point\" cx=\"" << fmt(L.cx + r * std::cos(a)) << "\" cy=\""
           << fmt(L.cy + r * std::sin(a)) << "\" r=\"3\" fill=\"#000\"/>\n";
        if (opt.labels) {
            double lr = c.is_outer(i) ? r + 14 : r - 12;
            os << "<text x=\"" << fmt(L.cx + lr * std::cos(a)) << "\" y=\"" << fmt(L.cy + lr * std::sin(a) + 4)
               << "\" font-size=\"11\" text-anchor=\"middle\">" << i << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace affnc
