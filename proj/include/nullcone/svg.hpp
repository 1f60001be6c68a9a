#pragma once

// Weight/root diagrams for rank 1 and 2. Exact data is converted to doubles
// here and nowhere else. Coordinates are embedded isometrically through the
// Cholesky factor of the Gram matrix, so angles and lengths look right.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/report.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone {

namespace svg_detail {

using Pt = std::array<double, 2>;

inline std::string num(double x) {
    if (std::abs(x) < 5e-7) x = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

// Upper-triangular U with G = U^T U; the image of x is U x.
struct Embedding {
    double u00 = 1, u01 = 0, u11 = 1;

    explicit Embedding(const Matrix& g) {
        const double a = g[0][0].get_d(), b = g[0][1].get_d(), c = g[1][1].get_d();
        u00 = std::sqrt(a);
        u01 = b / u00;
        u11 = std::sqrt(c - u01 * u01);
    }
    Pt point(const QVec& x) const {
        const double x0 = x[0].get_d(), x1 = x[1].get_d();
        return {u00 * x0 + u01 * x1, u11 * x1};
    }
    // <l, mu> = n . point(mu) with n = U^{-T} G l = U l.
    Pt normal(const QVec& l) const { return point(l); }
};

// Part of {y : n.y = 1} inside the box [lo, hi]^2.
inline std::optional<std::pair<Pt, Pt>> clip_line(const Pt& n, double lo, double hi) {
    std::vector<Pt> hits;
    auto add = [&](Pt p) {
        for (const auto& q : hits)
            if (std::abs(q[0] - p[0]) < 1e-9 && std::abs(q[1] - p[1]) < 1e-9) return;
        hits.push_back(p);
    };
    for (double x : {lo, hi})
        if (std::abs(n[1]) > 1e-12) {
            double y = (1 - n[0] * x) / n[1];
            if (y >= lo - 1e-9 && y <= hi + 1e-9) add({x, y});
        }
    for (double y : {lo, hi})
        if (std::abs(n[0]) > 1e-12) {
            double x = (1 - n[1] * y) / n[0];
            if (x >= lo - 1e-9 && x <= hi + 1e-9) add({x, y});
        }
    if (hits.size() < 2) return std::nullopt;
    return std::make_pair(hits[0], hits[1]);
}

inline const char* candidate_class(bool stratifying) {
    return stratifying ? "candidate stratifying" : "candidate excluded";
}

inline const char* style_block() {
    return "<style>\n"
           ".weight{fill:#222;stroke:none}\n"
           ".root{fill:none;stroke:#222;stroke-width:1.5}\n"
           ".candidate{stroke-width:1.2}\n"
           ".stratifying{stroke:#1f5fa8}\n"
           ".excluded{stroke:#b03030;stroke-dasharray:6 4}\n"
           ".axis{stroke:#999;stroke-width:1}\n"
           "text{font-family:sans-serif;font-size:12px}\n"
           "</style>\n";
}

}  // namespace svg_detail

/// SVG diagram of weights, roots and candidate hyperplanes {l = 1}.
inline std::string render_svg(const ValidatedProblem& p, const Report& report) {
    using namespace svg_detail;
    if (p.rank() > 2)
        throw InputError("SVG output needs rank <= 2, problem has rank " + std::to_string(p.rank()));
    std::ostringstream os;
    const double size = 480, pad = 40;

    if (p.rank() == 1) {
        const double s = std::sqrt(p.space().gram()[0][0].get_d());
        double extent = 1;
        for (const auto& w : p.weights()) extent = std::max(extent, std::abs(w.v[0].get_d() * s));
        for (const auto& a : p.roots()) extent = std::max(extent, std::abs(a[0].get_d() * s));
        extent *= 1.15;
        const double width = 2 * size, height = 160, mid = height / 2;
        auto X = [&](double t) { return width / 2 + t / extent * (width / 2 - pad); };
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
           << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
           << style_block();
        os << "<line class=\"axis\" x1=\"" << num(pad / 2) << "\" y1=\"" << num(mid) << "\" x2=\""
           << num(width - pad / 2) << "\" y2=\"" << num(mid) << "\"/>\n";
        for (std::size_t i = 0; i < report.candidates.size(); ++i) {
            const auto& c = report.candidates[i];
            // {l = 1} is the single point mu = 1 / (g l).
            const double x = X(1 / (s * s * c.l[0].get_d()) * s);
            os << "<line class=\"" << candidate_class(c.stratifying) << "\" x1=\"" << num(x) << "\" y1=\""
               << num(mid - 40) << "\" x2=\"" << num(x) << "\" y2=\"" << num(mid + 40) << "\"/>\n"
               << "<text class=\"label\" x=\"" << num(x + 3) << "\" y=\"" << num(mid - 44) << "\">l" << i + 1
               << "</text>\n";
        }
        for (const auto& a : p.roots())
            os << "<circle class=\"root\" cx=\"" << num(X(a[0].get_d() * s)) << "\" cy=\"" << num(mid)
               << "\" r=\"7\"/>\n";
        for (const auto& w : p.weights()) {
            const double x = X(w.v[0].get_d() * s);
            os << "<circle class=\"weight\" cx=\"" << num(x) << "\" cy=\"" << num(mid) << "\" r=\"4\"/>\n"
               << "<text class=\"mult\" x=\"" << num(x - 4) << "\" y=\"" << num(mid + 22) << "\">" << w.mult
               << "</text>\n"
               << "<text class=\"coord\" x=\"" << num(x - 4) << "\" y=\"" << num(mid + 38) << "\">"
               << escape(to_string(w.v[0])) << "</text>\n";
        }
        os << "</svg>\n";
        return os.str();
    }

    const Embedding emb(p.space().gram());
    double extent = 1;
    for (const auto& w : p.weights()) {
        auto q = emb.point(w.v);
        extent = std::max({extent, std::abs(q[0]), std::abs(q[1])});
    }
    for (const auto& a : p.roots()) {
        auto q = emb.point(a);
        extent = std::max({extent, std::abs(q[0]), std::abs(q[1])});
    }
    extent *= 1.2;
    const double scale = (size / 2 - pad) / extent;
    auto X = [&](double x) { return size / 2 + x * scale; };
    auto Y = [&](double y) { return size / 2 - y * scale; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
       << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n"
       << style_block();
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const auto& c = report.candidates[i];
        auto seg = clip_line(emb.normal(c.l), -extent, extent);
        if (!seg) continue;
        auto [a, b] = *seg;
        os << "<line class=\"" << candidate_class(c.stratifying) << "\" x1=\"" << num(X(a[0])) << "\" y1=\""
           << num(Y(a[1])) << "\" x2=\"" << num(X(b[0])) << "\" y2=\"" << num(Y(b[1])) << "\"/>\n";
        // label near the foot of the perpendicular
        auto n = emb.normal(c.l);
        const double nn = n[0] * n[0] + n[1] * n[1];
        os << "<text class=\"label\" x=\"" << num(X(n[0] / nn) + 4) << "\" y=\"" << num(Y(n[1] / nn) - 4)
           << "\">l" << i + 1 << "</text>\n";
    }
    for (const auto& a : p.roots()) {
        auto q = emb.point(a);
        os << "<circle class=\"root\" cx=\"" << num(X(q[0])) << "\" cy=\"" << num(Y(q[1])) << "\" r=\"7\"/>\n";
    }
    for (const auto& w : p.weights()) {
        auto q = emb.point(w.v);
        os << "<circle class=\"weight\" cx=\"" << num(X(q[0])) << "\" cy=\"" << num(Y(q[1])) << "\" r=\"4\"/>\n";
        if (w.mult != 1)
            os << "<text class=\"mult\" x=\"" << num(X(q[0]) + 6) << "\" y=\"" << num(Y(q[1]) + 14) << "\">"
               << w.mult << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace nullcone
