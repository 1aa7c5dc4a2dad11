#include "sfkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace sfkit {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", x);
    return buf;
}

struct Bounds {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    void include(double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    void margin(double frac) {
        double mx = frac * (x1 - x0), my = frac * (y1 - y0);
        x0 -= mx;
        x1 += mx;
        y0 -= my;
        y1 += my;
    }
};

class SvgDoc {
public:
    SvgDoc(const Bounds& b, double width) : b_(b) {
        double h = width * (b.y1 - b.y0) / (b.x1 - b.x0);
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                 "\" height=\"" + num(h) + "\" viewBox=\"" + num(b.x0) + " " + num(-b.y1) + " " +
                 num(b.x1 - b.x0) + " " + num(b.y1 - b.y0) + "\">\n";
        double sw = (b.x1 - b.x0) / 400.0;
        body_ += "<g fill=\"none\" stroke=\"#222\" stroke-width=\"" + num(sw) + "\">\n";
    }

    // All coordinates are mathematical (y up); emission flips the sign.
    void circle(double cx, double cy, double r, const char* cls = nullptr) {
        body_ += "<circle";
        if (cls) body_ += std::string(" class=\"") + cls + "\"";
        body_ += " cx=\"" + num(cx) + "\" cy=\"" + num(-cy) + "\" r=\"" + num(r) + "\"";
        if (cls) body_ += " fill=\"#c33\" stroke=\"none\"";
        body_ += "/>\n";
    }

    // Half plane below y = level (or above when up is true), clipped to the bounds.
    void half_plane(double level, bool up) {
        double yl = up ? level : b_.y0;
        double yh = up ? b_.y1 : level;
        body_ += "<rect x=\"" + num(b_.x0) + "\" y=\"" + num(-yh) + "\" width=\"" +
                 num(b_.x1 - b_.x0) + "\" height=\"" + num(yh - yl) +
                 "\" fill=\"#e8eef7\" stroke=\"#222\"/>\n";
    }

    void text(double x, double y, const std::string& t) {
        double fs = (b_.x1 - b_.x0) / 50.0;
        body_ += "<text x=\"" + num(x) + "\" y=\"" + num(-y) + "\" font-size=\"" + num(fs) +
                 "\" fill=\"#222\" stroke=\"none\">" + t + "</text>\n";
    }

    std::string finish() {
        body_ += "</g>\n</svg>\n";
        return body_;
    }

private:
    Bounds b_;
    std::string body_;
};

}  // namespace

std::string render_svg(const NormalizedFlower& fl, const SvgOptions& opts) {
    Bounds b;
    b.x0 = -1.5;
    b.x1 = 1.5;
    b.y0 = -3.0;
    b.y1 = 1.0;
    for (int j = 1; j < fl.n; ++j) {
        const Petal& p = fl.petals[j];
        if (p.half_plane) {
            b.include(0, -2.0 * p.level);
            continue;
        }
        b.include(p.t - p.r, -2.0 * p.r);
        b.include(p.t + p.r, 0.0);
    }
    b.margin(0.1);

    SvgDoc doc(b, opts.width);
    doc.half_plane(0.0, true);    // the center circle C
    doc.half_plane(-2.0, false);  // petal c_0
    for (int j = 1; j < fl.n; ++j) {
        const Petal& p = fl.petals[j];
        if (p.half_plane)
            doc.half_plane(-2.0 * p.level, false);
        else
            doc.circle(p.t, -p.r, p.r);
    }
    if (opts.dots) {
        double dr = (b.x1 - b.x0) / 200.0;
        // Spoke tangencies on the center line.
        for (int j = 1; j < fl.n; ++j)
            if (!fl.petals[j].half_plane) doc.circle(fl.petals[j].t, 0.0, dr, "dot");
        // Consecutive petal-petal tangencies.
        for (int j = 0; j < fl.n; ++j) {
            try {
                ExtPoint t = tangency_point(fl.petal_circle(j), fl.petal_circle(j + 1));
                if (!t.is_infinity()) doc.circle(t.value().real(), t.value().imag(), dr, "dot");
            } catch (const NotTangent&) {
                // Open or inconsistent chains render without that dot.
            }
        }
    }
    if (opts.annotate) {
        for (int j = 1; j < fl.n; ++j) {
            if (fl.petals[j].half_plane) continue;
            char lab[64];
            std::snprintf(lab, sizeof lab, "t%d=%.4g", j, fl.petals[j].t);
            doc.text(fl.petals[j].t, 0.15, lab);
            std::snprintf(lab, sizeof lab, "r%d=%.4g", j, fl.petals[j].r);
            doc.text(fl.petals[j].t, -2.0 * fl.petals[j].r - 0.25, lab);
        }
    }
    return doc.finish();
}

std::string render_svg(const PackingLayout& layout, const SvgOptions& opts) {
    constexpr double cap = 1e4;
    Bounds b;
    bool first = true;
    for (const GenCircle& c : layout.vertex_circle) {
        if (c.is_line) continue;
        if (std::abs(c.center) + c.radius > cap) continue;
        if (first) {
            b.x0 = b.x1 = c.center.real();
            b.y0 = b.y1 = c.center.imag();
            first = false;
        }
        b.include(c.center.real() - c.radius, c.center.imag() - c.radius);
        b.include(c.center.real() + c.radius, c.center.imag() + c.radius);
    }
    b.margin(0.1);

    SvgDoc doc(b, opts.width);
    for (const GenCircle& c : layout.vertex_circle) {
        if (c.is_line || std::abs(c.center) + c.radius > cap) continue;
        doc.circle(c.center.real(), c.center.imag(), c.radius);
    }
    if (opts.dots) {
        double dr = (b.x1 - b.x0) / 300.0;
        for (std::size_t e = 0; e < layout.K.edges.size(); ++e) {
            const auto& ei = layout.K.edges[e];
            const GenCircle& c1 = layout.vertex_circle[ei.v];
            const GenCircle& c2 = layout.vertex_circle[ei.w];
            try {
                ExtPoint t = tangency_point(c1, c2, 1e-5);
                if (!t.is_infinity()) doc.circle(t.value().real(), t.value().imag(), dr, "dot");
            } catch (const NotTangent&) {
                // Representative circles across a holonomy seam need not touch.
            }
        }
    }
    return doc.finish();
}

}  // namespace sfkit
