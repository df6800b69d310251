#pragma once

// Deterministic SVG rendering of planar frontiers: the primal staircase with
// its generator dots, plus optional dual-objective overlays. Output bytes
// depend only on the input, so renders can be compared verbatim.

#include <cstdio>
#include <string>
#include <vector>

#include "setopt/duality.hpp"

namespace setopt {

namespace detail {

struct SvgCanvas {
    double lo, hi;
    static constexpr double size = 640.0;
    static constexpr double margin = 40.0;

    double sx(double x) const { return margin + (x - lo) / (hi - lo) * (size - 2 * margin); }
    double sy(double y) const
    {
        return size - margin - (y - lo) / (hi - lo) * (size - 2 * margin);
    }
};

inline std::string fmt2(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Boundary polyline of a proper inf-frontier at q = 2: entry ray along the
// second cone generator, staircase through the join corners, exit ray along
// the first generator. Rays are clipped to the box.
inline std::vector<std::pair<double, double>> staircase_polyline(const Frontier& s, double lo,
                                                                 double hi)
{
    std::vector<std::pair<RVec, RVec>> pts;  // (z, y)
    for (size_t i = 0; i < s.generators().size(); ++i)
        pts.emplace_back(s.generator_coords()[i], s.generators()[i]);
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first(0) < b.first(0); });

    const RMat& gen = s.cone()->generators();
    auto as_xy = [](const RVec& v) {
        return std::pair<double, double>(static_cast<double>(v(0)), static_cast<double>(v(1)));
    };
    auto clip_ray = [&](const RVec& base, const RVec& dir) -> std::pair<double, double> {
        // Largest t with base + t dir still inside [lo,hi]^2.
        double t = 1e18;
        for (int i = 0; i < 2; ++i) {
            const double d = static_cast<double>(dir(i));
            const double b = static_cast<double>(base(i));
            if (d > 0) t = std::min(t, (hi - b) / d);
            if (d < 0) t = std::min(t, (lo - b) / d);
        }
        t = std::max(t, 0.0);
        return {static_cast<double>(base(0)) + t * static_cast<double>(dir(0)),
                static_cast<double>(base(1)) + t * static_cast<double>(dir(1))};
    };

    std::vector<std::pair<double, double>> line;
    line.push_back(clip_ray(pts.front().second, gen.col(1)));
    line.push_back(as_xy(pts.front().second));
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const RVec corner = gen * RVec(pts[i].first.cwiseMax(pts[i + 1].first));
        line.push_back(as_xy(corner));
        line.push_back(as_xy(pts[i + 1].second));
    }
    line.push_back(clip_ray(pts.back().second, gen.col(0)));
    return line;
}

inline void append_polyline(std::string& out, const SvgCanvas& cv,
                            const std::vector<std::pair<double, double>>& line,
                            const std::string& color, const std::string& dash)
{
    out += "  <polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"";
    if (!dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
    out += " points=\"";
    for (size_t i = 0; i < line.size(); ++i) {
        if (i) out += " ";
        out += fmt2(cv.sx(line[i].first)) + "," + fmt2(cv.sy(line[i].second));
    }
    out += "\"/>\n";
}

}  // namespace detail

// Overlay: a labelled dual objective to draw next to the primal frontier.
struct SvgOverlay {
    std::string label;
    Frontier frontier;
};

inline std::string render_staircase_svg(const Instance& inst, double box_lo, double box_hi,
                                        const std::vector<SvgOverlay>& overlays = {})
{
    if (inst.q() != 2) throw InputError("svg rendering requires q=2");
    if (!(box_lo < box_hi)) throw InputError("svg: box lo < hi required");
    const detail::SvgCanvas cv{box_lo, box_hi};

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\">\n";
    out += "  <rect x=\"40\" y=\"40\" width=\"560\" height=\"560\" fill=\"white\" "
           "stroke=\"#888\"/>\n";
    if (box_lo < 0 && box_hi > 0) {
        out += "  <line x1=\"" + detail::fmt2(cv.sx(0)) + "\" y1=\"40\" x2=\"" +
               detail::fmt2(cv.sx(0)) + "\" y2=\"600\" stroke=\"#ddd\"/>\n";
        out += "  <line x1=\"40\" y1=\"" + detail::fmt2(cv.sy(0)) + "\" x2=\"600\" y2=\"" +
               detail::fmt2(cv.sy(0)) + "\" stroke=\"#ddd\"/>\n";
    }

    const Frontier primal = primal_value(inst);
    const char* const overlay_colors[] = {"#c22", "#28a", "#a2a", "#888"};
    size_t color_idx = 0;
    for (const auto& ov : overlays) {
        if (!ov.frontier.is_proper()) continue;
        const std::string color = overlay_colors[color_idx++ % 4];
        detail::append_polyline(out, cv, detail::staircase_polyline(ov.frontier, box_lo, box_hi),
                                color, "6,3");
    }

    if (primal.is_proper()) {
        detail::append_polyline(out, cv, detail::staircase_polyline(primal, box_lo, box_hi),
                                "#111", "");
        for (const auto& g : primal.generators()) {
            out += "  <circle cx=\"" + detail::fmt2(cv.sx(static_cast<double>(g(0)))) +
                   "\" cy=\"" + detail::fmt2(cv.sy(static_cast<double>(g(1)))) +
                   "\" r=\"4\" fill=\"#111\"/>\n";
        }
    }
    // All objective points, feasible decisions filled, infeasible hollow.
    const auto feas = feasible_set(inst);
    for (const auto& d : inst.decisions()) {
        const bool feasible = std::find(feas.begin(), feas.end(), d.name) != feas.end();
        for (const auto& f : d.objective_points) {
            out += "  <circle cx=\"" + detail::fmt2(cv.sx(static_cast<double>(f(0)))) +
                   "\" cy=\"" + detail::fmt2(cv.sy(static_cast<double>(f(1)))) + "\" r=\"3\" " +
                   (feasible ? "fill=\"#2a2\"" : "fill=\"none\" stroke=\"#2a2\"") + "/>\n";
        }
    }
    out += "  <text x=\"44\" y=\"32\" font-family=\"monospace\" font-size=\"14\">" +
           primal.text() + "</text>\n";
    std::string legend;
    color_idx = 0;
    for (const auto& ov : overlays) {
        if (!ov.frontier.is_proper()) continue;
        legend += (legend.empty() ? "" : "  ") + ov.label;
        ++color_idx;
    }
    if (!legend.empty())
        out += "  <text x=\"44\" y=\"620\" font-family=\"monospace\" font-size=\"12\">" + legend +
               "</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace setopt
