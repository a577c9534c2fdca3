#include "kblocked/svg.hpp"

#include "kblocked/error.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace kblocked {

namespace {

constexpr std::array<const char*, 12> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                                   "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000", "#aec7e8"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string render_svg(const ColouredPointSet& set, const SvgOptions& options)
{
    if (set.dim() != 2) throw PreconditionError("SVG export needs a planar configuration");

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        double x = set.config()[i][0].to_double(), y = set.config()[i][1].to_double();
        if (i == 0) {
            min_x = max_x = x;
            min_y = max_y = y;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.05 * std::min(options.width, options.height);
    const double scale = (std::min(options.width, options.height) - 2 * margin) / span;
    const double off_x = (options.width - (max_x - min_x) * scale) / 2;
    const double off_y = (options.height - (max_y - min_y) * scale) / 2;
    auto sx = [&](const Rational& x) { return off_x + (x.to_double() - min_x) * scale; };
    auto sy = [&](const Rational& y) { return options.height - (off_y + (y.to_double() - min_y) * scale); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(options.width) + "\" height=\"" +
           fmt(options.height) + "\" viewBox=\"0 0 " + fmt(options.width) + " " + fmt(options.height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(options.width) + "\" height=\"" + fmt(options.height) +
           "\" fill=\"#ffffff\"/>\n";

    const auto graph = visibility_graph(set.config());
    out += "<g stroke-width=\"1\" fill=\"none\">\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (graph.adjacent(i, j)) continue;
            const auto& a = set.config()[i];
            const auto& b = set.config()[j];
            out += "<line x1=\"" + fmt(sx(a[0])) + "\" y1=\"" + fmt(sy(a[1])) + "\" x2=\"" + fmt(sx(b[0])) +
                   "\" y2=\"" + fmt(sy(b[1])) + "\" stroke=\"" + kPalette[set.colour(i) % kPalette.size()] + "\"/>\n";
        }
    }
    out += "</g>\n<g stroke=\"#000000\" stroke-width=\"0.5\">\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& p = set.config()[i];
        out += "<circle cx=\"" + fmt(sx(p[0])) + "\" cy=\"" + fmt(sy(p[1])) + "\" r=\"" + fmt(options.point_radius) +
               "\" fill=\"" + kPalette[set.colour(i) % kPalette.size()] + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace kblocked
