#include "ccm/svg_chart.hpp"

#include <algorithm>
#include <cstdio>

#include "ccm/dataset_io.hpp"

namespace ccm {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 170.0;  // room for the legend
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

const char* kRefColor = "#8c8c8c";
const char* kFocusColor = "#3d74b8";

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string rate_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

void line(std::string& out, double x1, double y1, double x2, double y2, const char* color,
          bool dashed) {
    out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
    if (dashed) out += " stroke-dasharray=\"6,4\"";
    out += "/>\n";
}

void text(std::string& out, double x, double y, const std::string& s, const char* anchor) {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" " +
           "font-size=\"11\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
}

}  // namespace

GroupChart emit_group_chart(const StratifiedDataset& dataset, const DoTable& adjusted) {
    GroupChart chart;

    chart.csv = "group,cause,rate,weight\n";
    for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
        for (std::size_t ci = 0; ci < 2; ++ci) {
            chart.csv += dataset.groups()[gi].label + "," + dataset.causes()[ci] + "," +
                         format_full(dataset.rate(gi, ci)) + "," +
                         format_full(dataset.weight_given_cause(gi, ci)) + "\n";
        }
    }

    const JointTable pooled = pool(dataset);
    double y_max = std::max({pooled.p_y1_given_x0, pooled.p_y1_given_x1, adjusted.p_y1_do_x0,
                             adjusted.p_y1_do_x1});
    for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
        for (std::size_t ci = 0; ci < 2; ++ci) {
            y_max = std::max(y_max, dataset.rate(gi, ci));
        }
    }
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double base_y = kTop + plot_h;
    auto y_of = [&](double v) { return base_y - v / y_max * plot_h; };

    const std::size_t n_groups = dataset.group_count();
    const double slot_w = plot_w / static_cast<double>(n_groups);
    const double bar_w = slot_w / 3.0;

    std::string& svg = chart.svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
           "viewBox=\"0 0 800 400\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";

    // Bars, group-major then cause order.
    for (std::size_t gi = 0; gi < n_groups; ++gi) {
        const double slot_x = kLeft + slot_w * static_cast<double>(gi);
        for (std::size_t ci = 0; ci < 2; ++ci) {
            const double rate = dataset.rate(gi, ci);
            const double x = slot_x + slot_w / 6.0 + bar_w * static_cast<double>(ci);
            const double y = y_of(rate);
            svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bar_w) +
                   "\" height=\"" + num(base_y - y) + "\" fill=\"" +
                   (ci == 0 ? kRefColor : kFocusColor) + "\"/>\n";
        }
        text(svg, slot_x + slot_w / 2.0, base_y + 16.0, dataset.groups()[gi].label, "middle");
    }

    // Pooled (dashed) and do-adjusted (solid) markers per cause.
    line(svg, kLeft, y_of(pooled.p_y1_given_x0), kLeft + plot_w, y_of(pooled.p_y1_given_x0),
         kRefColor, true);
    line(svg, kLeft, y_of(pooled.p_y1_given_x1), kLeft + plot_w, y_of(pooled.p_y1_given_x1),
         kFocusColor, true);
    line(svg, kLeft, y_of(adjusted.p_y1_do_x0), kLeft + plot_w, y_of(adjusted.p_y1_do_x0),
         kRefColor, false);
    line(svg, kLeft, y_of(adjusted.p_y1_do_x1), kLeft + plot_w, y_of(adjusted.p_y1_do_x1),
         kFocusColor, false);

    // Axes and ticks.
    line(svg, kLeft, kTop, kLeft, base_y, "black", false);
    line(svg, kLeft, base_y, kLeft + plot_w, base_y, "black", false);
    for (int i = 0; i <= 4; ++i) {
        const double v = y_max * static_cast<double>(i) / 4.0;
        text(svg, kLeft - 6.0, y_of(v) + 4.0, rate_text(v), "end");
        line(svg, kLeft - 4.0, y_of(v), kLeft, y_of(v), "black", false);
    }

    // Legend.
    const double lx = kLeft + plot_w + 14.0;
    svg += "<rect x=\"" + num(lx) + "\" y=\"28.00\" width=\"12\" height=\"12\" fill=\"" +
           kRefColor + "\"/>\n";
    text(svg, lx + 18.0, 38.0, dataset.reference_cause() + " (reference)", "start");
    svg += "<rect x=\"" + num(lx) + "\" y=\"48.00\" width=\"12\" height=\"12\" fill=\"" +
           kFocusColor + "\"/>\n";
    text(svg, lx + 18.0, 58.0, dataset.focus_cause(), "start");
    line(svg, lx, 76.0, lx + 12.0, 76.0, "black", true);
    text(svg, lx + 18.0, 80.0, "P(" + dataset.outcome_label() + "|x)", "start");
    line(svg, lx, 96.0, lx + 12.0, 96.0, "black", false);
    text(svg, lx + 18.0, 100.0, "P(" + dataset.outcome_label() + "|do(x))", "start");

    svg += "</svg>\n";
    return chart;
}

}  // namespace ccm
