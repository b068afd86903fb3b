#include "saenum/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <ostream>

#include <nlohmann/json.hpp>

namespace sae {

namespace {

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

void write_coarray_csv(std::ostream& out, const Coarray& coarray) {
    out << "lag,eta,pairs\n";
    for (const auto& [lag, pairs] : coarray.lag_pairs) {
        out << lag << ',' << pairs.size() << ',';
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) out << ' ';
            out << '(' << pairs[i].first << ';' << pairs[i].second << ')';
        }
        out << '\n';
    }
}

void write_periodogram_csv(std::ostream& out, const Periodogram& periodogram) {
    out << "u,value\n";
    for (int g = 0; g < periodogram.grid_size(); ++g)
        out << fmt(periodogram.u(g)) << ',' << fmt(periodogram.value(g)) << '\n';
}

void write_correlation_csv(std::ostream& out, const CorrelationVector& r) {
    out << "k,re,im\n";
    const int p = r.half_extent;
    for (int k = -(p - 1); k <= p - 1; ++k)
        out << k << ',' << fmt(r.at(k).real()) << ',' << fmt(r.at(k).imag()) << '\n';
}

void write_acm_csv(std::ostream& out, const AugmentedCovariance& acm) {
    for (int i = 0; i < acm.matrix.rows(); ++i) {
        for (int j = 0; j < acm.matrix.cols(); ++j) {
            if (j) out << ',';
            out << fmt(acm.matrix(i, j).real()) << ',' << fmt(acm.matrix(i, j).imag());
        }
        out << '\n';
    }
}

void write_curve_csv(std::ostream& out, const CriterionCurve& curve) {
    out << "q,value,is_argmin\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        const int q = curve.q_begin + static_cast<int>(i);
        out << q << ',';
        if (std::isinf(curve.values[i])) out << "inf";
        else out << fmt(curve.values[i]);
        out << ',' << (q == curve.argmin_q ? 1 : 0) << '\n';
    }
}

void write_detection_csv(std::ostream& out, const DetectionStats& stats, int combo_index) {
    out << "grid_value,p_detect,ci_lo,ci_hi,trials\n";
    for (std::size_t g = 0; g < stats.grid.size(); ++g) {
        const CellStats& cell = stats.cells[g][combo_index];
        out << fmt(stats.grid[g]) << ',' << fmt(cell.p_detect, "%.6f") << ','
            << fmt(cell.ci.lo, "%.6f") << ',' << fmt(cell.ci.hi, "%.6f") << ','
            << cell.trials << '\n';
    }
}

void write_detection_svg(std::ostream& out, const DetectionStats& stats) {
    static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22"};
    const double width = 800, height = 500;
    const double ml = 70, mr = 190, mt = 40, mb = 60;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;
    const double x_lo = stats.grid.front(), x_hi = stats.grid.back();
    const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;

    auto px = [&](double x) { return ml + (x - x_lo) / x_span * plot_w; };
    auto py = [&](double p) { return mt + (1.0 - p) * plot_h; };

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
        << height << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << width / 2 << "' y='24' text-anchor='middle' font-size='16'>"
        << stats.sweep_name << ": detection probability vs " << to_string(stats.parameter)
        << "</text>\n";
    // axes and gridlines
    for (int i = 0; i <= 5; ++i) {
        const double p = i / 5.0;
        out << "<line x1='" << ml << "' y1='" << py(p) << "' x2='" << ml + plot_w
            << "' y2='" << py(p) << "' stroke='#dddddd'/>\n";
        out << "<text x='" << ml - 8 << "' y='" << py(p) + 4
            << "' text-anchor='end' font-size='12'>" << fmt(p, "%.1f") << "</text>\n";
    }
    const int x_ticks = std::min<int>(10, static_cast<int>(stats.grid.size()) - 1);
    for (int i = 0; i <= std::max(1, x_ticks); ++i) {
        const double x = x_lo + x_span * i / std::max(1, x_ticks);
        out << "<text x='" << px(x) << "' y='" << mt + plot_h + 20
            << "' text-anchor='middle' font-size='12'>" << fmt(x, "%g") << "</text>\n";
    }
    out << "<rect x='" << ml << "' y='" << mt << "' width='" << plot_w << "' height='"
        << plot_h << "' fill='none' stroke='black'/>\n";

    for (std::size_t c = 0; c < stats.combos.size(); ++c) {
        const char* color = kColors[c % std::size(kColors)];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='2' points='";
        for (std::size_t g = 0; g < stats.grid.size(); ++g)
            out << px(stats.grid[g]) << ',' << py(stats.cells[g][c].p_detect) << ' ';
        out << "'/>\n";
        const std::string label = to_string(stats.combos[c].first) + "+" +
                                  to_string(stats.combos[c].second);
        const double ly = mt + 16 + 18 * static_cast<double>(c);
        out << "<line x1='" << ml + plot_w + 10 << "' y1='" << ly - 4 << "' x2='"
            << ml + plot_w + 34 << "' y2='" << ly - 4 << "' stroke='" << color
            << "' stroke-width='2'/>\n";
        out << "<text x='" << ml + plot_w + 40 << "' y='" << ly
            << "' font-size='12'>" << label << "</text>\n";
    }
    out << "</svg>\n";
}

std::string to_json(const EnumerationResult& result, bool include_bin_curves) {
    nlohmann::json j;
    j["strategy"] = to_string(result.strategy);
    j["criterion"] = to_string(result.criterion);
    j["estimate"] = result.estimate;
    j["effective_snapshots"] = result.effective_snapshots;

    auto curve_json = [](const CriterionCurve& curve) {
        nlohmann::json c;
        c["q_begin"] = curve.q_begin;
        c["argmin_q"] = curve.argmin_q;
        c["values"] = curve.values;  // non-finite values serialize as null
        return c;
    };
    j["curve"] = curve_json(result.curve);
    if (include_bin_curves && !result.bin_curves.empty()) {
        nlohmann::json bins = nlohmann::json::array();
        for (const CriterionCurve& c : result.bin_curves) bins.push_back(curve_json(c));
        j["bin_curves"] = bins;
    }
    return j.dump(2);
}

}  // namespace sae
