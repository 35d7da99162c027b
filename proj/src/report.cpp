#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "levgraph/bench.hpp"
#include "levgraph/error.hpp"

namespace levgraph {

namespace {

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error("failed to write " + path.string());
}

struct Series {
    const char* name;
    const char* color;
};

constexpr Series kBuild{"leveled build", "#1f77b4"};
constexpr Series kLeveled{"leveled query", "#2ca02c"};
constexpr Series kBaseline{"baseline query", "#d62728"};

}  // namespace

std::string bench_csv(const BenchTable& table) {
    std::ostringstream out;
    out << "e_count,leveled_build_ms,leveled_query_ms,baseline_query_ms,speedup\n";
    for (const auto& r : table.rows) {
        out << r.e_count << ',' << fixed2(r.leveled_build_ms) << ',' << fixed2(r.leveled_query_ms) << ','
            << (r.baseline_query_ms ? fixed2(*r.baseline_query_ms) : "TIMEOUT") << ','
            << (r.speedup ? fixed2(*r.speedup) : "") << '\n';
    }
    return out.str();
}

std::string latency_svg(const BenchTable& table) {
    constexpr double kWidth = 720, kHeight = 440;
    constexpr double kLeft = 70, kRight = 160, kTop = 30, kBottom = 50;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double ceiling = static_cast<double>(table.config.timeout.count());

    double lo = ceiling, hi = ceiling;
    for (const auto& r : table.rows) {
        for (double v : {r.leveled_build_ms, r.leveled_query_ms, r.baseline_query_ms.value_or(ceiling)}) {
            if (v > 0) lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double y_min = std::floor(std::log10(std::max(lo, 1e-4)));
    const double y_max = std::max(std::ceil(std::log10(hi)), y_min + 1);

    double x_min = 0, x_max = 1;
    if (!table.rows.empty()) {
        x_min = static_cast<double>(table.rows.front().e_count);
        x_max = x_min;
        for (const auto& r : table.rows) {
            x_min = std::min(x_min, static_cast<double>(r.e_count));
            x_max = std::max(x_max, static_cast<double>(r.e_count));
        }
        if (x_max == x_min) x_max = x_min + 1;
    }
    auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double ms) {
        const double l = std::log10(std::max(ms, std::pow(10.0, y_min)));
        return kTop + (y_max - l) / (y_max - y_min) * plot_h;
    };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << kLeft << "\" y=\"18\">Per-run average latency (ms, log scale)</text>\n";
    s << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(y_min); d <= static_cast<int>(y_max); ++d) {
        const double y = py(std::pow(10.0, d));
        s << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << y << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << y
          << "\" stroke=\"#ddd\"/>\n";
        s << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }
    for (const auto& r : table.rows) {
        const double x = px(static_cast<double>(r.e_count));
        s << "<text x=\"" << x << "\" y=\"" << kTop + plot_h + 16 << "\" text-anchor=\"middle\">" << r.e_count
          << "</text>\n";
    }
    s << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">|E|</text>\n";
    s << "<line x1=\"" << kLeft << "\" y1=\"" << py(ceiling) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << py(ceiling) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";

    auto polyline = [&](const Series& series, auto value_of) {
        std::ostringstream pts;
        for (const auto& r : table.rows) {
            pts << px(static_cast<double>(r.e_count)) << ',' << py(value_of(r)) << ' ';
        }
        if (!table.rows.empty()) {
            s << "<polyline fill=\"none\" stroke=\"" << series.color << "\" stroke-width=\"1.5\" points=\""
              << pts.str() << "\"/>\n";
        }
        for (const auto& r : table.rows) {
            s << "<circle cx=\"" << px(static_cast<double>(r.e_count)) << "\" cy=\"" << py(value_of(r))
              << "\" r=\"3\" fill=\"" << series.color << "\"/>\n";
        }
    };
    polyline(kBuild, [](const BenchRow& r) { return r.leveled_build_ms; });
    polyline(kLeveled, [](const BenchRow& r) { return r.leveled_query_ms; });

    std::ostringstream pts;
    for (const auto& r : table.rows) {
        pts << px(static_cast<double>(r.e_count)) << ',' << py(r.baseline_query_ms.value_or(ceiling)) << ' ';
    }
    if (!table.rows.empty()) {
        s << "<polyline fill=\"none\" stroke=\"" << kBaseline.color << "\" stroke-width=\"1.5\" points=\"" << pts.str()
          << "\"/>\n";
    }
    for (const auto& r : table.rows) {
        const double x = px(static_cast<double>(r.e_count));
        if (r.baseline_query_ms) {
            s << "<circle cx=\"" << x << "\" cy=\"" << py(*r.baseline_query_ms) << "\" r=\"3\" fill=\""
              << kBaseline.color << "\"/>\n";
        } else {
            const double y = py(ceiling);
            s << "<path class=\"timeout\" d=\"M" << x - 4 << ',' << y - 4 << " L" << x + 4 << ',' << y + 4 << " M"
              << x - 4 << ',' << y + 4 << " L" << x + 4 << ',' << y - 4 << "\" stroke=\"" << kBaseline.color
              << "\" stroke-width=\"2\"/>\n";
        }
    }

    double ly = kTop + 10;
    for (const auto* series : {&kBuild, &kLeveled, &kBaseline}) {
        s << "<line x1=\"" << kLeft + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + plot_w + 35
          << "\" y2=\"" << ly << "\" stroke=\"" << series->color << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << kLeft + plot_w + 40 << "\" y=\"" << ly + 4 << "\">" << series->name << "</text>\n";
        ly += 18;
    }
    s << "<text x=\"" << kLeft + plot_w + 15 << "\" y=\"" << ly + 4 << "\">x = timeout</text>\n";
    s << "</svg>\n";
    return s.str();
}

void emit_report(const BenchTable& table, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "bench.csv", bench_csv(table));
    write_file(out_dir / "latency.svg", latency_svg(table));
}

}  // namespace levgraph
