#include "ectopsis/svg_charts.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "ectopsis/rank_aggregator.hpp"
#include "files.hpp"
#include "text.hpp"

namespace ectopsis {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 40.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 80.0;
constexpr double kPlotWidth = kWidth - kLeft - kRight;
constexpr double kPlotHeight = kHeight - kTop - kBottom;

constexpr std::array<const char*, 8> kPalette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                                 "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::string s = fmt::format("{:.2f}", v);
  return s == "-0.00" ? "0.00" : s;
}

struct YScale {
  double lo;
  double hi;
  double operator()(double v) const { return kTop + kPlotHeight * (1.0 - (v - lo) / (hi - lo)); }
};

class Svg {
 public:
  explicit Svg(std::string_view title) {
    body_ += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        num(kWidth), num(kHeight));
    body_ += fmt::format("<title>{}</title>\n", escape(title));
    body_ += fmt::format("<rect x=\"0.00\" y=\"0.00\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", num(kWidth),
                         num(kHeight));
    text(kWidth / 2.0, 24.0, title, "middle", "font-size=\"16\"");
  }

  void line(double x1, double y1, double x2, double y2, std::string_view stroke, std::string_view extra = {}) {
    body_ += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"{}{}/>\n", num(x1), num(y1),
                         num(x2), num(y2), stroke, extra.empty() ? "" : " ", extra);
  }

  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view extra = {}) {
    body_ += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"{}{}/>\n", num(x), num(y),
                         num(w), num(h), fill, extra.empty() ? "" : " ", extra);
  }

  void text(double x, double y, std::string_view content, std::string_view anchor = "middle",
            std::string_view extra = {}) {
    body_ += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"{}\"{}{}>{}</text>\n", num(x), num(y), anchor,
                         extra.empty() ? "" : " ", extra, escape(content));
  }

  void raw(std::string_view s) { body_ += s; }

  std::string finish() {
    body_ += "</svg>\n";
    return std::move(body_);
  }

 private:
  std::string body_;
};

void axes(Svg& svg, const YScale& y, int ticks, std::string_view tick_format, std::string_view y_label) {
  svg.line(kLeft, kTop, kLeft, kTop + kPlotHeight, "#333333");
  svg.line(kLeft, kTop + kPlotHeight, kLeft + kPlotWidth, kTop + kPlotHeight, "#333333");
  for (int k = 0; k <= ticks; ++k) {
    const double v = y.lo + (y.hi - y.lo) * k / ticks;
    const double py = y(v);
    svg.line(kLeft - 5.0, py, kLeft, py, "#333333");
    svg.line(kLeft, py, kLeft + kPlotWidth, py, "#e0e0e0");
    svg.text(kLeft - 8.0, py + 4.0, fmt::format(fmt::runtime(tick_format), v), "end");
  }
  svg.text(18.0, kTop + kPlotHeight / 2.0, y_label, "middle",
           fmt::format("transform=\"rotate(-90 18.00 {})\"", num(kTop + kPlotHeight / 2.0)));
}

void boxplot_body(Svg& svg, const YScale& y, std::span<const std::string> labels, std::span<const BoxStats> stats,
                  std::string_view x_label) {
  const double slot = kPlotWidth / static_cast<double>(std::max<std::size_t>(labels.size(), 1));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const BoxStats& b = stats[k];
    const double cx = kLeft + slot * (static_cast<double>(k) + 0.5);
    const double half = slot * 0.25;
    const char* color = kPalette[k % kPalette.size()];
    svg.raw(fmt::format(
        "<g class=\"box\" data-key=\"{}\" data-min=\"{}\" data-q1=\"{}\" data-median=\"{}\" data-q3=\"{}\" "
        "data-max=\"{}\">\n",
        escape(labels[k]), detail::full(b.min), detail::full(b.q1), detail::full(b.median), detail::full(b.q3),
        detail::full(b.max)));
    if (b.max > b.min) {
      svg.line(cx, y(b.max), cx, y(b.min), "#333333", "class=\"whisker\"");
      svg.line(cx - half / 2.0, y(b.max), cx + half / 2.0, y(b.max), "#333333", "class=\"whisker-cap\"");
      svg.line(cx - half / 2.0, y(b.min), cx + half / 2.0, y(b.min), "#333333", "class=\"whisker-cap\"");
    }
    if (b.q3 > b.q1) {
      svg.rect(cx - half, y(b.q3), 2.0 * half, y(b.q1) - y(b.q3), color,
               "fill-opacity=\"0.6\" stroke=\"#333333\" class=\"iqr\"");
      svg.line(cx - half, y(b.median), cx + half, y(b.median), "#000000", "stroke-width=\"2\" class=\"median\"");
    } else {
      svg.line(cx - half, y(b.median), cx + half, y(b.median), color, "stroke-width=\"3\" class=\"tick\"");
    }
    svg.raw("</g>\n");
    svg.text(cx, kTop + kPlotHeight + 18.0, labels[k]);
  }
  svg.text(kLeft + kPlotWidth / 2.0, kHeight - 20.0, x_label);
}

double nice_ceiling(double v, double step) {
  const double c = std::ceil(v / step - 1e-9) * step;
  return c > 0.0 ? c : step;
}

std::vector<std::string> labels_in_final_order(const ChartData& data) {
  std::vector<std::string> out;
  for (std::size_t idx : data.final.order) out.push_back(data.alternatives[idx]);
  return out;
}

}  // namespace

BoxStats box_stats(std::span<const double> values) {
  if (values.empty()) return {};
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + (v[hi] - v[lo]) * frac;
  };
  return BoxStats{v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back()};
}

std::string weight_boxplot_svg(const ChartData& data) {
  const std::size_t n = data.criteria.size();
  std::vector<BoxStats> stats(n);
  double top = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = data.weight_samples.column(j);
    stats[j] = box_stats(col);
    top = std::max(top, stats[j].max);
    if (j < data.bounds.upper.size()) top = std::max(top, data.bounds.upper[j]);
  }
  const YScale y{0.0, nice_ceiling(top, 0.05)};
  Svg svg("Sampled weight range per criterion");
  axes(svg, y, 5, "{:.3f}", "weight");
  boxplot_body(svg, y, data.criteria, stats, "criterion");
  return svg.finish();
}

std::string rank_frequency_svg(const ChartData& data) {
  const std::size_t m = data.alternatives.size();
  const auto freq = rank_frequency(data.rank_matrix);
  const double t = static_cast<double>(std::max<std::size_t>(data.rank_matrix.iterations(), 1));
  const YScale y{0.0, 1.0};
  Svg svg("Rank occupancy per alternative");
  axes(svg, y, 5, "{:.1f}", "share of iterations");

  const double slot = kPlotWidth / static_cast<double>(std::max<std::size_t>(m, 1));
  const double bar = slot * 0.8 / static_cast<double>(std::max<std::size_t>(m, 1));
  for (std::size_t a = 0; a < m; ++a) {
    const double x0 = kLeft + slot * static_cast<double>(a) + slot * 0.1;
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t count = freq(a, r);
      const double top = y(static_cast<double>(count) / t);
      svg.rect(x0 + bar * static_cast<double>(r), top, bar, kTop + kPlotHeight - top, kPalette[r % kPalette.size()],
               fmt::format("class=\"bar\" data-alternative=\"{}\" data-rank=\"{}\" data-count=\"{}\"",
                           escape(data.alternatives[a]), r + 1, count));
    }
    svg.text(kLeft + slot * (static_cast<double>(a) + 0.5), kTop + kPlotHeight + 18.0, data.alternatives[a]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    const double lx = kLeft + 10.0 + 70.0 * static_cast<double>(r);
    svg.rect(lx, kHeight - 40.0, 12.0, 12.0, kPalette[r % kPalette.size()]);
    svg.text(lx + 16.0, kHeight - 30.0, fmt::format("rank {}", r + 1), "start");
  }
  svg.text(kLeft + kPlotWidth / 2.0, kHeight - 50.0, "alternative");
  return svg.finish();
}

std::string closeness_boxplot_svg(const ChartData& data) {
  std::vector<BoxStats> stats;
  for (std::size_t idx : data.final.order) stats.push_back(box_stats(data.closeness_log.column(idx)));
  const YScale y{0.0, 1.0};
  Svg svg("Closeness distribution per alternative (final order)");
  axes(svg, y, 5, "{:.1f}", "closeness");
  const auto labels = labels_in_final_order(data);
  boxplot_body(svg, y, labels, stats, "alternative");
  return svg.finish();
}

std::string final_ranking_svg(const ChartData& data) {
  const std::size_t m = data.alternatives.size();
  const YScale y{0.0, static_cast<double>(std::max<std::size_t>(m, 1))};
  Svg svg("Final ranking (modal score)");
  axes(svg, y, static_cast<int>(std::max<std::size_t>(m, 1)), "{:.0f}", "modal score");
  const double slot = kPlotWidth / static_cast<double>(std::max<std::size_t>(m, 1));
  for (std::size_t k = 0; k < data.final.order.size(); ++k) {
    const std::size_t idx = data.final.order[k];
    const auto& o = data.final.outcomes[idx];
    const double x = kLeft + slot * static_cast<double>(k) + slot * 0.2;
    const double top = y(static_cast<double>(o.modal_score));
    svg.rect(x, top, slot * 0.6, kTop + kPlotHeight - top, kPalette[k % kPalette.size()],
             fmt::format("class=\"bar\" data-alternative=\"{}\" data-position=\"{}\" data-modal-score=\"{}\"",
                         escape(data.alternatives[idx]), o.position, o.modal_score));
    svg.text(x + slot * 0.3, top - 6.0, fmt::format("#{}", o.position));
    svg.text(x + slot * 0.3, kTop + kPlotHeight + 18.0, data.alternatives[idx]);
  }
  svg.text(kLeft + kPlotWidth / 2.0, kHeight - 20.0, "alternative (by final position)");
  return svg.finish();
}

void emit_charts(const ChartData& data, const std::filesystem::path& out_dir) {
  detail::ensure_directory(out_dir);
  // Render everything first so a failure leaves no partial set behind.
  const std::array<std::pair<const char*, std::string>, 4> files = {{
      {"figure2.svg", weight_boxplot_svg(data)},
      {"figure3.svg", rank_frequency_svg(data)},
      {"figure4.svg", closeness_boxplot_svg(data)},
      {"figure5.svg", final_ranking_svg(data)},
  }};
  for (const auto& [name, content] : files) detail::write_file(out_dir / name, content);
}

}  // namespace ectopsis
