#pragma once

// Plot specifications, a small SVG emitter, and a CSV dump that reloads
// into an identical specification.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/estimate_classic.hpp"
#include "longmem/forecast.hpp"
#include "longmem/moments.hpp"
#include "longmem/series.hpp"

namespace longmem {

enum class PanelKind { line, stem, scatter, logscatter };

inline const char *to_string(PanelKind k) {
  switch (k) {
  case PanelKind::line: return "line";
  case PanelKind::stem: return "stem";
  case PanelKind::scatter: return "scatter";
  case PanelKind::logscatter: return "logscatter";
  }
  return "line";
}

inline PanelKind panel_kind_from(std::string_view s) {
  if (s == "line") return PanelKind::line;
  if (s == "stem") return PanelKind::stem;
  if (s == "scatter") return PanelKind::scatter;
  if (s == "logscatter") return PanelKind::logscatter;
  throw parse_error("unknown plot element kind '" + std::string(s) + "'", 0);
}

struct PlotSeries {
  PanelKind kind = PanelKind::line;
  std::string label;
  std::vector<double> x, y;
};

// Shaded ribbon between lower and upper.
struct PlotBand {
  std::string label;
  std::vector<double> x, lower, upper;
};

// y = intercept + slope * x across the panel's x range.
struct ReferenceLine {
  std::string label;
  double intercept = 0.0;
  double slope = 0.0;
};

struct Panel {
  std::string title, xlabel, ylabel;
  bool logx = false, logy = false;
  std::vector<PlotSeries> series;
  std::vector<PlotBand> bands;
  std::vector<ReferenceLine> reference_lines;
};

struct PlotSpec {
  std::string title;
  std::size_t rows = 1, cols = 1;
  std::vector<Panel> panels;

  void validate() const {
    if (panels.empty())
      throw empty_request_error("plot has no panels");
    if (rows * cols < panels.size())
      throw shape_error("plot layout has fewer cells than panels");
    for (const auto &p : panels) {
      for (const auto &s : p.series)
        if (s.x.size() != s.y.size())
          throw shape_error("plot series '" + s.label + "' has unequal x/y lengths");
      for (const auto &b : p.bands)
        if (b.x.size() != b.lower.size() || b.x.size() != b.upper.size())
          throw shape_error("plot band '" + b.label + "' has unequal lengths");
    }
  }
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

inline std::string fmt(double v, int prec = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

inline std::string fmt_tick(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  void include(double v) {
    if (!std::isfinite(v) || (log && !(v > 0.0)))
      return;
    const double t = log ? std::log10(v) : v;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  double transform(double v) const { return log ? std::log10(v) : v; }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.04 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

struct Frame {
  double x0, y0, w, h;
  Axis ax, ay;
  double px(double v) const { return x0 + (ax.transform(v) - ax.lo) / (ax.hi - ax.lo) * w; }
  double py(double v) const { return y0 + h - (ay.transform(v) - ay.lo) / (ay.hi - ay.lo) * h; }
  bool ok(double x, double y) const {
    return std::isfinite(x) && std::isfinite(y) && (!ax.log || x > 0.0) && (!ay.log || y > 0.0);
  }
};

inline void render_panel(std::ostringstream &o, const Panel &p, double cx, double cy,
                         double cw, double ch) {
  Frame f{cx + 60.0, cy + 30.0, cw - 80.0, ch - 70.0, {}, {}};
  f.ax.log = p.logx;
  f.ay.log = p.logy;
  const double inf = std::numeric_limits<double>::infinity();
  f.ax.lo = f.ay.lo = inf;
  f.ax.hi = f.ay.hi = -inf;
  for (const auto &s : p.series)
    for (std::size_t i = 0; i < s.x.size(); ++i)
      if (f.ok(s.x[i], s.y[i])) {
        f.ax.include(s.x[i]);
        f.ay.include(s.y[i]);
        if (s.kind == PanelKind::stem)
          f.ay.include(0.0);
      }
  for (const auto &b : p.bands)
    for (std::size_t i = 0; i < b.x.size(); ++i) {
      f.ax.include(b.x[i]);
      f.ay.include(b.lower[i]);
      f.ay.include(b.upper[i]);
    }
  f.ax.finish();
  const double xa = p.logx ? std::pow(10.0, f.ax.lo) : f.ax.lo;
  const double xb = p.logx ? std::pow(10.0, f.ax.hi) : f.ax.hi;
  for (const auto &r : p.reference_lines) {
    f.ay.include(r.intercept + r.slope * xa);
    f.ay.include(r.intercept + r.slope * xb);
  }
  f.ay.finish();

  o << "<g class=\"panel\" data-title=\"" << xml_escape(p.title) << "\">\n";
  o << "<rect x=\"" << fmt(f.x0) << "\" y=\"" << fmt(f.y0) << "\" width=\"" << fmt(f.w)
    << "\" height=\"" << fmt(f.h) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  o << "<text x=\"" << fmt(f.x0 + f.w / 2) << "\" y=\"" << fmt(cy + 18.0)
    << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(p.title) << "</text>\n";
  o << "<text x=\"" << fmt(f.x0 + f.w / 2) << "\" y=\"" << fmt(f.y0 + f.h + 34.0)
    << "\" text-anchor=\"middle\" font-size=\"11\">" << xml_escape(p.xlabel) << "</text>\n";
  o << "<text x=\"" << fmt(cx + 14.0) << "\" y=\"" << fmt(f.y0 + f.h / 2)
    << "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 " << fmt(cx + 14.0)
    << " " << fmt(f.y0 + f.h / 2) << ")\">" << xml_escape(p.ylabel) << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double tx = f.ax.lo + (f.ax.hi - f.ax.lo) * i / 4.0;
    const double ty = f.ay.lo + (f.ay.hi - f.ay.lo) * i / 4.0;
    const double gx = f.x0 + f.w * i / 4.0;
    const double gy = f.y0 + f.h - f.h * i / 4.0;
    o << "<text x=\"" << fmt(gx) << "\" y=\"" << fmt(f.y0 + f.h + 14.0)
      << "\" text-anchor=\"middle\" font-size=\"9\">"
      << fmt_tick(p.logx ? std::pow(10.0, tx) : tx) << "</text>\n";
    o << "<text x=\"" << fmt(f.x0 - 4.0) << "\" y=\"" << fmt(gy + 3.0)
      << "\" text-anchor=\"end\" font-size=\"9\">"
      << fmt_tick(p.logy ? std::pow(10.0, ty) : ty) << "</text>\n";
  }

  for (const auto &b : p.bands) {
    o << "<g class=\"band\" data-label=\"" << xml_escape(b.label) << "\"><path d=\"";
    bool first = true;
    for (std::size_t i = 0; i < b.x.size(); ++i) {
      o << (first ? "M" : " L") << fmt(f.px(b.x[i])) << "," << fmt(f.py(b.upper[i]));
      first = false;
    }
    for (std::size_t i = b.x.size(); i-- > 0;)
      o << " L" << fmt(f.px(b.x[i])) << "," << fmt(f.py(b.lower[i]));
    o << (b.x.empty() ? "" : " Z") << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/></g>\n";
  }

  static constexpr const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"};
  std::size_t colour = 0;
  for (const auto &s : p.series) {
    const char *c = palette[colour++ % 4];
    o << "<g class=\"series\" data-kind=\"" << to_string(s.kind) << "\" data-label=\""
      << xml_escape(s.label) << "\">";
    if (s.kind == PanelKind::line) {
      o << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.2\" points=\"";
      bool first = true;
      for (std::size_t i = 0; i < s.x.size(); ++i)
        if (f.ok(s.x[i], s.y[i])) {
          o << (first ? "" : " ") << fmt(f.px(s.x[i])) << "," << fmt(f.py(s.y[i]));
          first = false;
        }
      o << "\"/>";
    } else if (s.kind == PanelKind::stem) {
      const double base = f.py(0.0);
      for (std::size_t i = 0; i < s.x.size(); ++i)
        if (f.ok(s.x[i], s.y[i]))
          o << "<line x1=\"" << fmt(f.px(s.x[i])) << "\" y1=\"" << fmt(base) << "\" x2=\""
            << fmt(f.px(s.x[i])) << "\" y2=\"" << fmt(f.py(s.y[i])) << "\" stroke=\"" << c
            << "\"/>";
    } else {
      for (std::size_t i = 0; i < s.x.size(); ++i)
        if (f.ok(s.x[i], s.y[i]))
          o << "<circle cx=\"" << fmt(f.px(s.x[i])) << "\" cy=\"" << fmt(f.py(s.y[i]))
            << "\" r=\"2\" fill=\"" << c << "\"/>";
    }
    o << "</g>\n";
  }

  // Reference lines are sampled so they stay straight in data space even on
  // log axes, and clipped to the frame.
  for (const auto &r : p.reference_lines) {
    o << "<g class=\"refline\" data-label=\"" << xml_escape(r.label)
      << "\"><polyline fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\" points=\"";
    bool first = true;
    for (int i = 0; i <= 32; ++i) {
      const double t = f.ax.lo + (f.ax.hi - f.ax.lo) * i / 32.0;
      const double xv = p.logx ? std::pow(10.0, t) : t;
      const double yv = r.intercept + r.slope * xv;
      if (!f.ok(xv, yv))
        continue;
      const double yy = std::clamp(f.py(yv), f.y0, f.y0 + f.h);
      o << (first ? "" : " ") << fmt(f.px(xv)) << "," << fmt(yy);
      first = false;
    }
    o << "\"/></g>\n";
  }
  o << "</g>\n";
}

} // namespace detail

inline constexpr double plot_cell_width = 480.0;
inline constexpr double plot_cell_height = 320.0;

inline std::string render_svg(const PlotSpec &spec) {
  spec.validate();
  const double W = plot_cell_width * static_cast<double>(spec.cols);
  const double top = spec.title.empty() ? 0.0 : 28.0;
  const double H = plot_cell_height * static_cast<double>(spec.rows) + top;
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(W)
    << "\" height=\"" << detail::fmt(H) << "\" viewBox=\"0 0 " << detail::fmt(W) << " "
    << detail::fmt(H) << "\" font-family=\"sans-serif\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    o << "<text x=\"" << detail::fmt(W / 2) << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << detail::xml_escape(spec.title) << "</text>\n";
  for (std::size_t i = 0; i < spec.panels.size(); ++i) {
    const double cx = plot_cell_width * static_cast<double>(i % spec.cols);
    const double cy = top + plot_cell_height * static_cast<double>(i / spec.cols);
    detail::render_panel(o, spec.panels[i], cx, cy, plot_cell_width, plot_cell_height);
  }
  o << "</svg>\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// CSV dump: one record per line, header record,panel,item,kind,label,x,y,z.
//   figure,,,,<title>,<rows>,<cols>,
//   panel,<p>,,<logx><logy>,<title>,<xlabel>,<ylabel>,
//   series,<p>,<s>,<kind>,<label>,,,
//   point,<p>,<s>,,,<x>,<y>,
//   band,<p>,<b>,,<label>,,,
//   bandpoint,<p>,<b>,,,<x>,<lower>,<upper>
//   refline,<p>,<r>,,<label>,<intercept>,<slope>,
// Text is quoted with doubled inner quotes; numbers print with 17
// significant digits so a reload renders an identical SVG.

namespace detail {

inline std::string csv_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> split_quoted(const std::string &line, std::size_t row) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  if (quoted)
    throw parse_error("plot dump: unterminated quote at row " + std::to_string(row), row);
  return out;
}

} // namespace detail

inline std::string dump_csv(const PlotSpec &spec) {
  spec.validate();
  using detail::csv_quote;
  using detail::num17;
  std::ostringstream o;
  o << "record,panel,item,kind,label,x,y,z\n";
  o << "figure,,,," << csv_quote(spec.title) << "," << spec.rows << "," << spec.cols << ",\n";
  for (std::size_t p = 0; p < spec.panels.size(); ++p) {
    const auto &P = spec.panels[p];
    o << "panel," << p << ",," << (P.logx ? "x" : "") << (P.logy ? "y" : "") << ","
      << csv_quote(P.title) << "," << csv_quote(P.xlabel) << "," << csv_quote(P.ylabel)
      << ",\n";
    for (std::size_t s = 0; s < P.series.size(); ++s) {
      const auto &S = P.series[s];
      o << "series," << p << "," << s << "," << to_string(S.kind) << "," << csv_quote(S.label)
        << ",,,\n";
      for (std::size_t i = 0; i < S.x.size(); ++i)
        o << "point," << p << "," << s << ",,," << num17(S.x[i]) << "," << num17(S.y[i])
          << ",\n";
    }
    for (std::size_t b = 0; b < P.bands.size(); ++b) {
      const auto &B = P.bands[b];
      o << "band," << p << "," << b << ",," << csv_quote(B.label) << ",,,\n";
      for (std::size_t i = 0; i < B.x.size(); ++i)
        o << "bandpoint," << p << "," << b << ",,," << num17(B.x[i]) << ","
          << num17(B.lower[i]) << "," << num17(B.upper[i]) << "\n";
    }
    for (std::size_t r = 0; r < P.reference_lines.size(); ++r) {
      const auto &R = P.reference_lines[r];
      o << "refline," << p << "," << r << ",," << csv_quote(R.label) << ","
        << num17(R.intercept) << "," << num17(R.slope) << ",\n";
    }
  }
  return o.str();
}

inline PlotSpec load_plot_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  PlotSpec spec;
  std::size_t row = 0;
  if (!std::getline(in, line))
    throw parse_error("plot dump: empty input", 0);
  auto num = [&](const std::string &s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size())
        throw std::invalid_argument(s);
      return v;
    } catch (const std::exception &) {
      throw parse_error("plot dump: bad number '" + s + "' at row " + std::to_string(row), row);
    }
  };
  auto idx = [&](const std::string &s, std::size_t limit) {
    const auto v = static_cast<std::size_t>(num(s));
    if (v >= limit)
      throw parse_error("plot dump: index out of order at row " + std::to_string(row), row);
    return v;
  };
  while (std::getline(in, line)) {
    ++row;
    if (line.empty())
      continue;
    auto f = detail::split_quoted(line, row);
    if (f.size() != 8)
      throw parse_error("plot dump: expected 8 fields at row " + std::to_string(row), row);
    const auto &rec = f[0];
    if (rec == "figure") {
      spec.title = f[4];
      spec.rows = static_cast<std::size_t>(num(f[5]));
      spec.cols = static_cast<std::size_t>(num(f[6]));
    } else if (rec == "panel") {
      Panel P;
      P.logx = f[3].find('x') != std::string::npos;
      P.logy = f[3].find('y') != std::string::npos;
      P.title = f[4];
      P.xlabel = f[5];
      P.ylabel = f[6];
      spec.panels.push_back(std::move(P));
    } else if (rec == "series") {
      auto &P = spec.panels.at(idx(f[1], spec.panels.size()));
      P.series.push_back({panel_kind_from(f[3]), f[4], {}, {}});
    } else if (rec == "point") {
      auto &P = spec.panels.at(idx(f[1], spec.panels.size()));
      auto &S = P.series.at(idx(f[2], P.series.size()));
      S.x.push_back(num(f[5]));
      S.y.push_back(num(f[6]));
    } else if (rec == "band") {
      auto &P = spec.panels.at(idx(f[1], spec.panels.size()));
      P.bands.push_back({f[4], {}, {}, {}});
    } else if (rec == "bandpoint") {
      auto &P = spec.panels.at(idx(f[1], spec.panels.size()));
      auto &B = P.bands.at(idx(f[2], P.bands.size()));
      B.x.push_back(num(f[5]));
      B.lower.push_back(num(f[6]));
      B.upper.push_back(num(f[7]));
    } else if (rec == "refline") {
      auto &P = spec.panels.at(idx(f[1], spec.panels.size()));
      P.reference_lines.push_back({f[4], num(f[5]), num(f[6])});
    } else {
      throw parse_error("plot dump: unknown record '" + rec + "' at row " +
                            std::to_string(row),
                        row);
    }
  }
  spec.validate();
  return spec;
}

inline void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io_error("cannot write " + path.string());
  out << text;
  if (!out)
    throw io_error("write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// Diagnostic plot builders.

inline std::size_t default_acf_lags(std::size_t T) { return std::min<std::size_t>(T - 1, 50); }
inline std::size_t default_logvar_m(std::size_t T) { return std::min<std::size_t>(T / 2, 300); }

inline Panel series_panel(std::span<const double> x, const std::string &title) {
  Panel p;
  p.title = title;
  p.xlabel = "t";
  p.ylabel = "x_t";
  PlotSeries s{PanelKind::line, "series", {}, {x.begin(), x.end()}};
  for (std::size_t t = 0; t < x.size(); ++t)
    s.x.push_back(static_cast<double>(t + 1));
  p.series.push_back(std::move(s));
  return p;
}

// Sample ACF at lags 1..K as stems with +-1.96/sqrt(T) lines.
inline Panel acf_panel(std::span<const double> x, std::size_t K) {
  if (K == 0 || K >= x.size())
    throw range_error("acf plot: lag count must lie in [1, T-1]");
  const auto acf = autocorrelation(x, K + 1);
  Panel p;
  p.title = "Autocorrelation";
  p.xlabel = "lag";
  p.ylabel = "ACF";
  PlotSeries s{PanelKind::stem, "sample ACF", {}, {}};
  for (std::size_t k = 1; k <= K; ++k) {
    s.x.push_back(static_cast<double>(k));
    s.y.push_back(acf.values[k]);
  }
  p.series.push_back(std::move(s));
  const double ci = 1.96 / std::sqrt(static_cast<double>(x.size()));
  p.reference_lines.push_back({"+1.96/sqrt(T)", ci, 0.0});
  p.reference_lines.push_back({"-1.96/sqrt(T)", -ci, 0.0});
  return p;
}

// Periodogram on log-log axes.
inline Panel periodogram_panel(std::span<const double> x) {
  const auto pg = periodogram(x);
  Panel p;
  p.title = "Log-periodogram";
  p.xlabel = "frequency";
  p.ylabel = "I(lambda)";
  p.logx = p.logy = true;
  p.series.push_back({PanelKind::logscatter, "periodogram", pg.frequencies, pg.ordinates});
  return p;
}

// Log block-mean variance against log block size, with the fitted line
// and, when `slopes` is set, the slope -1 short-memory reference.
inline Panel logvar_panel(std::span<const double> x, std::size_t m, bool slopes = true) {
  const auto r = log_variance_est(x, m);
  Panel p;
  p.title = "Log-variance plot";
  p.xlabel = "log n";
  p.ylabel = "log var(block mean)";
  p.series.push_back({PanelKind::scatter, "log variance", r.log_sizes, r.log_stats});
  if (slopes) {
    p.reference_lines.push_back({"fitted slope", r.intercept, r.slope});
    const double a = r.log_stats.front() + r.log_sizes.front();
    p.reference_lines.push_back({"slope -1", a, -1.0});
  }
  return p;
}

inline Panel rs_panel(std::span<const double> x, std::size_t k, bool slopes = true) {
  const auto r = rescaled_range_est(x, k);
  Panel p;
  p.title = "Rescaled range";
  p.xlabel = "log n";
  p.ylabel = "log R/S";
  p.series.push_back({PanelKind::scatter, "log R/S", r.log_sizes, r.log_stats});
  if (slopes) {
    p.reference_lines.push_back({"fitted slope", r.intercept, r.slope});
    const double a = r.log_stats.front() - 0.5 * r.log_sizes.front();
    p.reference_lines.push_back({"slope 1/2", a, 0.5});
  }
  return p;
}

inline PlotSpec single_panel(Panel p, std::string title = {}) {
  PlotSpec s;
  s.title = std::move(title);
  s.panels.push_back(std::move(p));
  return s;
}

// Series, ACF, log-periodogram and log-variance in a 2x2 grid.
inline PlotSpec lm_plot(std::span<const double> x, const std::string &title = "Long-memory diagnostics") {
  const std::size_t T = x.size();
  if (T < 20)
    throw range_error("lm plot: need at least 20 observations");
  PlotSpec s;
  s.title = title;
  s.rows = 2;
  s.cols = 2;
  s.panels.push_back(series_panel(x, "Series"));
  s.panels.push_back(acf_panel(x, default_acf_lags(T)));
  s.panels.push_back(periodogram_panel(x));
  s.panels.push_back(logvar_panel(x, default_logvar_m(T), true));
  return s;
}

// The last `tail` observations followed by the forecast path and its band.
inline PlotSpec forecast_plot(std::span<const double> x, const Forecast &f,
                              std::size_t tail = 100, const std::string &title = "Forecast") {
  const std::size_t T = x.size();
  const std::size_t start = T > tail ? T - tail : 0;
  Panel p;
  p.title = title;
  p.xlabel = "t";
  p.ylabel = "x_t";
  PlotSeries hist{PanelKind::line, "observed", {}, {}};
  for (std::size_t t = start; t < T; ++t) {
    hist.x.push_back(static_cast<double>(t + 1));
    hist.y.push_back(x[t]);
  }
  PlotSeries path{PanelKind::line, "forecast", {}, f.point};
  PlotBand band{"95% band", {}, f.lower, f.upper};
  for (std::size_t j = 0; j < f.horizon; ++j) {
    path.x.push_back(static_cast<double>(T + j + 1));
    band.x.push_back(static_cast<double>(T + j + 1));
  }
  p.bands.push_back(std::move(band));
  p.series.push_back(std::move(hist));
  p.series.push_back(std::move(path));
  return single_panel(std::move(p), title);
}

} // namespace longmem
