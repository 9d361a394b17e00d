#include "chull/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace chull {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

double model_value(const FitResult& f, double n) {
  switch (f.model) {
    case FitModel::power: return f.a * std::pow(n, f.b);
    case FitModel::log: return f.a + f.b * std::log(n);
    case FitModel::polylog: return f.a * std::pow(std::log(n), f.b);
  }
  return 0.0;
}

}  // namespace

std::string render_fit_svg(std::span<const AggregateRow> rows, const FitResult& fit,
                           const std::string& title) {
  const bool log_y = fit.model != FitModel::log;
  auto ty = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  constexpr int kSteps = 64;
  std::vector<std::pair<double, double>> curve;
  for (const auto& r : rows) {
    const double x = std::log10(static_cast<double>(r.n));
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, ty(r.mean));
    y1 = std::max(y1, ty(r.mean));
  }
  for (int k = 0; k <= kSteps && x1 > x0; ++k) {
    const double x = x0 + (x1 - x0) * k / kSteps;
    const double y = model_value(fit, std::pow(10.0, x));
    if (!std::isfinite(y) || (log_y && !(y > 0.0))) continue;
    curve.emplace_back(x, ty(y));
    y0 = std::min(y0, ty(y));
    y1 = std::max(y1, ty(y));
  }
  if (x1 <= x0) { x0 -= 0.5; x1 += 0.5; }
  if (y1 <= y0) { y0 -= 0.5; y1 += 0.5; }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
       num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
       escape(title) + "</text>\n";

  // Axes.
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
       num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\"/>\n";
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
       num(kHeight - kBottom) + "\"/>\n";
  s += "</g>\n";

  // Ticks: five per axis, labelled in data units.
  s += "<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = x0 + (x1 - x0) * k / 4;
    const double y = y0 + (y1 - y0) * k / 4;
    s += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" + num(px(x)) +
         "\" y2=\"" + num(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kHeight - kBottom + 18) +
         "\" text-anchor=\"middle\">" + label(std::pow(10.0, x)) + "</text>\n";
    s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(py(y)) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(y) + 3) + "\" text-anchor=\"end\">" +
         label(log_y ? std::pow(10.0, y) : y) + "</text>\n";
  }
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 10) +
       "\" text-anchor=\"middle\">n</text>\n";
  s += "</g>\n";

  if (!curve.empty()) {
    std::string d;
    for (std::size_t k = 0; k < curve.size(); ++k)
      d += (k == 0 ? "M" : " L") + num(px(curve[k].first)) + " " + num(py(curve[k].second));
    s += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& r : rows)
    s += "<circle cx=\"" + num(px(std::log10(static_cast<double>(r.n)))) + "\" cy=\"" +
         num(py(ty(r.mean))) + "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace chull
