// Copyright 2026 The Inertia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inertia/ternary_svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace inertia {

namespace {

using Tri = std::array<double, 3>;  // point on the simplex plane

constexpr double kWidth = 640.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

struct Screen {
  double x, y;
};

// State 1 bottom-left, state 2 bottom-right, state 3 top.
Screen project(const Tri& p) {
  const double base_y = kHeight - kMargin;
  const double side = kWidth - 2 * kMargin;
  const double top_y = base_y - side * std::sqrt(3.0) / 2.0;
  const Screen v1{kMargin, base_y};
  const Screen v2{kWidth - kMargin, base_y};
  const Screen v3{kWidth / 2.0, top_y};
  return {p[0] * v1.x + p[1] * v2.x + p[2] * v3.x,
          p[0] * v1.y + p[1] * v2.y + p[2] * v3.y};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double line_value(const std::pair<std::vector<double>, double>& row,
                  const Tri& p) {
  return row.first[0] * p[0] + row.first[1] * p[1] + row.first[2] * p[2] -
         row.second;
}

Tri lerp(const Tri& a, const Tri& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]),
          a[2] + t * (b[2] - a[2])};
}

// Sutherland-Hodgman against a.p <= b.
std::vector<Tri> clip_halfplane(const std::vector<Tri>& poly,
                                const std::pair<std::vector<double>, double>& row) {
  std::vector<Tri> out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Tri& cur = poly[i];
    const Tri& nxt = poly[(i + 1) % n];
    const double fc = line_value(row, cur);
    const double fn = line_value(row, nxt);
    const bool cin = fc <= 1e-12;
    const bool nin = fn <= 1e-12;
    if (cin) out.push_back(cur);
    if (cin != nin) out.push_back(lerp(cur, nxt, fc / (fc - fn)));
  }
  return out;
}

std::vector<Tri> intersect_line(const std::vector<Tri>& poly,
                                const std::pair<std::vector<double>, double>& row) {
  std::vector<Tri> pts;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Tri& cur = poly[i];
    const Tri& nxt = poly[(i + 1) % n];
    const double fc = line_value(row, cur);
    const double fn = line_value(row, nxt);
    if (std::abs(fc) <= 1e-12) pts.push_back(cur);
    if ((fc < -1e-12 && fn > 1e-12) || (fc > 1e-12 && fn < -1e-12)) {
      pts.push_back(lerp(cur, nxt, fc / (fc - fn)));
    }
  }
  // keep the two extreme points
  if (pts.size() > 2) {
    size_t a = 0, b = 0;
    double best = -1.0;
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = i + 1; j < pts.size(); ++j) {
        double d = 0.0;
        for (int k = 0; k < 3; ++k) {
          d += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
        }
        if (d > best) {
          best = d;
          a = i;
          b = j;
        }
      }
    }
    return {pts[a], pts[b]};
  }
  return pts;
}

void draw_marker(std::ostringstream& svg, const Tri& p, const std::string& label,
                 const char* color) {
  const Screen s = project(p);
  svg << "<circle cx=\"" << fmt(s.x) << "\" cy=\"" << fmt(s.y)
      << "\" r=\"5\" fill=\"" << color << "\"/>\n";
  svg << "<text x=\"" << fmt(s.x + 8) << "\" y=\"" << fmt(s.y - 8)
      << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"" << color
      << "\">" << label << "</text>\n";
}

Tri to_tri(const Belief& b) {
  if (b.size() != 3) {
    throw Error(ErrorCode::NotThreeStates, "ternary plots need 3 states");
  }
  return {b[0], b[1], b[2]};
}

}  // namespace

std::string render_ternary_svg(const TernaryDiagram& diagram) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::vector<Tri> triangle{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto poly_path = [&](const std::vector<Tri>& poly) {
    std::ostringstream d;
    for (size_t i = 0; i < poly.size(); ++i) {
      const Screen s = project(poly[i]);
      d << (i == 0 ? "M" : "L") << fmt(s.x) << " " << fmt(s.y);
    }
    d << "Z";
    return d.str();
  };

  if (diagram.info) {
    if (diagram.info->dim() != 3) {
      throw Error(ErrorCode::NotThreeStates, "ternary plots need 3 states");
    }
    for (const auto& piece : diagram.info->pieces()) {
      if (piece.form.kind == PieceForm::Kind::Point) {
        draw_marker(svg, to_tri(*piece.form.point), "", "#4a90d9");
        continue;
      }
      std::vector<Tri> region = triangle;
      for (const auto& row : piece.inequalities) {
        region = clip_halfplane(region, row);
        if (region.empty()) break;
      }
      if (region.empty()) continue;
      if (piece.equalities.empty()) {
        svg << "<path d=\"" << poly_path(region)
            << "\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#4a90d9\" "
               "stroke-width=\"1.5\"/>\n";
        continue;
      }
      std::vector<Tri> segment = intersect_line(region, piece.equalities[0]);
      for (size_t k = 1; k < piece.equalities.size() && segment.size() >= 2;
           ++k) {
        const auto& row = piece.equalities[k];
        const double f0 = line_value(row, segment[0]);
        const double f1 = line_value(row, segment[1]);
        if (std::abs(f0) <= 1e-12 && std::abs(f1) <= 1e-12) continue;
        if ((f0 < 0) == (f1 < 0)) {
          segment.clear();
        } else {
          segment = {lerp(segment[0], segment[1], f0 / (f0 - f1))};
        }
      }
      if (segment.size() >= 2) {
        const Screen a = project(segment[0]);
        const Screen b = project(segment[1]);
        svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
            << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
            << "\" stroke=\"#4a90d9\" stroke-width=\"2.5\"/>\n";
      } else if (segment.size() == 1) {
        draw_marker(svg, segment[0], "", "#4a90d9");
      }
    }
  }

  svg << "<path d=\"" << poly_path(triangle)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  const std::array<Screen, 3> corners{project({1, 0, 0}), project({0, 1, 0}),
                                      project({0, 0, 1})};
  const std::array<std::pair<double, double>, 3> offsets{
      std::pair{-20.0, 20.0}, {6.0, 20.0}, {-8.0, -10.0}};
  for (int i = 0; i < 3; ++i) {
    svg << "<text x=\"" << fmt(corners[i].x + offsets[i].first) << "\" y=\""
        << fmt(corners[i].y + offsets[i].second)
        << "\" font-family=\"sans-serif\" font-size=\"15\">"
        << diagram.corner_labels[i] << "</text>\n";
  }

  if (diagram.prior) draw_marker(svg, to_tri(*diagram.prior), "prior", "black");
  for (const auto& [label, point] : diagram.points) {
    draw_marker(svg, to_tri(point), label, "#d94a4a");
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_ternary(const TernaryDiagram& diagram, const std::string& path) {
  if (path.empty()) return;
  const std::string bytes = render_ternary_svg(diagram);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  }
  out << bytes;
}

}  // namespace inertia
