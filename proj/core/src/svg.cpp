#include "pappus/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <sstream>

#include "pappus/analysis.hpp"
#include "pappus/error.hpp"

namespace pappus {

namespace {

using Vec3 = std::array<BigRational, 3>;
using Mat3 = std::array<Vec3, 3>;

BigRational dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 coords_of(const HomTriple& t) { return {t.x().rational(), t.y().rational(), t.z().rational()}; }

// Rows r0, r1, form: the first two are unit vectors chosen so the matrix is invertible.
Mat3 chart_matrix(const Chart& c) {
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  if (!c.form[2].is_zero()) return {e1, e2, c.form};
  if (!c.form[1].is_zero()) return {e1, e3, c.form};
  return {e2, e3, c.form};
}

Mat3 inverse(const Mat3& m) {
  Mat3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& r1 = m[static_cast<std::size_t>((j + 1) % 3)];
      const auto& r2 = m[static_cast<std::size_t>((j + 2) % 3)];
      const auto c1 = static_cast<std::size_t>((i + 1) % 3);
      const auto c2 = static_cast<std::size_t>((i + 2) % 3);
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r1[c1] * r2[c2] - r1[c2] * r2[c1];
    }
  }
  BigRational det = 0;
  for (std::size_t k = 0; k < 3; ++k) det += m[0][k] * adj[k][0];
  for (auto& row : adj) {
    for (auto& v : row) v /= det;
  }
  return adj;
}

struct Affine {
  double u = 0;
  double v = 0;
};

std::optional<Affine> to_chart(const Mat3& m, const HomTriple& p) {
  const Vec3 c = coords_of(p);
  const BigRational w = dot(m[2], c);
  if (w.is_zero()) return std::nullopt;
  return Affine{(dot(m[0], c) / w).to_double(), (dot(m[1], c) / w).to_double()};
}

// alpha u + beta v + gamma = 0 in chart coordinates; nullopt for the line at infinity.
std::optional<std::array<double, 3>> line_in_chart(const Mat3& inv, const HomTriple& l) {
  const Vec3 c = coords_of(l);
  std::array<BigRational, 3> k;
  for (std::size_t j = 0; j < 3; ++j) k[j] = c[0] * inv[0][j] + c[1] * inv[1][j] + c[2] * inv[2][j];
  if (k[0].is_zero() && k[1].is_zero()) return std::nullopt;
  return std::array<double, 3>{k[0].to_double(), k[1].to_double(), k[2].to_double()};
}

struct Box {
  double u0, v0, u1, v1;
};

std::optional<std::pair<Affine, Affine>> clip(const std::array<double, 3>& l, const Box& box) {
  const auto [al, be, ga] = l;
  std::vector<Affine> hits;
  const double eps = 1e-12 * std::max({box.u1 - box.u0, box.v1 - box.v0, 1.0});
  const auto inside = [&](const Affine& p) {
    return p.u >= box.u0 - eps && p.u <= box.u1 + eps && p.v >= box.v0 - eps && p.v <= box.v1 + eps;
  };
  if (be != 0) {
    for (double u : {box.u0, box.u1}) {
      Affine p{u, -(al * u + ga) / be};
      if (inside(p)) hits.push_back(p);
    }
  }
  if (al != 0) {
    for (double v : {box.v0, box.v1}) {
      Affine p{-(be * v + ga) / al, v};
      if (inside(p)) hits.push_back(p);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  const auto key = [&](const Affine& p) { return -be * p.u + al * p.v; };  // position along the line
  const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                            [&](const Affine& x, const Affine& y) { return key(x) < key(y); });
  return std::make_pair(*lo, *hi);
}

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  return fmt::format("{:.2f}", v);
}

struct DrawnLine {
  std::string cls;
  std::string id;
  HomTriple line;
};

struct DrawnPoint {
  std::string cls;
  std::string label;
  HomTriple point;
};

std::string sigma_suffix(const Perm3& s, bool several) { return several ? "," + s.name() : ""; }

}  // namespace

Chart chart_z() { return {{BigRational(0), BigRational(0), BigRational(1)}, "z"}; }

Chart parse_chart(const std::string& text) {
  if (text == "z") return chart_z();
  std::array<BigRational, 3> f;
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 3) throw Error(ErrorCode::ParseError, "chart needs three coefficients");
    try {
      f[n++] = BigRational::parse(item);
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, "bad chart coefficient '" + item + "'");
    }
  }
  if (n != 3) throw Error(ErrorCode::ParseError, "chart needs three coefficients");
  if (f[0].is_zero() && f[1].is_zero() && f[2].is_zero()) throw Error(ErrorCode::ParseError, "zero chart form");
  return {f, text};
}

std::optional<Chart> auto_chart(const std::vector<HomTriple>& points) {
  std::vector<std::array<long, 3>> forms = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {1, 3, 7}, {7, 1, 3}, {3, 7, 1}};
  for (long k = 2; k <= 60; ++k) forms.push_back({1, k, k * k + 1});
  for (const auto& f : forms) {
    Chart c{{BigRational(f[0]), BigRational(f[1]), BigRational(f[2])},
            fmt::format("{},{},{}", f[0], f[1], f[2])};
    const bool all_finite = std::all_of(points.begin(), points.end(), [&](const HomTriple& p) {
      return !dot(c.form, coords_of(p)).is_zero();
    });
    if (all_finite) return c;
  }
  return std::nullopt;
}

SvgResult render_svg(const PappusScene& scene, const SvgOptions& options) {
  if (scene.field() != FieldTag::rational) {
    throw Error(ErrorCode::FieldMismatch, "rendering needs a rational scene");
  }
  SvgResult result;
  const auto& all = Perm3::all();

  std::vector<Perm3> sigmas = options.sigmas;
  if (options.s_lines) {
    for (const Perm3& s : all) {
      if (s_on_pappus_line(scene, s)) sigmas.push_back(s);
    }
  }
  std::sort(sigmas.begin(), sigmas.end(), [](const Perm3& x, const Perm3& y) { return x.index() < y.index(); });
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  const bool several = sigmas.size() > 1;

  std::vector<DrawnLine> lines = {{"carrier", "L_A", scene.line_a()}, {"carrier", "L_B", scene.line_b()}};
  std::vector<std::pair<int, int>> join_ids;
  for (const Perm3& s : sigmas) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i != j) join_ids.emplace_back(i, s(j));
      }
    }
  }
  std::sort(join_ids.begin(), join_ids.end());
  join_ids.erase(std::unique(join_ids.begin(), join_ids.end()), join_ids.end());
  for (auto [i, j] : join_ids) lines.push_back({"join", fmt::format("L(A{},B{})", i, j), scene.join_line(i, j)});
  bool through_s = false;
  for (const Perm3& s : sigmas) {
    lines.push_back({"pappus", "L_C," + s.name(), scene.pappus_line(s)});
    through_s = through_s || s_on_pappus_line(scene, s);
  }

  std::vector<DrawnPoint> points;
  for (int i = 1; i <= 3; ++i) points.push_back({"initial", fmt::format("A{}", i), scene.point_a(i)});
  for (int j = 1; j <= 3; ++j) points.push_back({"initial", fmt::format("B{}", j), scene.point_b(j)});
  for (const Perm3& s : sigmas) {
    for (int k = 1; k <= 3; ++k) {
      points.push_back({"pappus", fmt::format("C{}", k) + sigma_suffix(s, several), scene.c_point(k, s)});
    }
  }
  const bool draw_s = options.show_s || through_s;

  if (options.chart) {
    result.chart = *options.chart;
  } else {
    std::vector<HomTriple> must;
    for (const auto& p : points) must.push_back(p.point);
    if (draw_s) must.push_back(scene.s_point());
    auto c = auto_chart(must);
    if (!c) {
      must.pop_back();
      c = auto_chart(must);
    }
    result.chart = c ? *c : chart_z();
  }
  if (draw_s) points.push_back({"s", "S", scene.s_point()});

  const Mat3 m = chart_matrix(result.chart);
  const Mat3 inv = inverse(m);

  std::vector<std::pair<const DrawnPoint*, Affine>> finite;
  for (const auto& p : points) {
    if (auto a = to_chart(m, p.point)) {
      finite.emplace_back(&p, *a);
      continue;
    }
    if (p.cls != "s" && !options.allow_infinite) {
      throw Error(ErrorCode::DegenerateParameters,
                  p.label + " is at infinity in chart " + result.chart.name + " (use --allow-infinite)");
    }
    result.warnings.push_back(p.label + " is at infinity in chart " + result.chart.name + "; omitted");
  }
  if (finite.empty()) throw Error(ErrorCode::AllPointsAtInfinity, "no point is finite in chart " + result.chart.name);

  Box box{finite[0].second.u, finite[0].second.v, finite[0].second.u, finite[0].second.v};
  for (const auto& [p, a] : finite) {
    box.u0 = std::min(box.u0, a.u);
    box.u1 = std::max(box.u1, a.u);
    box.v0 = std::min(box.v0, a.v);
    box.v1 = std::max(box.v1, a.v);
  }
  const double extent = std::max({box.u1 - box.u0, box.v1 - box.v0, 1e-9});
  const double pad = options.render.margin * extent + (extent <= 1e-9 ? 1.0 : 0.0);
  box = {box.u0 - pad, box.v0 - pad, box.u1 + pad, box.v1 + pad};

  const double w = options.render.width;
  const double h = options.render.height;
  const double scale = std::min(w / (box.u1 - box.u0), h / (box.v1 - box.v0));
  const double off_x = (w - scale * (box.u1 - box.u0)) / 2;
  const double off_y = (h - scale * (box.v1 - box.v0)) / 2;
  const auto sx = [&](double u) { return off_x + (u - box.u0) * scale; };
  const auto sy = [&](double v) { return h - (off_y + (v - box.v0) * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
      options.render.width, options.render.height);
  out += fmt::format("<!-- chart {} -->\n", result.chart.name);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g id=\"lines\" fill=\"none\" stroke-linecap=\"round\">\n";
  for (const auto& l : lines) {
    const auto eq = line_in_chart(inv, l.line);
    if (!eq) {
      result.warnings.push_back(l.id + " is the line at infinity in chart " + result.chart.name + "; omitted");
      continue;
    }
    const auto seg = clip(*eq, box);
    if (!seg) {
      result.warnings.push_back(l.id + " misses the viewport; omitted");
      continue;
    }
    std::string style;
    if (l.cls == "carrier") {
      style = fmt::format("stroke=\"#000000\" stroke-width=\"{}\"", num(options.render.carrier_stroke));
    } else if (l.cls == "join") {
      style = fmt::format("stroke=\"#555555\" stroke-width=\"{}\" stroke-dasharray=\"6 4\"",
                          num(options.render.join_stroke));
    } else {
      style = fmt::format("stroke=\"#ff0000\" stroke-width=\"{}\"", num(options.render.pappus_stroke));
    }
    out += fmt::format("<line class=\"{}\" id=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", l.cls, l.id,
                       num(sx(seg->first.u)), num(sy(seg->first.v)), num(sx(seg->second.u)), num(sy(seg->second.v)),
                       style);
  }
  out += "</g>\n<g id=\"points\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& [p, a] : finite) {
    const char* color = p->cls == "initial" ? "#cc0066" : p->cls == "pappus" ? "#444444" : "#0044cc";
    out += fmt::format("<circle class=\"{}\" id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n", p->cls,
                       p->label, num(sx(a.u)), num(sy(a.v)), color);
    if (options.render.labels) {
      out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", num(sx(a.u) + 6), num(sy(a.v) - 6),
                         color, p->label);
    }
  }
  out += "</g>\n</svg>\n";
  result.svg = std::move(out);
  return result;
}

}  // namespace pappus
