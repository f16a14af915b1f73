#include "tri/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace tri {

namespace {

std::string escape(const std::string& s);

constexpr double kScale = 20.0;
constexpr double kMargin = 1.0;

struct Style {
  const char* fill;
  const char* stroke;
};

Style style_for(Role r) {
  switch (r) {
    case Role::Positive: return {"#404040", "#000000"};
    case Role::Negative: return {"#d62728", "#7f0000"};
    case Role::Cancelled: return {"#2ca02c", "#145a14"};
    case Role::Correction: return {"#f2c200", "#7a6200"};
    case Role::Outline: return {"none", "#000000"};
  }
  return {"none", "#000000"};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void include(const LatticeCoord& c) {
    const auto [x, y] = cartesian(c);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  bool empty() const { return min_x > max_x; }
};

std::vector<LatticeCoord> simplex_corners(const SimplexId& s) {
  const LatticeCoord a = s.at;
  switch (s.kind) {
    case SimplexKind::FaceUp: return {a, a + LatticeCoord{1, 0}, a + LatticeCoord{0, 1}};
    case SimplexKind::FaceDown: return {a + LatticeCoord{1, 0}, a + LatticeCoord{0, 1}, a + LatticeCoord{1, 1}};
    case SimplexKind::EdgeH: return {a, a + LatticeCoord{1, 0}};
    case SimplexKind::EdgeV: return {a, a + LatticeCoord{0, 1}};
    case SimplexKind::EdgeD: return {a + LatticeCoord{1, 0}, a + LatticeCoord{0, 1}};
    case SimplexKind::Vertex: return {a};
  }
  return {a};
}

void include_item(Box& box, const SceneItem& item) {
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, PlacedTriangle>) {
          for (const auto& v : vertices(shape)) box.include(v);
        } else if constexpr (std::is_same_v<T, Chain>) {
          for (const auto& [s, m] : shape.sorted_entries()) {
            for (const auto& v : simplex_corners(s)) box.include(v);
          }
        } else {
          box.include(shape.at);
        }
      },
      item.shape);
}

class Writer {
 public:
  explicit Writer(const Box& box) : box_(box) {}

  std::string point(const LatticeCoord& c) const {
    const auto [x, y] = cartesian(c);
    return num(px(x)) + "," + num(py(y));
  }
  double px(double x) const { return (x - box_.min_x + kMargin) * kScale; }
  double py(double y) const { return (box_.max_y - y + kMargin) * kScale; }

  std::string polygon(const std::vector<LatticeCoord>& corners, const char* cls, Style st, bool open,
                      double opacity) const {
    std::string pts;
    for (const auto& c : corners) {
      if (!pts.empty()) pts += ' ';
      pts += point(c);
    }
    std::string out = "<polygon class=\"" + std::string(cls) + "\" points=\"" + pts + "\" fill=\"" + st.fill +
                      "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"" + st.stroke + "\" stroke-width=\"1.000\"";
    if (open) out += " stroke-dasharray=\"4,2\"";
    return out + "/>\n";
  }

  std::string text(double x, double y, const std::string& label, double size, const char* fill) const {
    return "<text class=\"label\" x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) + "\" font-family=\"sans-serif\" font-size=\"" +
           num(size) + "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" + fill + "\">" + escape(label) +
           "</text>\n";
  }

 private:
  Box box_;
};

std::string render_item(const Writer& w, const SceneItem& item) {
  const Style st = style_for(item.role);
  std::string out;
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, PlacedTriangle>) {
          if (shape.size == 0) {
            const auto [x, y] = cartesian(shape.anchor);
            out += "<circle class=\"point " + std::string(to_string(item.role)) + "\" cx=\"" + num(w.px(x)) +
                   "\" cy=\"" + num(w.py(y)) + "\" r=\"3.000\" fill=\"" + st.fill + "\" stroke=\"" + st.stroke + "\"/>\n";
            return;
          }
          const double opacity = item.role == Role::Outline ? 0.0 : (item.role == Role::Cancelled ? 0.35 : 0.75);
          const std::string cls = item.role == Role::Outline ? "outline" : "piece " + std::string(to_string(item.role));
          out += w.polygon(vertices(shape), cls.c_str(), st, item.open, opacity);
          if (!item.label.empty()) {
            double cx = 0, cy = 0;
            for (const auto& v : vertices(shape)) {
              const auto [x, y] = cartesian(v);
              cx += x / 3.0;
              cy += y / 3.0;
            }
            const double m = static_cast<double>(shape.size < 0 ? -shape.size : shape.size);
            out += w.text(cx, cy, item.label, std::clamp(m * 4.0, 8.0, 28.0), "#ffffff");
          }
        } else if constexpr (std::is_same_v<T, Chain>) {
          for (const auto& [s, mult] : shape.sorted_entries()) {
            const Style cs = style_for(mult > 0 ? item.role : Role::Negative);
            const auto corners = simplex_corners(s);
            if (s.is_face()) {
              out += w.polygon(corners, "cell", cs, false, 0.75);
            } else if (s.is_edge()) {
              const auto p0 = cartesian(corners[0]);
              const auto p1 = cartesian(corners[1]);
              out += "<line class=\"edge\" x1=\"" + num(w.px(p0.first)) + "\" y1=\"" + num(w.py(p0.second)) +
                     "\" x2=\"" + num(w.px(p1.first)) + "\" y2=\"" + num(w.py(p1.second)) + "\" stroke=\"" + cs.stroke +
                     "\" stroke-width=\"2.000\"/>\n";
            } else {
              const auto p = cartesian(corners[0]);
              out += "<circle class=\"vertex\" cx=\"" + num(w.px(p.first)) + "\" cy=\"" + num(w.py(p.second)) +
                     "\" r=\"2.500\" fill=\"" + cs.fill + "\"/>\n";
            }
          }
        } else {
          const auto [x, y] = cartesian(shape.at);
          out += "<circle class=\"point " + std::string(to_string(item.role)) + "\" cx=\"" + num(w.px(x)) + "\" cy=\"" +
                 num(w.py(y)) + "\" r=\"4.000\" fill=\"" + st.fill + "\" stroke=\"" + st.stroke + "\"/>\n";
          if (!item.label.empty()) out += w.text(x + 0.3, y + 0.25, item.label, 10.0, "#000000");
        }
      },
      item.shape);
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Positive: return "positive";
    case Role::Negative: return "negative";
    case Role::Cancelled: return "cancelled";
    case Role::Correction: return "correction";
    case Role::Outline: return "outline";
  }
  return "?";
}

std::string to_svg(const Scene& scene) {
  Box box;
  for (const auto& item : scene.items) include_item(box, item);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (box.empty()) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\">\n";
    if (!scene.title.empty()) out += "<title>" + escape(scene.title) + "</title>\n";
    return out + "</svg>\n";
  }
  const double width = (box.max_x - box.min_x + 2 * kMargin) * kScale;
  const double height = (box.max_y - box.min_y + 2 * kMargin) * kScale;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  if (!scene.title.empty()) out += "<title>" + escape(scene.title) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  const Writer w(box);
  for (const auto& item : scene.items) out += render_item(w, item);
  return out + "</svg>\n";
}

Scene dissection_scene(const DissectionResult& r, bool show_cancelled) {
  Scene s;
  s.title = "dissection of <" + std::to_string(r.root.size) + "> into " + std::to_string(r.pieces.size()) + " pieces";
  if (show_cancelled) {
    for (const auto& c : r.cancellations) s.add(c.positive.tri, Role::Cancelled);
  }
  for (const auto& p : r.pieces) {
    const Role role = (p.sign < 0 || p.tri.size < 0) ? Role::Negative : Role::Positive;
    s.add(p.tri, role, std::to_string(p.tri.size));
  }
  s.add(r.root, Role::Outline);
  return s;
}

Scene eq8_scene(const Eq8Layout& layout) {
  Scene s;
  s.title = "construction of <" + std::to_string(layout.big.size) + "> from <" + std::to_string(layout.base().size) + ">";
  for (std::size_t i = 0; i < kEq8Slots.size(); ++i) {
    const PlacedTriangle& t = layout.terms[i];
    const int sign = slot_sign(kEq8Slots[i]);
    const Role role = sign < 0 ? Role::Negative : Role::Positive;
    s.add(t, role, (sign < 0 ? "-" : "") + std::string("<") + std::to_string(t.size) + ">");
  }
  s.add(layout.big, Role::Outline);
  return s;
}

Scene witness_scene(const PlacedTriangle& target, const std::vector<SignedPlacement>& terms, Mode mode) {
  Scene s;
  s.title = "witness for <" + std::to_string(target.size) + ">";
  std::map<LatticeCoord, Int> points;
  for (const auto& t : terms) {
    if (t.tri.size == 0) {
      points[t.tri.anchor] += t.sign;
      continue;
    }
    const bool open = mode == Mode::N20 && t.tri.size < 0;
    const Role role = (t.sign < 0 || t.tri.size < 0) ? Role::Negative : Role::Positive;
    s.add(t.tri, role, {}, open);
  }
  for (const auto& [at, net] : points) {
    if (net == 0) continue;
    // Removing k copies of <0> marks a point where k+1 closed triangles overlap.
    s.add(PointMark{at}, Role::Correction, net < 0 ? std::to_string(1 - net) : "+" + std::to_string(net));
  }
  s.add(target, Role::Outline);
  return s;
}

}  // namespace tri
