#include "brocard/svg.hpp"

#include <algorithm>
#include <limits>

namespace brocard {

namespace {

std::string attrs(const Style& s) {
  std::ostringstream os;
  os << " stroke=\"" << s.stroke << "\" fill=\"" << s.fill << "\" stroke-width=\"" << s.width
     << "\"";
  if (s.dashed) os << " stroke-dasharray=\"4,3\"";
  return os.str();
}

std::string escape(const std::string& in) {
  std::string out;
  for (char ch : in) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

SvgPanel::SvgPanel(double px, double py, double pw, double ph, Point world_min, Point world_max)
    : px_(px), py_(py) {
  const double wx = world_max.x - world_min.x, wy = world_max.y - world_min.y;
  scale_ = std::min(pw / wx, ph / wy);
  // Center the world box inside the pixel rectangle.
  ox_ = px + 0.5 * (pw - scale_ * wx) - scale_ * world_min.x;
  oy_ = py + 0.5 * (ph - scale_ * wy) + scale_ * world_max.y;
  body_.precision(6);
  body_ << std::fixed;
}

Point SvgPanel::to_px(const Point& p) const { return {ox_ + scale_ * p.x, oy_ - scale_ * p.y}; }

void SvgPanel::circle(const Point& c, double r, const Style& s) {
  const Point q = to_px(c);
  body_ << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" << scale_ * r << "\""
        << attrs(s) << "/>\n";
}

void SvgPanel::ellipse(const Point& c, double rx, double ry, double tilt, const Style& s) {
  const Point q = to_px(c);
  // Screen y points down, so a counterclockwise world tilt is a negative SVG rotation.
  const double deg = -tilt * 180.0 / kPi;
  body_ << "<ellipse cx=\"" << q.x << "\" cy=\"" << q.y << "\" rx=\"" << scale_ * rx
        << "\" ry=\"" << scale_ * ry << "\" transform=\"rotate(" << deg << ' ' << q.x << ' '
        << q.y << ")\"" << attrs(s) << "/>\n";
}

void SvgPanel::polyline(std::span<const Point> pts, bool closed, const Style& s) {
  if (pts.empty()) return;
  body_ << "<path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point q = to_px(pts[i]);
    body_ << (i == 0 ? 'M' : 'L') << q.x << ',' << q.y << ' ';
  }
  if (closed) body_ << 'Z';
  body_ << "\"" << attrs(s) << "/>\n";
}

void SvgPanel::marker(const Point& p, double radius_px, const std::string& color) {
  const Point q = to_px(p);
  body_ << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" << radius_px
        << "\" stroke=\"none\" fill=\"" << color << "\"/>\n";
}

void SvgPanel::text(const Point& p, const std::string& label, double size_px,
                    const std::string& color) {
  const Point q = to_px(p);
  body_ << "<text x=\"" << q.x << "\" y=\"" << q.y << "\" font-size=\"" << size_px
        << "\" fill=\"" << color << "\">" << escape(label) << "</text>\n";
}

void SvgPanel::caption(double dx, double dy, const std::string& label, double size_px) {
  body_ << "<text x=\"" << px_ + dx << "\" y=\"" << py_ + dy << "\" font-size=\"" << size_px
        << "\" fill=\"black\">" << escape(label) << "</text>\n";
}

std::pair<Point, Point> square_bounds(std::span<const Point> pts, double margin) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  if (pts.empty()) return {{-1, -1}, {1, 1}};
  const double half = 0.5 * std::max({x1 - x0, y1 - y0, 1e-9}) * (1.0 + 2.0 * margin);
  const Point c{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  return {{c.x - half, c.y - half}, {c.x + half, c.y + half}};
}

std::string SvgDocument::str() const {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_
     << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width_ << "\" height=\"" << height_
     << "\" fill=\"white\"/>\n";
  for (const auto& p : parts_) os << "<g>\n" << p << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace brocard
