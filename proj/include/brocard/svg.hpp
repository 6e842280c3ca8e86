#ifndef BROCARD_SVG_HPP_
#define BROCARD_SVG_HPP_

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "brocard/geometry.hpp"

namespace brocard {

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double width = 1.0;  // pixels
  bool dashed = false;
};

/// One plot area mapping a world-coordinate box onto a pixel rectangle
/// (y axis pointing up). Emits SVG 1.1 path/ellipse/circle/text only.
class SvgPanel {
 public:
  SvgPanel(double px, double py, double pw, double ph, Point world_min, Point world_max);

  void circle(const Point& c, double r, const Style& s);
  /// Ellipse with semi-axes (rx, ry) rotated by `tilt` radians.
  void ellipse(const Point& c, double rx, double ry, double tilt, const Style& s);
  void polyline(std::span<const Point> pts, bool closed, const Style& s);
  void marker(const Point& p, double radius_px, const std::string& color);
  void text(const Point& p, const std::string& label, double size_px = 10.0,
            const std::string& color = "black");
  /// Text at a pixel offset from the panel's top-left corner.
  void caption(double dx, double dy, const std::string& label, double size_px = 10.0);

  std::string str() const { return body_.str(); }

 private:
  Point to_px(const Point& p) const;
  double scale_;
  double ox_, oy_;
  double px_, py_;
  std::ostringstream body_;
};

/// Bounding box of a point set with a relative margin, made square.
std::pair<Point, Point> square_bounds(std::span<const Point> pts, double margin = 0.08);

class SvgDocument {
 public:
  SvgDocument(double width, double height) : width_(width), height_(height) {}
  void add(const SvgPanel& panel) { parts_.push_back(panel.str()); }
  std::string str() const;

 private:
  double width_, height_;
  std::vector<std::string> parts_;
};

}  // namespace brocard

#endif
