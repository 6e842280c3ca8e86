#ifndef BROCARD_FAMILIES_HPP_
#define BROCARD_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brocard/circle_mounted.hpp"
#include "brocard/homothetic.hpp"
#include "brocard/locus.hpp"
#include "brocard/porism.hpp"

namespace brocard {

enum class FamilyKind {
  CenterTop,
  LeftTop,
  Antipodal,
  EllipseMounted,
  CustomMounted,
  Homothetic,
  Porism,
};

FamilyKind parse_family(const std::string& name);
std::string to_string(FamilyKind kind);

struct FamilyParams {
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> x1;
  std::optional<Point> v1;
  std::optional<Point> v2;
};

/// A one-parameter triangle family with per-kind default parameters
/// (mounted: a = 1; ellipse-mounted: a = 1.5, b = 1; homothetic: a = 2, b = 1;
/// porism: a = 1, b = 0.8).
class Family {
 public:
  Family(FamilyKind kind, const FamilyParams& params);

  FamilyKind kind() const { return kind_; }
  bool is_mounted() const;
  /// Throws DegenerateInput for degenerate members (mounted families only).
  Triangle triangle(double t) const;

  const MountedFamilyConfig& mounted() const { return mounted_; }
  HomotheticPair homothetic() const { return {a_, b_}; }
  PorismConfig porism() const { return {a_, b_}; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  FamilyKind kind_;
  double a_ = 1.0;
  double b_ = 1.0;
  MountedFamilyConfig mounted_;
};

/// Tracked points: omega1, omega2, x2, x3, x6, x182, t{1,2,7}-v{1,2,3},
/// t{1,2,7}-omega{1,2}, t{1,2,7}-x6.
struct Track {
  enum class Source { Reference, First, Second, Seventh };
  enum class Item { Omega1, Omega2, Vertex, Center };

  Source source = Source::Reference;
  Item item = Item::Omega1;
  int index = 1;  // vertex index 1..3 or Kimberling center
};

Track parse_track(const std::string& name);
std::vector<std::string> track_names();

Point track_point(const Triangle& t, const Track& track);

/// Samples a tracked point over n uniform parameters in [0, 2pi). Members
/// whose triangle is degenerate are skipped.
LocusSamples sample_track(const Family& family, const Track& track, std::size_t n,
                          double phase = 0.0);
LocusSamples sample_track_serial(const Family& family, const Track& track, std::size_t n,
                                 double phase = 0.0);

}  // namespace brocard

#endif
