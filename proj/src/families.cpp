#include "brocard/families.hpp"

#include <map>

#include "brocard/brocard_triangles.hpp"
#include "brocard/sampling.hpp"

namespace brocard {

namespace {

const std::map<std::string, FamilyKind>& family_table() {
  static const std::map<std::string, FamilyKind> table{
      {"center-top", FamilyKind::CenterTop},
      {"left-top", FamilyKind::LeftTop},
      {"antipodal", FamilyKind::Antipodal},
      {"ellipse-mounted", FamilyKind::EllipseMounted},
      {"custom-mounted", FamilyKind::CustomMounted},
      {"homothetic", FamilyKind::Homothetic},
      {"porism", FamilyKind::Porism},
  };
  return table;
}

}  // namespace

FamilyKind parse_family(const std::string& name) {
  const auto it = family_table().find(name);
  if (it == family_table().end()) throw OutOfRange("unknown family '" + name + "'");
  return it->second;
}

std::string to_string(FamilyKind kind) {
  for (const auto& [name, k] : family_table()) {
    if (k == kind) return name;
  }
  return "unknown";
}

Family::Family(FamilyKind kind, const FamilyParams& p) : kind_(kind) {
  switch (kind) {
    case FamilyKind::CenterTop:
    case FamilyKind::LeftTop:
    case FamilyKind::Antipodal:
    case FamilyKind::CustomMounted:
      a_ = p.a.value_or(1.0);
      b_ = a_;
      break;
    case FamilyKind::EllipseMounted:
      a_ = p.a.value_or(1.5);
      b_ = p.b.value_or(1.0);
      break;
    case FamilyKind::Homothetic:
      a_ = p.a.value_or(2.0);
      b_ = p.b.value_or(1.0);
      break;
    case FamilyKind::Porism:
      a_ = p.a.value_or(1.0);
      b_ = p.b.value_or(0.8);
      break;
  }
  if (!(a_ > 0.0) || !(b_ > 0.0)) throw OutOfRange("family parameters must be positive");

  switch (kind) {
    case FamilyKind::CenterTop:
      mounted_ = MountedFamilyConfig::center_top(a_);
      break;
    case FamilyKind::LeftTop:
      mounted_ = MountedFamilyConfig::left_top(a_);
      break;
    case FamilyKind::Antipodal:
      mounted_ = MountedFamilyConfig::antipodal(a_);
      break;
    case FamilyKind::EllipseMounted:
      mounted_ = MountedFamilyConfig::ellipse_mounted(a_, b_);
      break;
    case FamilyKind::CustomMounted:
      mounted_ = MountedFamilyConfig::custom_mounted(a_, p.x1.value_or(0.0));
      if (p.v1) mounted_.v1 = *p.v1;
      if (p.v2) mounted_.v2 = *p.v2;
      mounted_.validate();
      break;
    case FamilyKind::Homothetic:
      if (a_ < b_) throw OutOfRange("homothetic family requires a >= b");
      break;
    case FamilyKind::Porism:
      porism().validate();
      break;
  }
}

bool Family::is_mounted() const {
  return kind_ != FamilyKind::Homothetic && kind_ != FamilyKind::Porism;
}

Triangle Family::triangle(double t) const {
  switch (kind_) {
    case FamilyKind::Homothetic:
      return periodic_vertices(homothetic(), t);
    case FamilyKind::Porism:
      return porism_triangle(porism(), t);
    default:
      return mounted_triangle(mounted_, t);
  }
}

Track parse_track(const std::string& name) {
  Track tr;
  std::string rest = name;
  if (rest.size() > 3 && rest[0] == 't' && rest[2] == '-') {
    switch (rest[1]) {
      case '1':
        tr.source = Track::Source::First;
        break;
      case '2':
        tr.source = Track::Source::Second;
        break;
      case '7':
        tr.source = Track::Source::Seventh;
        break;
      default:
        throw OutOfRange("unknown track '" + name + "'");
    }
    rest = rest.substr(3);
  }
  if (rest == "omega1") {
    tr.item = Track::Item::Omega1;
  } else if (rest == "omega2") {
    tr.item = Track::Item::Omega2;
  } else if (tr.source != Track::Source::Reference && rest.size() == 2 && rest[0] == 'v' &&
             rest[1] >= '1' && rest[1] <= '3') {
    tr.item = Track::Item::Vertex;
    tr.index = rest[1] - '0';
  } else if (rest == "x2" || rest == "x3" || rest == "x6" || rest == "x182") {
    tr.item = Track::Item::Center;
    tr.index = std::stoi(rest.substr(1));
  } else {
    throw OutOfRange("unknown track '" + name + "'");
  }
  return tr;
}

std::vector<std::string> track_names() {
  std::vector<std::string> out{"omega1", "omega2", "x2", "x3", "x6", "x182"};
  for (const char* src : {"t1-", "t2-", "t7-"}) {
    for (const char* item : {"v1", "v2", "v3", "omega1", "omega2", "x6"}) {
      out.push_back(std::string(src) + item);
    }
  }
  return out;
}

Point track_point(const Triangle& t, const Track& track) {
  Triangle src = t;
  switch (track.source) {
    case Track::Source::Reference:
      break;
    case Track::Source::First:
      src = first_brocard_triangle(t).tri;
      break;
    case Track::Source::Second:
      src = brocard_triangle(t, BrocardTriangleKind::Second).tri;
      break;
    case Track::Source::Seventh:
      src = brocard_triangle(t, BrocardTriangleKind::Seventh).tri;
      break;
  }
  switch (track.item) {
    case Track::Item::Omega1:
      return brocard_points(src).omega1;
    case Track::Item::Omega2:
      return brocard_points(src).omega2;
    case Track::Item::Vertex:
      return src[static_cast<std::size_t>(track.index - 1)];
    case Track::Item::Center:
      return triangle_center(src, track.index);
  }
  throw OutOfRange("track_point: bad track");
}

LocusSamples sample_track(const Family& family, const Track& track, std::size_t n, double phase) {
  return sample_parallel(uniform_grid(n, phase),
                         [&](double t) { return track_point(family.triangle(t), track); });
}

LocusSamples sample_track_serial(const Family& family, const Track& track, std::size_t n,
                                 double phase) {
  return sample_serial(uniform_grid(n, phase),
                       [&](double t) { return track_point(family.triangle(t), track); });
}

}  // namespace brocard
