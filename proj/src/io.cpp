#include "brocard/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace brocard {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_locus_csv(std::ostream& os, const LocusSamples& samples) {
  os << "t,x,y\n";
  for (const auto& s : samples.samples) {
    os << format_double(s.t) << ',' << format_double(s.p.x) << ',' << format_double(s.p.y) << '\n';
  }
}

namespace {

double parse_field(std::string_view f, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
    throw std::runtime_error("locus csv: bad number '" + std::string(f) + "' on line " +
                             std::to_string(line));
  }
  return v;
}

}  // namespace

LocusSamples read_locus_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("locus csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x,y") throw std::runtime_error("locus csv: expected header 't,x,y'");

  LocusSamples out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string_view sv(line);
    const auto c1 = sv.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
    if (c2 == std::string_view::npos || sv.find(',', c2 + 1) != std::string_view::npos) {
      throw std::runtime_error("locus csv: expected 3 fields on line " + std::to_string(lineno));
    }
    out.samples.push_back({parse_field(sv.substr(0, c1), lineno),
                           {parse_field(sv.substr(c1 + 1, c2 - c1 - 1), lineno),
                            parse_field(sv.substr(c2 + 1), lineno)}});
  }
  return out;
}

}  // namespace brocard
