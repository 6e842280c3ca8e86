#ifndef BROCARD_IO_HPP_
#define BROCARD_IO_HPP_

#include <iosfwd>
#include <string>

#include "brocard/locus.hpp"

namespace brocard {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// CSV with header `t,x,y`, one row per sample.
void write_locus_csv(std::ostream& os, const LocusSamples& samples);

/// Parses the format written by write_locus_csv. Throws std::runtime_error on
/// a malformed header or row.
LocusSamples read_locus_csv(std::istream& is);

}  // namespace brocard

#endif
