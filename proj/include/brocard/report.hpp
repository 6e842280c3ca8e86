#ifndef BROCARD_REPORT_HPP_
#define BROCARD_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

namespace brocard {

struct ReportEntry {
  std::string id;
  std::string group;
  int criterion = 0;  // acceptance criterion number, 0 for informational
  std::string paper_ref;
  double expected = 0.0;
  double measured = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

class VerificationReport {
 public:
  /// |measured - expected| <= tol (absolute).
  ReportEntry& check_close(std::string id, std::string group, int criterion, std::string ref,
                           double expected, double measured, double tol);
  /// |measured - expected| <= tol * |expected|.
  ReportEntry& check_relative(std::string id, std::string group, int criterion, std::string ref,
                              double expected, double measured, double tol);
  /// measured < tol; expected is recorded as 0.
  ReportEntry& check_below(std::string id, std::string group, int criterion, std::string ref,
                           double measured, double tol);
  /// Recorded but never failing; pass mirrors measured < tol.
  ReportEntry& record(std::string id, std::string group, std::string ref, double expected,
                      double measured, double tol);

  void append(const VerificationReport& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace brocard

#endif
