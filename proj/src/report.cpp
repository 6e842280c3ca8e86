#include "brocard/report.hpp"

#include <cmath>

namespace brocard {

namespace {

// A NaN measurement always fails; the comparison below is written so that it
// does.
bool within(double measured, double expected, double bound) {
  return std::abs(measured - expected) <= bound;
}

}  // namespace

ReportEntry& VerificationReport::check_close(std::string id, std::string group, int criterion,
                                             std::string ref, double expected, double measured,
                                             double tol) {
  entries_.push_back({std::move(id), std::move(group), criterion, std::move(ref), expected,
                      measured, tol, within(measured, expected, tol), {}});
  return entries_.back();
}

ReportEntry& VerificationReport::check_relative(std::string id, std::string group,
                                                int criterion, std::string ref, double expected,
                                                double measured, double tol) {
  entries_.push_back({std::move(id), std::move(group), criterion, std::move(ref), expected,
                      measured, tol, within(measured, expected, tol * std::abs(expected)), {}});
  entries_.back().note = "relative tolerance";
  return entries_.back();
}

ReportEntry& VerificationReport::check_below(std::string id, std::string group, int criterion,
                                             std::string ref, double measured, double tol) {
  entries_.push_back({std::move(id), std::move(group), criterion, std::move(ref), 0.0, measured,
                      tol, measured < tol, {}});
  return entries_.back();
}

ReportEntry& VerificationReport::record(std::string id, std::string group, std::string ref,
                                        double expected, double measured, double tol) {
  entries_.push_back({std::move(id), std::move(group), 0, std::move(ref), expected, measured,
                      tol, measured < tol, "informational"});
  return entries_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& e : entries_) n += (e.criterion == 0 || e.pass) ? 1 : 0;
  return n;
}

int VerificationReport::failed() const {
  return static_cast<int>(entries_.size()) - passed();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j;
    j["id"] = e.id;
    j["group"] = e.group;
    j["criterion"] = e.criterion;
    j["paper_ref"] = e.paper_ref;
    j["expected"] = e.expected;
    j["measured"] = e.measured;
    j["tol"] = e.tol;
    j["pass"] = e.pass;
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(std::move(j));
  }
  return {{"entries", arr}, {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  for (const auto& e : j.at("entries")) {
    ReportEntry x;
    x.id = e.at("id").get<std::string>();
    x.group = e.value("group", std::string{});
    x.criterion = e.value("criterion", 0);
    x.paper_ref = e.at("paper_ref").get<std::string>();
    x.expected = e.at("expected").is_null() ? NAN : e.at("expected").get<double>();
    x.measured = e.at("measured").is_null() ? NAN : e.at("measured").get<double>();
    x.tol = e.at("tol").get<double>();
    x.pass = e.at("pass").get<bool>();
    x.note = e.value("note", std::string{});
    r.entries_.push_back(std::move(x));
  }
  return r;
}

}  // namespace brocard
