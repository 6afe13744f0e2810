#include "rindler/format.hpp"
#include "rindler/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace rindler {

std::string format_sci17(double value) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 16);
  return std::string(buf, r.ptr);
}

std::string format_short(double value) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, r.ptr);
}

} // namespace rindler

namespace rindler::oracle {

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + '"';
}

double badness(const Check &c) {
  return c.tolerance > 0.0 ? c.rel_error / c.tolerance : c.rel_error;
}

} // namespace

Check make_check(std::string id, std::string inputs, double computed,
                 double reference, double tolerance, double abs_floor) {
  Check c;
  c.id = std::move(id);
  c.inputs = std::move(inputs);
  c.computed = computed;
  c.reference = reference;
  c.tolerance = tolerance;
  c.rel_error = std::abs(computed - reference) / std::max(std::abs(reference), abs_floor);
  // NaN compares false, so a non-finite result never passes
  c.passed = c.rel_error <= tolerance;
  return c;
}

void VerificationReport::add(Check check) { checks_.push_back(std::move(check)); }

void VerificationReport::merge(const VerificationReport &other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::vector<Check> VerificationReport::checks() const {
  std::vector<Check> sorted = checks_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check &a, const Check &b) { return a.id < b.id; });
  return sorted;
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto &c : checks()) {
    ++s.total;
    if (c.informational) {
      ++s.informational;
      continue;
    }
    if (c.passed)
      ++s.passed;
    else
      ++s.failed;
    if (!s.worst || badness(c) > badness(*s.worst) || std::isnan(badness(c)))
      s.worst = c;
  }
  return s;
}

bool VerificationReport::all_passed() const { return summary().failed == 0; }

void VerificationReport::override_tolerance(double tolerance) {
  for (auto &c : checks_) {
    c.tolerance = tolerance;
    c.passed = c.rel_error <= tolerance;
  }
}

void VerificationReport::write_text(std::ostream &out) const {
  for (const auto &c : checks()) {
    out << (c.informational ? "INFO" : c.passed ? "PASS" : "FAIL") << ' ' << c.id << ' '
        << c.inputs << " computed=" << format_short(c.computed)
        << " reference=" << format_short(c.reference)
        << " rel_error=" << format_short(c.rel_error)
        << " tol=" << format_short(c.tolerance);
    if (!c.note.empty())
      out << " # " << c.note;
    out << '\n';
  }
  const auto s = summary();
  out << "summary: " << s.total << " checks, " << s.passed << " passed, " << s.failed
      << " failed, " << s.informational << " informational";
  if (s.worst)
    out << "; worst " << s.worst->id << " rel_error=" << format_short(s.worst->rel_error)
        << " tol=" << format_short(s.worst->tolerance);
  out << '\n';
}

void VerificationReport::write_csv(std::ostream &out) const {
  out << "id,inputs,computed,reference,rel_error,tolerance,passed,informational,note\n";
  for (const auto &c : checks()) {
    out << csv_field(c.id) << ',' << csv_field(c.inputs) << ',' << format_sci17(c.computed)
        << ',' << format_sci17(c.reference) << ',' << format_sci17(c.rel_error) << ','
        << format_sci17(c.tolerance) << ',' << (c.passed ? "true" : "false") << ','
        << (c.informational ? "true" : "false") << ',' << csv_field(c.note) << '\n';
  }
}

} // namespace rindler::oracle
