#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace salock::schedules {

enum class Kind { PowerLaw, LogPower, Explicit };

/// A positive, non-increasing step-size sequence a(n), defined for
/// n >= offset(). Three families:
///   PowerLaw:  a(n) = 1/n^k,            1/2 < k <= 1, offset >= 1
///   LogPower:  a(n) = 1/(n (log n)^p),  0 < p <= 1,   offset >= 2
///   Explicit:  user array, indexed from offset
class StepSchedule {
 public:
  static StepSchedule power_law(double k, std::int64_t offset = 1);
  static StepSchedule log_power(double p, std::int64_t offset = 2);
  static StepSchedule explicit_steps(std::vector<double> values, std::int64_t offset = 1);

  Kind kind() const { return kind_; }
  /// k for PowerLaw, p for LogPower; unset for Explicit.
  double exponent() const { return exponent_; }
  std::int64_t offset() const { return offset_; }
  /// Largest valid index (Explicit only); INT64_MAX otherwise.
  std::int64_t last_index() const;
  const std::vector<double>& values() const { return values_; }

  /// a(n); throws ValidationError if n is out of range.
  double step(std::int64_t n) const;

  /// t(n) = sum_{m=offset}^{n-1} a(m); t(offset) = 0.
  double t_of(std::int64_t n) const;

  bool operator==(const StepSchedule&) const = default;

 private:
  StepSchedule() = default;
  Kind kind_ = Kind::PowerLaw;
  double exponent_ = 1.0;
  std::int64_t offset_ = 1;
  std::vector<double> values_;
};

struct TailSum {
  double value = 0.0;
  /// Certified absolute error bound. For truncated Explicit tails the cut
  /// mass is unknown and this is +infinity.
  double error = 0.0;
  bool truncated = false;
};

/// s(n0) = sum_{m=n0}^inf a(m)^2 to absolute accuracy tol.
/// Partial sums plus an Euler-Maclaurin corrected integral remainder;
/// the returned error bound covers the remainder truncation.
/// Explicit schedules carry no tail model: the stored suffix is summed
/// and the result is flagged truncated.
TailSum s_tail(const StepSchedule& sched, std::int64_t n0, double tol = 1e-10);

/// Closed-form upper bound on s(n) for a(n) = 1/n^k:
/// 1 / ((2k-1) (n/2)^(2k-1)), valid for 1/2 < k <= 1, n >= 2.
double s_tail_bound(double k, std::int64_t n);

struct CertificateReport {
  bool finite = false;
  double value = 0.0;        // partial sum of 4d exp(-C/s(n0)) over n0 < tail_from
  double tail_bound = 0.0;   // certified bound on the omitted tail
  std::int64_t terms = 0;
  std::int64_t tail_from = 0;
};

/// Certifies finiteness of  sum_{n0 >= n_start} 4 d exp(-C / s(n0))
/// by direct summation plus a dominating-series tail: substituting the
/// closed-form bound on s(n) makes each term at most n^-2 beyond a
/// computable threshold. PowerLaw and LogPower only.
CertificateReport summability_certificate(const StepSchedule& sched, double C, int d,
                                          std::int64_t n_start, double tail_tol = 1e-9);

/// Schedule literals: "power:k=0.75", "logpower:p=1.0",
/// "explicit:@steps.csv" (one positive real per line) or
/// "explicit:0.5,0.25" inline.
StepSchedule parse_schedule_literal(std::string_view text);
std::string schedule_literal(const StepSchedule& sched);

}  // namespace salock::schedules
