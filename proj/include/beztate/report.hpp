#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace beztate {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  /// Where the check was evaluated, e.g. {p, t} or {b}.
  std::vector<int> location;
  Status status = Status::pass;
  std::string detail;
  double duration_ms = 0.0;
};

/// Outcome of a batch of checks.  The overall status is pass iff every
/// check passed; inconclusive beats pass but not fail.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(CheckResult c) { checks_.push_back(std::move(c)); }
  void add(std::string name, std::vector<int> location, bool ok, std::string detail = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const Report& other);

  Status status() const;
  bool passed() const { return status() == Status::pass; }
  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

/// Runs fn() -> CheckResult and stamps its wall-clock duration.
template <class Fn>
CheckResult timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace beztate
