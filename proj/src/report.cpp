#include "beztate/report.hpp"

namespace beztate {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

void Report::add(std::string name, std::vector<int> location, bool ok, std::string detail) {
  checks_.push_back(CheckResult{std::move(name), std::move(location), ok ? Status::pass : Status::fail,
                                std::move(detail), 0.0});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

Status Report::status() const {
  Status s = Status::pass;
  for (const auto& c : checks_) {
    if (c.status == Status::fail) return Status::fail;
    if (c.status == Status::inconclusive) s = Status::inconclusive;
  }
  return s;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::fail) return &c;
  return nullptr;
}

}  // namespace beztate
