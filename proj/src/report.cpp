#include "mvstop/report.hpp"

#include <sstream>

#include "mvstop/error.hpp"

namespace mvstop {

std::string Violation::describe() const {
  std::ostringstream os;
  os << "(" << axiom << ") violated";
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  if (!message.empty()) os << ": " << message;
  return os.str();
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Info: return "INFO";
    case Status::Partial: return "PARTIAL";
  }
  return "?";
}

bool Report::check(std::string anchor, std::string statement, bool ok, std::string detail) {
  clauses_.push_back({std::move(anchor), std::move(statement), ok ? Status::Pass : Status::Fail,
                      std::move(detail)});
  return ok;
}

void Report::info(std::string anchor, std::string statement, std::string detail) {
  clauses_.push_back({std::move(anchor), std::move(statement), Status::Info, std::move(detail)});
}

void Report::partial(std::string anchor, std::string statement, std::string detail) {
  clauses_.push_back({std::move(anchor), std::move(statement), Status::Partial, std::move(detail)});
}

void Report::merge(const Report& other) {
  clauses_.insert(clauses_.end(), other.clauses_.begin(), other.clauses_.end());
}

bool Report::all_pass() const { return first_failure() == nullptr; }

bool Report::has_partial() const {
  for (const auto& c : clauses_)
    if (c.status == Status::Partial) return true;
  return false;
}

const Clause* Report::first_failure() const {
  for (const auto& c : clauses_)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << " ==\n";
  for (const auto& c : clauses_) {
    os << "[" << to_string(c.status) << "] " << c.anchor << ": " << c.statement << "\n";
    if (!c.detail.empty()) os << "    " << c.detail << "\n";
  }
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["title"] = title_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : clauses_) {
    nlohmann::ordered_json j;
    j["status"] = to_string(c.status);
    j["anchor"] = c.anchor;
    j["statement"] = c.statement;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  out["clauses"] = std::move(arr);
  return out;
}

}  // namespace mvstop
