#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mvstop {

enum class Status { Pass, Fail, Info, Partial };

const char* to_string(Status s);

/// One checked statement. `anchor` names the result the statement comes
/// from, `statement` is the clause itself.
struct Clause {
  std::string anchor;
  std::string statement;
  Status status = Status::Info;
  std::string detail;
};

/// Ordered list of checked clauses, rendered as text or JSON with the same
/// content and order.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Records a PASS or FAIL clause and returns `ok`.
  bool check(std::string anchor, std::string statement, bool ok, std::string detail = {});
  void info(std::string anchor, std::string statement, std::string detail = {});
  void partial(std::string anchor, std::string statement, std::string detail = {});

  /// Appends every clause of `other`.
  void merge(const Report& other);

  bool all_pass() const;
  bool has_partial() const;
  /// First failing clause, or nullptr.
  const Clause* first_failure() const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string title_;
  std::vector<Clause> clauses_;
};

}  // namespace mvstop
