#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mvstop {

/// Malformed input: bad indices, schema violations, wrong sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-level operation was called on data outside its hypotheses
/// (for example a non atom-free MVS where atom-freeness is required).
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when an internal consistency check fails. Seeing one is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The first violated axiom of a candidate structure, with a witness tuple.
struct Violation {
  std::string axiom;                 // e.g. "M3", "f1", "UB3", "Q2"
  std::vector<std::size_t> witness;  // indices into the candidate
  std::string message;

  std::string describe() const;
};

/// Either a validated value or the violation that prevented validation.
template <class T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}
  Checked(Violation v) : state_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw InputError(violation().describe());
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw InputError(violation().describe());
    return std::get<T>(std::move(state_));
  }
  const Violation& violation() const { return std::get<Violation>(state_); }

 private:
  std::variant<T, Violation> state_;
};

}  // namespace mvstop

namespace mvstop {

/// A construction whose correctness is guaranteed by a theorem produced an
/// object that fails validation. Carries the violated clause.
class TheoremFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mvstop
