#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvstop/qmetric.hpp"
#include "mvstop/report.hpp"
#include "mvstop/topology.hpp"

namespace mvstop {

/// A binary relation on {0, ..., n-1}, stored row-wise: row(x) = U[x] =
/// {y : (x, y) ∈ U}.
class Entourage {
 public:
  Entourage() = default;
  explicit Entourage(std::size_t n) : rows_(n, Subset(n)) {}

  static Entourage diagonal(std::size_t n);
  static Entourage full(std::size_t n);
  static Entourage from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  void set(std::size_t x, std::size_t y) { rows_[x].set(y); }
  const Subset& row(std::size_t x) const { return rows_[x]; }

  std::size_t count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  Entourage inverse() const;
  bool is_subset_of(const Entourage& other) const;
  bool contains_diagonal() const;

  Entourage operator&(const Entourage& other) const;
  Entourage operator|(const Entourage& other) const;
  bool operator==(const Entourage& other) const { return rows_ == other.rows_; }
  bool operator<(const Entourage& other) const { return rows_ < other.rows_; }

 private:
  std::vector<Subset> rows_;
};

/// A∘B: (x, z) such that (x, y) ∈ B and (y, z) ∈ A for some y. The right
/// operand is applied first.
Entourage compose(const Entourage& a, const Entourage& b);

struct BaseAxioms {
  bool ub1 = false;  // Δ ⊆ U
  bool ub2 = false;  // some W ⊆ U ∩ V
  bool ub3 = false;  // some V with V∘V ⊆ U
  std::vector<Violation> failures;

  bool ok() const { return ub1 && ub2 && ub3; }
};

BaseAxioms check_base_axioms(const std::vector<Entourage>& members);

/// A validated base of a quasiuniformity. The quasiuniformity itself is the
/// up-closure of the members and is never materialised.
class EntourageBase {
 public:
  std::size_t size() const { return members_.empty() ? 0 : members_.front().size(); }
  const std::vector<Entourage>& members() const { return members_; }
  /// Every member's inverse contains some member.
  bool symmetric_closure() const { return symmetric_closure_; }

 private:
  friend Checked<EntourageBase> validate_base(std::vector<Entourage>);
  explicit EntourageBase(std::vector<Entourage> members);

  std::vector<Entourage> members_;
  bool symmetric_closure_ = false;
};

/// Drops repeated members (first occurrence wins), then checks (UB1)-(UB3).
/// An empty family or mixed carriers throw InputError.
Checked<EntourageBase> validate_base(std::vector<Entourage> members);

/// U belongs to the quasiuniformity iff it contains some base member.
bool in_quasiuniformity(const EntourageBase& base, const Entourage& u);

/// x ↦ {U[x] : U in the base}.
NbhdSystem base_system(const EntourageBase& base);
FiniteTopology base_topology(const EntourageBase& base);

/// Each member of either base contains a member of the other, i.e. both are
/// bases of the same quasiuniformity.
bool mutually_cofinal(const EntourageBase& a, const EntourageBase& b);

/// Compares the topologies of two bases of one quasiuniformity. Throws
/// HypothesisError when the bases are not mutually cofinal.
bool bases_same_topology(const EntourageBase& a, const EntourageBase& b);

/// Every member's inverse is in the quasiuniformity, so the base generates
/// a uniformity.
bool check_uniformity(const EntourageBase& base);

/// U_m = {(x, y) : d(x,y) ⊴ m} for m ∈ M*.
Entourage closed_entourage(const QmSpace& q, Element m);

struct QmBase {
  EntourageBase base;
  std::vector<std::size_t> member_of;  // m ↦ index of U_m in base.members(); unused at e
  Report report;
};

/// Base {U_m : m ∈ M*} of the quasiuniformity of a quasimetric space over an
/// atom-free M, with the checks that it induces the same topology.
QmBase base_from_qm(const QmSpace& q);

}  // namespace mvstop
