#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mvstop/mvs.hpp"
#include "mvstop/report.hpp"
#include "mvstop/topology.hpp"

namespace mvstop {

/// A finite set with a validated quasimetric function into an MVS:
///   (f1) d(x,z) ⊴ d(x,y) + d(y,z)
///   (f2) d(x,x) = e
class QmSpace {
 public:
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const MvsRef& mvs() const { return mvs_; }
  const MvsTable& values() const { return *mvs_; }

  Element d(std::size_t x, std::size_t y) const { return d_[x * size() + y]; }
  std::vector<std::vector<Element>> rows() const;

  /// (f3): d(x,y) = d(y,x).
  bool symmetric() const { return symmetric_; }
  /// d(x,y) = e only for x = y.
  bool strict() const { return strict_; }

  bool operator==(const QmSpace& other) const {
    return points_ == other.points_ && *mvs_ == *other.mvs_ && d_ == other.d_;
  }

 private:
  friend Checked<QmSpace> validate_qm(std::vector<std::string>, MvsRef,
                                      const std::vector<std::vector<Element>>&);
  QmSpace(std::vector<std::string> points, MvsRef mvs, std::vector<std::uint16_t> d);

  std::vector<std::string> points_;
  MvsRef mvs_;
  std::vector<std::uint16_t> d_;
  bool symmetric_ = false;
  bool strict_ = false;
};

/// Checks (f2) then (f1). Wrong shapes or out-of-range values throw
/// InputError; a failing condition comes back tagged "f2" or "f1" with the
/// witness point (x) or triple (x, y, z).
Checked<QmSpace> validate_qm(std::vector<std::string> points, MvsRef mvs,
                             const std::vector<std::vector<Element>>& d);

std::vector<std::string> default_labels(std::size_t n);

enum class BallKind { Open, Closed };

/// B_f(x,m) = {y : d(x,y) ◁ m}, closed: {y : d(x,y) ⊴ m}.
Subset ball(const QmSpace& q, std::size_t x, Element m, BallKind kind);

/// x ↦ {ball(x, m) : m ∈ M*}, members in M* order.
NbhdSystem ball_system(const QmSpace& q, BallKind kind);

/// Topology whose open neighbourhood base at x is the family of open balls.
/// The open-ball system is checked against (B1), (B2), (B3').
FiniteTopology induced_topology(const QmSpace& q);

/// For atom-free M: the closed-ball system is a neighbourhood system
/// equivalent to the open-ball system. Clauses go to `report` when given.
/// Throws HypothesisError when M is not atom-free.
bool closed_ball_equivalence(const QmSpace& q, Report* report = nullptr);

/// Canonical metric function on a commutative M: d(m,m) = e and
/// d(m,n) = m + n otherwise. Throws HypothesisError on non-commutative M.
QmSpace canonical_metric_function(const MvsRef& m);

/// Result of a construction: the space plus every theorem clause checked
/// on the way.
struct Construction {
  QmSpace space;
  Report report;
};

/// d'(x,x') = d(g(x), g(x')). Checks that the result induces the topology
/// induced by g.
Construction pullback(const QmSpace& q, const std::vector<std::size_t>& g,
                      std::vector<std::string> labels = {});

/// Restriction to a non-empty subset, compared with the relative topology.
Construction restrict(const QmSpace& q, const Subset& a);

struct GluePiece {
  Subset members;  // the cover member, as a subset of the carrier
  QmSpace space;   // quasimetric on the members, in ascending order
};

struct GlueResult {
  QmSpace space;             // over M with ∞ adjoined
  CoverData refinement;      // refinement[j] ⊆ pieces[assignment[j]].members
  std::vector<Subset> cores; // W_x: intersection of the refinement members containing x
  Report report;
};

/// Glues local quasimetrics on an open cover into one quasimetric over M∞:
/// d(x,y) = ∞ outside W_x, otherwise the sum over the refinement members
/// containing x of the local distances. Requires atom-free M, an open
/// cover and local spaces inducing the relative topologies.
GlueResult glue(const FiniteTopology& t, const std::vector<GluePiece>& pieces,
                std::vector<std::string> labels = {});

/// Sum quasimetric on the product carrier (first factor most significant).
/// Checks equivalence with the box neighbourhood system and equality with
/// the product topology.
Construction product(const std::vector<QmSpace>& factors);

/// Strict quasimetric over ({0,1,2}, max) inducing a finite topology:
/// d(x,y) = 1 for y ∈ U(x)\{x}, 2 for y ∉ U(x).
Construction alexandrov_metrize(const FiniteTopology& t, std::vector<std::string> labels = {});

/// Finite-scale version of the cofinite-family construction: over
/// ({0,1,2}, max), d(x,y) = 0 if x = y or both lie in `a`, else 2. Point 0
/// plays the role of the distinguished point and must lie in `a`. This only
/// demonstrates the mechanism; on a finite carrier it is no counterexample.
QmSpace cofinite_family_space(std::size_t n, const Subset& a);

}  // namespace mvstop
