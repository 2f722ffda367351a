#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "mvstop/error.hpp"
#include "mvstop/subset.hpp"

namespace mvstop {

/// A topology on {0, ..., n-1}.
///
/// Every finite topology is Alexandrov, so it is stored by the smallest open
/// neighbourhood U(x) of each point. A set V is open iff U(x) ⊆ V for every
/// x in V, and two topologies are equal iff their U(x) agree pointwise. The
/// family of open sets is enumerated on demand.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  /// Builds from candidate minimal neighbourhoods. Requires x ∈ U(x) and
  /// y ∈ U(x) ⇒ U(y) ⊆ U(x); throws InputError otherwise.
  static FiniteTopology from_minimal(std::vector<Subset> minimal);

  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology indiscrete(std::size_t n);

  std::size_t size() const { return minimal_.size(); }
  const Subset& minimal_neighbourhood(std::size_t x) const { return minimal_.at(x); }
  const std::vector<Subset>& minimal_neighbourhoods() const { return minimal_; }

  bool is_open(const Subset& v) const;
  /// All open sets, ascending by numeric value. Throws InputError when the
  /// family would exceed `limit` members.
  Family opens(std::size_t limit = std::size_t{1} << 22) const;
  std::size_t count_opens() const { return opens().size(); }

  /// x ⤳ y: every open set containing x also contains y.
  bool specializes(std::size_t x, std::size_t y) const { return minimal_.at(x).test(y); }

  bool operator==(const FiniteTopology& other) const { return minimal_ == other.minimal_; }

 private:
  explicit FiniteTopology(std::vector<Subset> minimal) : minimal_(std::move(minimal)) {}
  std::vector<Subset> minimal_;
};

/// Coarsest topology containing every member of `subbase`: the unions of
/// finite intersections of subbase members.
FiniteTopology generate_topology(std::size_t n, const Family& subbase);

/// Accepts an explicit family of open sets; reports the first pair whose
/// union or intersection is missing, or a missing ∅ / X.
Checked<FiniteTopology> topology_from_opens(std::size_t n, const Family& opens);

/// Generates the topology of `u` and of its sub-family `v` and compares them.
/// Requires v ⊆ u and every member of u to be a union of members of v;
/// throws HypothesisError when that fails.
bool subbase_reduction_equivalent(std::size_t n, const Family& u, const Family& v);

/// Per-point families of subsets, B(x) ≠ ∅.
struct NbhdSystem {
  std::vector<Family> at;

  std::size_t size() const { return at.size(); }
};

struct NbhdAxioms {
  bool b1 = false;
  bool b2 = false;
  bool b3 = false;
  bool b3_open = false;  // (B3')
  std::vector<Violation> failures;

  bool neighbourhood_system() const { return b1 && b2 && b3; }
  bool open_system() const { return b1 && b2 && b3_open; }
};

/// Evaluates (B1), (B2), (B3) and (B3') independently, with one witness per
/// failing axiom. Throws InputError when some B(x) is empty or a member is
/// not a subset of the carrier.
NbhdAxioms validate_nbhd_system(const NbhdSystem& b);

/// {V : every x ∈ V has some U ∈ B(x) with U ⊆ V}. Throws InputError when
/// the system fails (B1)-(B3).
FiniteTopology topology_of(const NbhdSystem& b);

/// Mutual pointwise refinement: each member of a(x) contains a member of
/// b(x), and conversely.
bool systems_equivalent(const NbhdSystem& a, const NbhdSystem& b);

/// The open neighbourhood system x ↦ {U(x)}.
NbhdSystem minimal_system(const FiniteTopology& t);

using MapTarget = std::variant<FiniteTopology, NbhdSystem>;

struct InducingMap {
  MapTarget target;
  std::vector<std::size_t> map;  // point of the domain -> point of the target
};

/// Topology on n points induced by a family of maps: generated by the
/// preimages of open sets. For neighbourhood-system targets both the
/// preimages of neighbourhoods and of all open sets are generated and must
/// agree (otherwise InternalError).
FiniteTopology induced_by_maps(std::size_t n, const std::vector<InducingMap>& maps);

/// Trace of `t` on `a`, re-indexed onto the members of `a` in ascending order.
FiniteTopology relative_topology(const FiniteTopology& t, const Subset& a);

/// Product topology; the point (x, y) has index x * b.size() + y.
FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b);

std::vector<Subset> min_neighbourhoods(const FiniteTopology& t);

/// Decides openness of `v` from the relative topologies of the members of
/// an open cover: for every x ∈ v and every member C ∋ x, some set open in
/// C contains x and lies in v. The result is cross-checked against is_open.
bool is_open_via_cover(const FiniteTopology& t, const Family& cover, const Subset& v);

struct CoverData {
  Family cover;
  Family refinement;
  std::vector<std::size_t> assignment;  // refinement[j] ⊆ cover[assignment[j]]
};

/// Open refinement of an open cover. On a finite carrier any cover is
/// point-finite, so the refinement is the cover itself with duplicates and
/// redundant members removed: members are visited by (size, value) and
/// dropped while the rest still covers. Survivors keep their cover order.
CoverData point_finite_refinement(const FiniteTopology& t, const Family& cover);

/// Distinct topologies on n <= 4 labelled points, obtained by generating
/// from every family of subsets. Sorted by minimal neighbourhoods.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

/// Independent route: number of families of subsets of an n-point set
/// (n <= 4) that contain ∅ and X and are closed under ∪ and ∩.
std::size_t count_closed_families(std::size_t n);

}  // namespace mvstop
