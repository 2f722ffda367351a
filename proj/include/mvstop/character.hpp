#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvstop/qmetric.hpp"
#include "mvstop/quniform.hpp"
#include "mvstop/report.hpp"

namespace mvstop {

/// d(x,y) = first + second, recorded when no z has d(x,z) = first and
/// d(z,y) = second.
struct Decomposition {
  std::size_t x = 0;
  std::size_t y = 0;
  Element first = 0;
  Element second = 0;
};

struct FullConvexReport {
  bool full = false;
  std::vector<Element> missing;  // values of M never attained by d
  bool convex = false;
  std::size_t unrealized_count = 0;
  std::vector<Decomposition> unrealized;  // at most the requested number of witnesses
};

/// Surjectivity of d onto M, and condition (C): every decomposition
/// m2 + m3 = d(x,y) is realized by some midpoint z.
FullConvexReport full_convex_report(const QmSpace& q, std::size_t max_witnesses = 64);

/// A space containing the input isometrically: inclusion[x] is the image of
/// input point x.
struct Embedding {
  QmSpace space;
  std::vector<std::size_t> inclusion;
  Report report;
};

/// X × M with d*((x1,m1),(x2,m2)) = m1 + d(x1,x2) + m2 off the diagonal.
/// Point (x, m) has index x * |M| + m. The empty space maps to (M, f_M).
/// Requires commutative M.
Embedding embed_full(const QmSpace& q);

/// Number of points convexify_stage would produce.
std::size_t convexify_stage_size(const QmSpace& q);

/// One convexification stage: all quadruples (x1, m1, m2, x2) with
/// m1 + m2 = d(x1, x2), where (x, e, e, x) is identified with x, and
///   d2(p, q) = p.m2 + d(p.x2, q.x1) + q.m1   for p != q.
/// Old points keep their indices; new points follow in (x1, x2, m1, m2)
/// order. Requires commutative M.
Embedding convexify_stage(const QmSpace& q);

struct ConvexifyResult {
  QmSpace space;
  std::vector<std::size_t> inclusion;
  std::size_t stages = 0;
  bool convex = false;  // false means a partial result: a budget ran out first
  std::string stop_reason;
  Report report;
};

/// Repeats convexify_stage until the space is convex, `max_stages` stages
/// have run, or the next stage would exceed `max_points` points.
ConvexifyResult convexify_until(const QmSpace& q, std::size_t max_stages,
                                std::size_t max_points = 5000);

/// The entourage value set (V, +) of a full convex space: V = {U0} ∪ {U_m},
/// U + V = ⋂{W ∈ V : V∘U ⊆ W}.
struct EntourageMvs {
  std::vector<Entourage> family;  // family[0] = U0, then V* in order of first m
  std::vector<std::string> names;
  MvsRef table;                      // labels are `names`
  std::vector<std::size_t> hom;      // m ↦ index of U_m (e ↦ 0)
  Report report;

  Entourage u0() const { return family.front(); }
  std::vector<Entourage> star() const { return {family.begin() + 1, family.end()}; }
};

/// Requires a full, convex space over an atom-free M (HypothesisError
/// naming the failing clause otherwise). Checks (Q1)-(Q4), the sum rule
/// U_m + U_m' = U_{m+m'}, the order correspondence, and that m ↦ U_m is a
/// surjective homomorphism. A failure of any of these throws TheoremFailure
/// if it prevents building the table, and is a FAIL clause otherwise.
EntourageMvs entourage_mvs(const QmSpace& q);

struct MetrizedBase {
  QmSpace space;                 // values in (V, +)
  std::vector<Entourage> family; // family[0] = U0
  Report report;
};

/// Builds (V, +) from U0 and a base V* satisfying (UB1)-(UB3) and (Q1)-(Q3)
/// and sets d(x,y) = U_{x,y}. `names` labels the base members (defaults to
/// U1, U2, ...). Hypothesis failures throw HypothesisError with the
/// witness; atom-freeness of (V, +) is reported but not required.
MetrizedBase metrize_from_base(std::vector<std::string> points, const Entourage& u0,
                               const std::vector<Entourage>& base,
                               std::vector<std::string> names = {});

struct RoundtripResult {
  Report report;
  bool complete = false;  // false: stopped at the convexification budget
  std::optional<QmSpace> final_space;
  std::vector<std::size_t> inclusion;  // original point ↦ point of final_space
};

/// Full pipeline on a space over an atom-free M: embed into a full space
/// (skipped when already full), convexify, build (V, +), metrize from the
/// resulting base, and check that the original topology is the relative
/// topology of its image.
RoundtripResult roundtrip(const QmSpace& q, std::size_t max_stages = 4,
                          std::size_t max_points = 5000);

}  // namespace mvstop
