#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvstop/error.hpp"

namespace mvstop {

/// Index of an element in an MvsTable carrier.
using Element = std::size_t;

/// A finite metric value set: a Cayley table over k labelled elements that
/// passed (M1)-(M4). The derived relations
///   a ⊴ b  iff  a + c = b for some c
///   a ◁ b  iff  a + c = b for some c != e
/// are cached at construction.
class MvsTable {
 public:
  std::size_t size() const { return labels_.size(); }
  Element neutral() const { return neutral_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  std::optional<Element> find(const std::string& label) const;

  Element add(Element a, Element b) const { return table_[a * size() + b]; }
  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  bool lt(Element a, Element b) const { return lt_[a * size() + b] != 0; }

  /// M* in index order.
  std::vector<Element> nonzero() const;
  std::vector<std::vector<Element>> rows() const;

  bool operator==(const MvsTable& other) const {
    return labels_ == other.labels_ && neutral_ == other.neutral_ && table_ == other.table_;
  }

 private:
  friend Checked<MvsTable> validate_mvs(std::vector<std::string>, Element,
                                        const std::vector<std::vector<Element>>&);
  MvsTable(std::vector<std::string> labels, Element neutral, std::vector<Element> table);

  std::vector<std::string> labels_;
  Element neutral_ = 0;
  std::vector<Element> table_;
  std::vector<char> leq_;
  std::vector<char> lt_;
};

using MvsRef = std::shared_ptr<const MvsTable>;

inline MvsRef share(MvsTable m) { return std::make_shared<const MvsTable>(std::move(m)); }

/// Checks (M1)-(M4) in that order. Structural problems (fewer than two
/// elements, ragged table, entries out of range, duplicate labels) throw
/// InputError; axiom failures come back as a Violation tagged "M1".."M4"
/// with the witness that breaks the axiom.
Checked<MvsTable> validate_mvs(std::vector<std::string> labels, Element neutral,
                               const std::vector<std::vector<Element>>& table);

bool is_commutative(const MvsTable& m);
/// Commutative, and every m in M* has some n in M* with n ◁ m.
bool is_atom_free(const MvsTable& m);
/// Commutative, and every m in M* has some n in M* with n ◁ m but not m ◁ n.
bool is_strictly_atom_free(const MvsTable& m);

/// ({0,...,k-1}, max). For k = 3 this is the standard atom-free example.
MvsTable max_mvs(std::size_t k = 3);
/// ({0,1,2}, +) with x + y = 2 whenever x, y != 0.
MvsTable collapse_mvs();

/// Metric value set homomorphism: (H1) h(m) = e iff m = e, (H2) additive.
class MvsHom {
 public:
  const MvsRef& source() const { return source_; }
  const MvsRef& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element a) const { return map_.at(a); }
  bool surjective() const;

 private:
  friend Checked<MvsHom> validate_hom(std::vector<Element>, MvsRef, MvsRef);
  MvsHom(std::vector<Element> map, MvsRef s, MvsRef t)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  MvsRef source_;
  MvsRef target_;
  std::vector<Element> map_;
};

Checked<MvsHom> validate_hom(std::vector<Element> map, MvsRef source, MvsRef target);

/// M with an absorbing element adjoined: a + inf = inf + a = inf. The new
/// element is the last index and is labelled "inf" (primed until unique).
MvsTable adjoin_infinity(const MvsTable& m);

/// m + m + ... + m with `n` summands, n >= 1.
Element n_times(const MvsTable& m, Element a, std::size_t n);

/// Smallest m' in M* with n·m' ⊴ m, if any. `m` must be in M*.
std::optional<Element> find_subdivision(const MvsTable& m, Element target, std::size_t n);

/// Smallest m in M* lying ⊴ below every input. Inputs must be in M*.
std::optional<Element> common_lower_bound(const MvsTable& m, const std::vector<Element>& xs);

struct EnumeratedMvs {
  MvsTable table;
  bool commutative = false;
  bool atom_free = false;
  bool strictly_atom_free = false;
};

/// Every MVS on k elements (2 <= k <= 5) with neutral element at index 0,
/// optionally one per isomorphism class. Labels are "0".."k-1".
std::vector<EnumeratedMvs> enumerate_mvs(std::size_t k, bool up_to_iso);

}  // namespace mvstop

namespace mvstop {

/// Independent route for small orders (k <= 4): scans every table whose
/// row and column of the neutral element are fixed and keeps those that
/// validate. Used to cross-check enumerate_mvs.
std::vector<MvsTable> enumerate_mvs_exhaustive(std::size_t k);

}  // namespace mvstop
