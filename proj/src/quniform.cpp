#include "mvstop/quniform.hpp"

#include <algorithm>
#include <limits>

namespace mvstop {

namespace {

const char* kBase = "bases of a quasiuniformity";
const char* kQmBase = "quasimetric spaces as quasiuniform spaces";

}  // namespace

Entourage Entourage::diagonal(std::size_t n) {
  Entourage u(n);
  for (std::size_t x = 0; x < n; ++x) u.set(x, x);
  return u;
}

Entourage Entourage::full(std::size_t n) {
  Entourage u(n);
  for (auto& r : u.rows_) r.set();
  return u;
}

Entourage Entourage::from_pairs(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Entourage u(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("entourage pair outside the carrier");
    u.set(x, y);
  }
  return u;
}

std::size_t Entourage::count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Entourage::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y = rows_[x].find_first(); y != Subset::npos; y = rows_[x].find_next(y))
      out.emplace_back(x, y);
  return out;
}

Entourage Entourage::inverse() const {
  Entourage out(size());
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y = rows_[x].find_first(); y != Subset::npos; y = rows_[x].find_next(y)) out.set(y, x);
  return out;
}

bool Entourage::is_subset_of(const Entourage& other) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  return true;
}

bool Entourage::contains_diagonal() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!rows_[x].test(x)) return false;
  return true;
}

Entourage Entourage::operator&(const Entourage& other) const {
  Entourage out(*this);
  for (std::size_t x = 0; x < size(); ++x) out.rows_[x] &= other.rows_[x];
  return out;
}

Entourage Entourage::operator|(const Entourage& other) const {
  Entourage out(*this);
  for (std::size_t x = 0; x < size(); ++x) out.rows_[x] |= other.rows_[x];
  return out;
}

Entourage compose(const Entourage& a, const Entourage& b) {
  if (a.size() != b.size()) throw InputError("compose: relations on different carriers");
  const auto n = a.size();
  Entourage out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Subset r(n);
    const auto& bx = b.row(x);
    for (auto y = bx.find_first(); y != Subset::npos; y = bx.find_next(y)) r |= a.row(y);
    for (auto z = r.find_first(); z != Subset::npos; z = r.find_next(z)) out.set(x, z);
  }
  return out;
}

BaseAxioms check_base_axioms(const std::vector<Entourage>& members) {
  BaseAxioms ax;
  ax.ub1 = ax.ub2 = ax.ub3 = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!members[i].contains_diagonal()) {
      ax.ub1 = false;
      ax.failures.push_back({"UB1", {i}, "member does not contain the diagonal"});
      break;
    }
  for (std::size_t i = 0; i < members.size() && ax.ub2; ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto meet = members[i] & members[j];
      if (std::none_of(members.begin(), members.end(),
                       [&](const Entourage& w) { return w.is_subset_of(meet); })) {
        ax.ub2 = false;
        ax.failures.push_back({"UB2", {i, j}, "no member inside the intersection"});
        break;
      }
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    if (std::none_of(members.begin(), members.end(), [&](const Entourage& v) {
          return compose(v, v).is_subset_of(members[i]);
        })) {
      ax.ub3 = false;
      ax.failures.push_back({"UB3", {i}, "no member V with V∘V inside this member"});
      break;
    }
  return ax;
}

EntourageBase::EntourageBase(std::vector<Entourage> members) : members_(std::move(members)) {
  symmetric_closure_ = std::all_of(members_.begin(), members_.end(), [&](const Entourage& u) {
    const auto inv = u.inverse();
    return std::any_of(members_.begin(), members_.end(),
                       [&](const Entourage& w) { return w.is_subset_of(inv); });
  });
}

Checked<EntourageBase> validate_base(std::vector<Entourage> members) {
  if (members.empty()) throw InputError("a base needs at least one member");
  const auto n = members.front().size();
  std::vector<Entourage> unique;
  for (auto& m : members) {
    if (m.size() != n) throw InputError("base members live on different carriers");
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(std::move(m));
  }
  const auto ax = check_base_axioms(unique);
  if (!ax.ok()) return ax.failures.front();
  return EntourageBase(std::move(unique));
}

bool in_quasiuniformity(const EntourageBase& base, const Entourage& u) {
  if (u.size() != base.size()) throw InputError("entourage over the wrong carrier");
  return std::any_of(base.members().begin(), base.members().end(),
                     [&](const Entourage& b) { return b.is_subset_of(u); });
}

NbhdSystem base_system(const EntourageBase& base) {
  NbhdSystem b;
  for (std::size_t x = 0; x < base.size(); ++x) {
    Family bx;
    for (const auto& u : base.members()) bx.push_back(u.row(x));
    b.at.push_back(std::move(bx));
  }
  return b;
}

FiniteTopology base_topology(const EntourageBase& base) {
  const auto sys = base_system(base);
  const auto ax = validate_nbhd_system(sys);
  if (!ax.neighbourhood_system())
    throw InternalError("a valid base produced a system failing (B1)-(B3): " +
                        ax.failures.front().describe());
  return topology_of(sys);
}

bool mutually_cofinal(const EntourageBase& a, const EntourageBase& b) {
  if (a.size() != b.size()) return false;
  auto below = [](const EntourageBase& x, const EntourageBase& y) {
    return std::all_of(x.members().begin(), x.members().end(),
                       [&](const Entourage& u) { return in_quasiuniformity(y, u); });
  };
  return below(a, b) && below(b, a);
}

bool bases_same_topology(const EntourageBase& a, const EntourageBase& b) {
  if (!mutually_cofinal(a, b))
    throw HypothesisError("the bases do not generate the same quasiuniformity");
  return base_topology(a) == base_topology(b);
}

bool check_uniformity(const EntourageBase& base) {
  return std::all_of(base.members().begin(), base.members().end(),
                     [&](const Entourage& u) { return in_quasiuniformity(base, u.inverse()); });
}

Entourage closed_entourage(const QmSpace& q, Element m) {
  Entourage u(q.size());
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (q.values().leq(q.d(x, y), m)) u.set(x, y);
  return u;
}

QmBase base_from_qm(const QmSpace& q) {
  const auto& m = q.values();
  if (!is_atom_free(m)) throw HypothesisError("base_from_qm requires an atom-free value set");
  const auto star = m.nonzero();
  std::vector<Entourage> by_value(m.size());
  for (auto a : star) by_value[a] = closed_entourage(q, a);

  Report r("quasiuniform base");
  bool ub2 = true;
  std::string ub2_detail;
  for (auto a : star)
    for (auto b : star) {
      const auto c = common_lower_bound(m, {a, b});
      if (!c || !by_value[*c].is_subset_of(by_value[a] & by_value[b])) {
        ub2 = false;
        ub2_detail = "at (" + m.label(a) + "," + m.label(b) + ")";
      }
    }
  bool ub3 = true;
  std::string ub3_detail;
  for (auto a : star) {
    const auto half = find_subdivision(m, a, 2);
    if (!half) {
      ub3 = false;
      ub3_detail = "no m2 with m2+m2 ⊴ " + m.label(a);
    } else if (!compose(by_value[*half], by_value[*half]).is_subset_of(by_value[a])) {
      ub3 = false;
      ub3_detail = "U_" + m.label(*half) + "∘U_" + m.label(*half) + " not inside U_" + m.label(a);
    }
  }
  std::vector<Entourage> members;
  for (auto a : star) members.push_back(by_value[a]);
  r.check(kQmBase, "(UB1) every U_m contains the diagonal", check_base_axioms(members).ub1);
  r.check(kQmBase, "(UB2) U_c ⊆ U_a ∩ U_b for a common lower bound c", ub2, ub2_detail);
  r.check(kQmBase, "(UB3) U_h∘U_h ⊆ U_m for h with h+h ⊴ m", ub3, ub3_detail);

  auto checked = validate_base(members);
  if (!checked)
    throw TheoremFailure("U_m family is not a quasiuniform base: " + checked.violation().describe());
  QmBase out{std::move(checked).value(), std::vector<std::size_t>(m.size(), std::numeric_limits<std::size_t>::max()),
             Report()};
  for (auto a : star) {
    const auto& ms = out.base.members();
    out.member_of[a] = static_cast<std::size_t>(std::find(ms.begin(), ms.end(), by_value[a]) - ms.begin());
  }
  r.check(kBase, "family satisfies (UB1)-(UB3) literally", true);

  bool rows = true;
  for (std::size_t x = 0; x < q.size(); ++x)
    for (auto a : star) rows = rows && by_value[a].row(x) == ball(q, x, a, BallKind::Closed);
  r.check(kQmBase, "U_m[x] equals the closed ball of radius m at x", rows);
  r.check(kQmBase, "topology of the base equals the topology of f",
          base_topology(out.base) == induced_topology(q));
  if (q.symmetric()) {
    bool sym = true;
    for (auto a : star) sym = sym && by_value[a] == by_value[a].inverse();
    r.check(kQmBase, "symmetric f gives U_m = U_m^-1", sym);
    r.check(kQmBase, "symmetric f gives a base of a uniformity", check_uniformity(out.base));
  }
  out.report = std::move(r);
  return out;
}

}  // namespace mvstop
