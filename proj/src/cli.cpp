#include "mvstop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "mvstop/character.hpp"
#include "mvstop/corpus.hpp"
#include "mvstop/dot.hpp"
#include "mvstop/io.hpp"

namespace mvstop {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string out_path;
  std::string dot = "lattice";
  std::size_t max_stages = 4;
  std::size_t max_points = 5000;
  std::uint64_t seed = 1;
  bool up_to_iso = false;
  std::size_t order = 3;
  std::size_t points = 3;
  std::string subset;
  std::string mvs_path;
};

struct Outcome {
  Report report;
  std::optional<Json> model;       // written to --out
  std::optional<std::string> dot;  // printed for --format dot
};

const char* kModels = "model checks";

QmSpace read_space(const std::string& path) {
  auto q = space_from_json(load_json(path), fs::path(path).parent_path());
  if (!q) throw InputError(path + ": " + q.violation().describe());
  return std::move(q).value();
}

LabelledTopology read_topology(const std::string& path) {
  auto t = topology_from_json(load_json(path));
  if (!t) throw InputError(path + ": " + t.violation().describe());
  return std::move(t).value();
}

std::string topology_dot(const Options& o, const FiniteTopology& t, const std::vector<std::string>& points) {
  if (o.dot == "preorder") return specialization_dot(t, points);
  if (o.dot == "lattice") return open_lattice_dot(t, points);
  throw InputError("--dot " + o.dot + " is not available for this command");
}

std::string entourage_dot(const Options& o, const std::vector<Entourage>& family,
                          const std::vector<std::string>& names, const FiniteTopology& t,
                          const std::vector<std::string>& points) {
  if (o.dot == "entourages") return inclusion_dot(family, names);
  return topology_dot(o, t, points);
}

std::string describe_minimal(const FiniteTopology& t, const std::vector<std::string>& points) {
  std::string s;
  for (std::size_t x = 0; x < t.size(); ++x)
    s += (x ? " " : "") + points[x] + ":" + format_subset(t.minimal_neighbourhood(x), points);
  return s;
}

void describe_topology(Report& r, const FiniteTopology& t, const std::vector<std::string>& points) {
  r.info(kModels, "minimal open neighbourhoods", describe_minimal(t, points));
  r.info(kModels, "number of open sets", std::to_string(t.count_opens()));
}

std::string classify(const MvsTable& m) {
  std::string s = is_commutative(m) ? "commutative" : "not commutative";
  s += is_atom_free(m) ? ", atom-free" : ", not atom-free";
  s += is_strictly_atom_free(m) ? ", strictly atom-free" : ", not strictly atom-free";
  return s;
}

LabelledBase labelled(const std::vector<std::string>& points, const std::vector<std::string>& names,
                      const std::vector<Entourage>& members, std::optional<Entourage> u0) {
  return LabelledBase{points, names, members, std::move(u0)};
}

Entourage neutral_relation(const QmSpace& q) {
  Entourage u(q.size());
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (q.d(x, y) == q.values().neutral()) u.set(x, y);
  return u;
}

// ---------------------------------------------------------------------------

Outcome check_mvs(const Options& o) {
  Outcome out{Report("check-mvs"), {}, {}};
  auto m = mvs_from_json(load_json(o.inputs[0]));
  if (!m) {
    out.report.check("metric value set axioms", "table satisfies (M1)-(M4)", false, m.violation().describe());
    return out;
  }
  out.report.check("metric value set axioms", "table satisfies (M1)-(M4)", true);
  out.report.info("metric value set axioms", "classification", classify(m.value()));
  out.model = to_json(m.value());
  return out;
}

Outcome check_qmf(const Options& o) {
  Outcome out{Report("check-qmf"), {}, {}};
  auto q = space_from_json(load_json(o.inputs[0]), fs::path(o.inputs[0]).parent_path());
  if (!q) {
    out.report.check("quasimetric functions", "f satisfies (f1) and (f2)", false, q.violation().describe());
    return out;
  }
  const auto& s = q.value();
  out.report.check("quasimetric functions", "f satisfies (f1) and (f2)", true);
  out.report.info("quasimetric functions", s.symmetric() ? "f is symmetric" : "f is not symmetric");
  out.report.info("quasimetric functions", s.strict() ? "f is strict" : "f is not strict");
  const auto t = induced_topology(s);
  describe_topology(out.report, t, s.points());
  out.model = to_json(s);
  out.dot = topology_dot(o, t, s.points());
  return out;
}

Outcome topology_cmd(const Options& o) {
  Outcome out{Report("topology"), {}, {}};
  auto t = topology_from_json(load_json(o.inputs[0]));
  if (!t) {
    out.report.check("finite topologies", "family is a topology", false, t.violation().describe());
    return out;
  }
  const auto& lt = t.value();
  out.report.check("finite topologies", "family is a topology", true);
  describe_topology(out.report, lt.topology, lt.points);
  out.model = to_json(lt);
  out.dot = topology_dot(o, lt.topology, lt.points);
  return out;
}

Outcome nbhd_check(const Options& o) {
  Outcome out{Report("nbhd-check"), {}, {}};
  auto& r = out.report;
  const auto in = nbhd_from_json(load_json(o.inputs[0]));
  const auto ax = validate_nbhd_system(in.system);
  auto witness = [&](const char* tag) {
    for (const auto& v : ax.failures)
      if (v.axiom == tag) return v.describe();
    return std::string();
  };
  const char* anchor = "neighbourhood systems";
  r.check(anchor, "(B1) x lies in every member of B(x)", ax.b1, witness("B1"));
  r.check(anchor, "(B2) two members of B(x) contain a third", ax.b2, witness("B2"));
  r.check(anchor, "(B3) each member of B(x) contains one of B(x) that is a neighbourhood of its points", ax.b3,
          witness("B3"));
  r.info(anchor, ax.b3_open ? "(B3') holds: the system is open" : "(B3') fails", witness("B3'"));
  if (!ax.neighbourhood_system()) return out;
  const auto t = topology_of(in.system);
  r.check(anchor, "B is equivalent to x -> {U(x)} of its topology",
          systems_equivalent(in.system, minimal_system(t)));
  describe_topology(r, t, in.points);
  out.model = to_json(LabelledTopology{in.points, t});
  out.dot = topology_dot(o, t, in.points);
  return out;
}

Outcome alexandrov_cmd(const Options& o) {
  const auto t = read_topology(o.inputs[0]);
  auto c = alexandrov_metrize(t.topology, t.points);
  Outcome out{std::move(c.report), to_json(c.space), {}};
  out.dot = topology_dot(o, t.topology, t.points);
  return out;
}

Outcome pullback_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  const auto g = map_from_json(load_json(o.inputs[1]), q.points());
  auto c = pullback(q, g.map, g.points);
  Outcome out{std::move(c.report), to_json(c.space), {}};
  out.dot = topology_dot(o, induced_topology(c.space), c.space.points());
  return out;
}

Outcome restrict_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  std::vector<std::string> labels;
  std::stringstream ss(o.subset);
  for (std::string l; std::getline(ss, l, ',');) labels.push_back(l);
  auto c = restrict(q, subset_from_labels(labels, q.points()));
  Outcome out{std::move(c.report), to_json(c.space), {}};
  out.dot = topology_dot(o, induced_topology(c.space), c.space.points());
  return out;
}

Outcome product_cmd(const Options& o) {
  std::vector<QmSpace> factors;
  for (const auto& p : o.inputs) factors.push_back(read_space(p));
  auto c = product(factors);
  Outcome out{std::move(c.report), to_json(c.space), {}};
  out.dot = topology_dot(o, induced_topology(c.space), c.space.points());
  return out;
}

Outcome glue_cmd(const Options& o) {
  const auto in = glue_from_json(load_json(o.inputs[0]), fs::path(o.inputs[0]).parent_path());
  auto g = glue(in.topology.topology, in.pieces, in.topology.points);
  Outcome out{std::move(g.report), to_json(g.space), {}};
  out.dot = topology_dot(o, induced_topology(g.space), g.space.points());
  return out;
}

Outcome closed_balls_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  Outcome out{Report("closed-balls"), {}, {}};
  closed_ball_equivalence(q, &out.report);
  out.dot = topology_dot(o, induced_topology(q), q.points());
  return out;
}

Outcome qu_base_cmd(const Options& o) {
  const auto b = base_from_json(load_json(o.inputs[0]));
  Outcome out{Report("qu-base"), {}, {}};
  auto& r = out.report;
  const char* anchor = "bases of a quasiuniformity";
  const auto ax = check_base_axioms(b.members);
  auto witness = [&](const char* tag) {
    for (const auto& v : ax.failures)
      if (v.axiom == tag) return v.describe();
    return std::string();
  };
  r.check(anchor, "(UB1) every member contains the diagonal", ax.ub1, witness("UB1"));
  r.check(anchor, "(UB2) every intersection of two members contains a member", ax.ub2, witness("UB2"));
  r.check(anchor, "(UB3) every member contains some V∘V", ax.ub3, witness("UB3"));
  if (!ax.ok()) return out;
  const auto base = validate_base(b.members).value();
  r.info(anchor, base.symmetric_closure() ? "every inverse contains a member" : "some inverse contains no member");
  r.info(anchor, check_uniformity(base) ? "the base generates a uniformity" : "the base does not generate a uniformity");
  const auto t = base_topology(base);
  describe_topology(r, t, b.points);
  out.model = to_json(b);
  out.dot = entourage_dot(o, b.members, b.names, t, b.points);
  return out;
}

Outcome base_topology_cmd(const Options& o) {
  Outcome out{Report("base-topology"), {}, {}};
  auto& r = out.report;
  const auto b = base_from_json(load_json(o.inputs[0]));
  auto base = validate_base(b.members);
  if (!base) throw InputError(o.inputs[0] + ": " + base.violation().describe());
  const auto t = base_topology(base.value());
  describe_topology(r, t, b.points);
  if (o.inputs.size() > 1) {
    const auto b2 = base_from_json(load_json(o.inputs[1]));
    if (b2.points != b.points) throw InputError("the two bases live on different carriers");
    auto base2 = validate_base(b2.members);
    if (!base2) throw InputError(o.inputs[1] + ": " + base2.violation().describe());
    r.check("bases of a quasiuniformity", "mutually cofinal bases give the same topology",
            bases_same_topology(base.value(), base2.value()));
  }
  out.model = to_json(LabelledTopology{b.points, t});
  out.dot = entourage_dot(o, b.members, b.names, t, b.points);
  return out;
}

Outcome base_from_qmf_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  auto qb = base_from_qm(q);
  std::vector<std::string> names(qb.base.members().size());
  for (auto a : q.values().nonzero())
    if (names[qb.member_of[a]].empty()) names[qb.member_of[a]] = "U" + q.values().label(a);
  Outcome out{std::move(qb.report), {}, {}};
  out.model = to_json(labelled(q.points(), names, qb.base.members(), neutral_relation(q)));
  out.dot = entourage_dot(o, qb.base.members(), names, base_topology(qb.base), q.points());
  return out;
}

Outcome full_convex_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  const auto rep = full_convex_report(q, 8);
  Outcome out{Report("full-convex"), {}, {}};
  const char* anchor = "full and convex spaces";
  std::string missing;
  for (auto a : rep.missing) missing += (missing.empty() ? "" : ",") + q.values().label(a);
  out.report.info(anchor, rep.full ? "f is onto M: full" : "f is not onto M: not full",
                  rep.full ? "" : "missing values: " + missing);
  std::string witnesses;
  for (const auto& w : rep.unrealized)
    witnesses += (witnesses.empty() ? "" : "; ") + std::string("d(") + q.points()[w.x] + "," + q.points()[w.y] +
                 ") = " + q.values().label(w.first) + "+" + q.values().label(w.second);
  out.report.info(anchor, rep.convex ? "condition (C) holds: convex" : "condition (C) fails: not convex",
                  rep.convex ? "" : std::to_string(rep.unrealized_count) + " unrealized decompositions, e.g. " + witnesses);
  return out;
}

Outcome embed_full_cmd(const Options& o) {
  auto e = embed_full(read_space(o.inputs[0]));
  return Outcome{std::move(e.report), to_json(e.space), {}};
}

Outcome convexify_cmd(const Options& o) {
  auto cv = convexify_until(read_space(o.inputs[0]), o.max_stages, o.max_points);
  return Outcome{std::move(cv.report), to_json(cv.space), {}};
}

Outcome entourage_mvs_cmd(const Options& o) {
  const auto q = read_space(o.inputs[0]);
  auto em = entourage_mvs(q);
  Outcome out{std::move(em.report), {}, {}};
  out.report.info("entourage value set of a full convex space", "table of (V,+)", to_json(*em.table).dump());
  const std::vector<std::string> star_names(em.names.begin() + 1, em.names.end());
  out.model = to_json(labelled(q.points(), star_names, em.star(), em.u0()));
  out.dot = entourage_dot(o, em.family, em.names, induced_topology(q), q.points());
  return out;
}

Outcome metrize_from_base_cmd(const Options& o) {
  const auto b = base_from_json(load_json(o.inputs[0]));
  std::vector<std::string> names{"U0"};
  names.insert(names.end(), b.names.begin(), b.names.end());
  auto mb = metrize_from_base(b.points, b.u0.value_or(Entourage::diagonal(b.points.size())), b.members, names);
  Outcome out{std::move(mb.report), to_json(mb.space), {}};
  std::vector<std::string> all_names = mb.space.values().labels();
  out.dot = entourage_dot(o, mb.family, all_names, induced_topology(mb.space), b.points);
  return out;
}

Outcome roundtrip_cmd(const Options& o) {
  auto rt = roundtrip(read_space(o.inputs[0]), o.max_stages, o.max_points);
  Outcome out{std::move(rt.report), {}, {}};
  if (rt.final_space) out.model = to_json(*rt.final_space);
  return out;
}

Outcome enumerate_mvs_cmd(const Options& o) {
  if (o.order < 2 || o.order > 5) throw InputError("--order must lie in 2..5");
  Outcome out{Report("enumerate-mvs"), {}, {}};
  auto& r = out.report;
  const char* anchor = "enumeration of metric value sets";
  const auto found = enumerate_mvs(o.order, o.up_to_iso);
  std::size_t comm = 0, af = 0, saf = 0;
  bool revalid = true;
  Json tables = Json::array();
  for (const auto& e : found) {
    comm += e.commutative;
    af += e.atom_free;
    saf += e.strictly_atom_free;
    revalid = revalid && validate_mvs(e.table.labels(), e.table.neutral(), e.table.rows()).ok();
    tables.push_back(to_json(e.table));
  }
  r.info(anchor, o.up_to_iso ? "isomorphism classes" : "labelled tables (neutral element fixed at index 0)",
         std::to_string(found.size()));
  r.info(anchor, "commutative / atom-free / strictly atom-free",
         std::to_string(comm) + " / " + std::to_string(af) + " / " + std::to_string(saf));
  r.check(anchor, "every enumerated table re-validates", revalid);
  if (o.order <= 4) {
    const auto labelled_count = o.up_to_iso ? enumerate_mvs(o.order, false).size() : found.size();
    const auto exhaustive = enumerate_mvs_exhaustive(o.order).size();
    r.check(anchor, "backtracking and exhaustive scans agree on the labelled count",
            labelled_count == exhaustive,
            std::to_string(labelled_count) + " vs " + std::to_string(exhaustive));
  } else {
    r.info(anchor, "exhaustive cross-check skipped above order 4");
  }
  out.model = tables;
  return out;
}

Outcome enumerate_topologies_cmd(const Options& o) {
  if (o.points > 4) throw InputError("--points must be at most 4");
  Outcome out{Report("enumerate-topologies"), {}, {}};
  auto& r = out.report;
  const char* anchor = "enumeration of finite topologies";
  const auto ts = enumerate_topologies(o.points);
  const auto closed = count_closed_families(o.points);
  r.info(anchor, "distinct topologies generated from all subbases", std::to_string(ts.size()));
  r.check(anchor, "count agrees with the scan of union- and intersection-closed families", ts.size() == closed,
          std::to_string(ts.size()) + " vs " + std::to_string(closed));
  bool revalid = true;
  Json docs = Json::array();
  const auto labels = default_labels(o.points);
  for (const auto& t : ts) {
    auto back = topology_from_opens(o.points, t.opens());
    revalid = revalid && back.ok() && back.value() == t;
    docs.push_back(to_json(LabelledTopology{labels, t}));
  }
  r.check(anchor, "every enumerated topology re-validates from its open sets", revalid);
  out.model = docs;
  return out;
}

Outcome random_space_cmd(const Options& o) {
  MvsRef m = share(max_mvs(3));
  if (!o.mvs_path.empty()) {
    auto t = mvs_from_json(load_json(o.mvs_path));
    if (!t) throw InputError(o.mvs_path + ": " + t.violation().describe());
    m = share(std::move(t).value());
  }
  if (o.points == 0) throw InputError("--points must be positive");
  SpaceGenerator gen(o.seed, m, o.points);
  const auto q = gen.next(o.points);
  Outcome out{Report("random-space"), to_json(q), {}};
  out.report.info("seeded corpus", "generated space", "seed " + std::to_string(o.seed) + ", " +
                                                          std::to_string(q.size()) + " points");
  out.dot = topology_dot(o, induced_topology(q), q.points());
  return out;
}

struct Command {
  const char* name;
  const char* help;
  int min_inputs;
  int max_inputs;
  std::function<Outcome(const Options&)> handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list{
      {"check-mvs", "validate an MVS document and classify it", 1, 1, check_mvs},
      {"check-qmf", "validate a space document", 1, 1, check_qmf},
      {"topology", "validate a topology document", 1, 1, topology_cmd},
      {"nbhd-check", "check (B1)-(B3) and (B3') of a neighbourhood system", 1, 1, nbhd_check},
      {"alexandrov", "metrize a finite topology over ({0,1,2},max)", 1, 1, alexandrov_cmd},
      {"pullback", "pull a space back along a map (SPACE MAP)", 2, 2, pullback_cmd},
      {"restrict", "restrict a space to --subset", 1, 1, restrict_cmd},
      {"product", "sum quasimetric on a product (SPACE...)", 1, -1, product_cmd},
      {"glue", "glue local quasimetrics over an open cover", 1, 1, glue_cmd},
      {"closed-balls", "compare closed and open ball systems", 1, 1, closed_balls_cmd},
      {"qu-base", "check (UB1)-(UB3) of a base document", 1, 1, qu_base_cmd},
      {"base-topology", "topology of a base; with two bases, compare them", 1, 2, base_topology_cmd},
      {"base-from-qmf", "quasiuniform base {U_m} of a space", 1, 1, base_from_qmf_cmd},
      {"full-convex", "report fullness and condition (C)", 1, 1, full_convex_cmd},
      {"embed-full", "embed a space into a full space", 1, 1, embed_full_cmd},
      {"convexify", "run convexification stages", 1, 1, convexify_cmd},
      {"entourage-mvs", "build (V,+) of a full convex space", 1, 1, entourage_mvs_cmd},
      {"metrize-from-base", "metrize a base satisfying (Q1)-(Q3)", 1, 1, metrize_from_base_cmd},
      {"roundtrip", "embed, convexify, build (V,+) and metrize back", 1, 1, roundtrip_cmd},
      {"enumerate-mvs", "enumerate MVS tables of a given order", 0, 0, enumerate_mvs_cmd},
      {"enumerate-topologies", "enumerate topologies on up to 4 points", 0, 0, enumerate_topologies_cmd},
      {"random-space", "draw a seeded random space", 0, 0, random_space_cmd},
  };
  return list;
}

int emit(const Options& o, const Outcome& res, std::ostream& out) {
  if (!o.out_path.empty()) {
    if (!res.model) throw InputError("this command produces no model for --out");
    save_json(o.out_path, *res.model);
  }
  if (o.format == "dot") {
    if (!res.dot) throw InputError("this command has no DOT output");
    out << *res.dot;
  } else if (o.format == "json") {
    out << res.report.to_json().dump(2) << '\n';
  } else {
    out << res.report.to_text();
  }
  return res.report.first_failure() ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite models of metric value sets, quasimetrics and their topologies", "mvstop"};
  app.require_subcommand(1);
  Options o;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    if (c.max_inputs != 0) {
      auto* in = sub->add_option("inputs", o.inputs, "input documents")->required()->check(CLI::ExistingFile);
      in->expected(c.min_inputs, c.max_inputs < 0 ? CLI::detail::expected_max_vector_size : c.max_inputs);
    }
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", o.out_path, "write the produced model document here");
    sub->add_option("--dot", o.dot, "DOT object")->check(CLI::IsMember({"lattice", "preorder", "entourages"}));
    const std::string name = c.name;
    if (name == "convexify" || name == "roundtrip") {
      sub->add_option("--max-stages", o.max_stages, "stage budget")->check(CLI::PositiveNumber);
      sub->add_option("--max-points", o.max_points, "point ceiling")->check(CLI::PositiveNumber);
    }
    if (name == "restrict") sub->add_option("--subset", o.subset, "comma-separated point labels")->required();
    if (name == "enumerate-mvs") {
      sub->add_option("--order", o.order, "number of elements (2..5)")->required();
      sub->add_flag("--up-to-iso", o.up_to_iso, "one table per isomorphism class");
    }
    if (name == "enumerate-topologies") sub->add_option("--points", o.points, "number of points (0..4)")->required();
    if (name == "random-space") {
      sub->add_option("--seed", o.seed, "64-bit seed");
      sub->add_option("--points", o.points, "number of points")->check(CLI::PositiveNumber);
      sub->add_option("--mvs", o.mvs_path, "MVS document (default ({0,1,2},max))")->check(CLI::ExistingFile);
    }
  }

  std::vector<std::string> argv_store{"mvstop"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& c : commands())
      if (app.got_subcommand(c.name)) return emit(o, c.handler(o), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << '\n';
    return 2;
  } catch (const TheoremFailure& e) {
    err << "theorem failure: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mvstop
