#include "mvstop/io.hpp"

#include <fstream>
#include <map>

namespace mvstop {

namespace {

std::string label_text(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(what) + ": expected a string or integer label, got " + j.dump());
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& doc, const char* key) {
  const auto& a = field(doc, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::vector<std::string> label_list(const Json& a, const char* what) {
  if (!a.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : a) out.push_back(label_text(v, what));
  return out;
}

std::vector<std::string> point_list(const Json& doc) {
  auto pts = label_list(field(doc, "points"), "points");
  std::map<std::string, int> seen;
  for (const auto& p : pts)
    if (seen[p]++) throw InputError("duplicate point label \"" + p + "\"");
  return pts;
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& l, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw InputError(std::string("unknown ") + what + " \"" + l + "\"");
}

Entourage pairs_of(const Json& a, const std::vector<std::string>& points) {
  if (!a.is_array()) throw InputError("pairs must be an array");
  Entourage u(points.size());
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2) throw InputError("each pair must have two labels");
    u.set(index_of(points, label_text(p[0], "pair"), "point"),
          index_of(points, label_text(p[1], "pair"), "point"));
  }
  return u;
}

Json pairs_json(const Entourage& u, const std::vector<std::string>& points) {
  Json a = Json::array();
  for (auto [x, y] : u.pairs()) a.push_back({points[x], points[y]});
  return a;
}

Family family_of(const Json& a, const std::vector<std::string>& points, const char* what) {
  if (!a.is_array()) throw InputError(std::string(what) + " must be an array of sets");
  Family out;
  for (const auto& s : a) out.push_back(subset_from_labels(label_list(s, what), points));
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Subset subset_from_labels(const std::vector<std::string>& labels, const std::vector<std::string>& points) {
  Subset s(points.size());
  for (const auto& l : labels) s.set(index_of(points, l, "point"));
  return s;
}

Json labels_of(const Subset& s, const std::vector<std::string>& points) {
  Json a = Json::array();
  for (auto x : members(s)) a.push_back(points[x]);
  return a;
}

Checked<MvsTable> mvs_from_json(const Json& doc) {
  const auto given = label_list(field(doc, "labels"), "labels");
  const auto neutral = label_text(field(doc, "neutral"), "neutral");
  const auto& rows = array_field(doc, "table");
  const auto e = index_of(given, neutral, "neutral label");
  if (rows.size() != given.size()) throw InputError("table must have one row per label");

  // order[i] = position in the document of the element stored at index i.
  std::vector<std::size_t> order{e};
  for (std::size_t i = 0; i < given.size(); ++i)
    if (i != e) order.push_back(i);
  std::vector<std::size_t> rank(given.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<std::string> labels;
  for (auto i : order) labels.push_back(given[i]);
  std::vector<std::vector<Element>> table(given.size(), std::vector<Element>(given.size()));
  for (std::size_t a = 0; a < given.size(); ++a) {
    const auto row = label_list(rows[a], "table row");
    if (row.size() != given.size()) throw InputError("table row " + given[a] + " has the wrong length");
    for (std::size_t b = 0; b < given.size(); ++b)
      table[rank[a]][rank[b]] = rank[index_of(given, row[b], "table entry")];
  }
  return validate_mvs(std::move(labels), 0, table);
}

Json to_json(const MvsTable& m) {
  // Internal tables are built with any neutral index; write it first.
  std::vector<Element> order{m.neutral()};
  for (Element a = 0; a < m.size(); ++a)
    if (a != m.neutral()) order.push_back(a);
  Json table = Json::array();
  for (auto a : order) {
    Json row = Json::array();
    for (auto b : order) row.push_back(m.label(m.add(a, b)));
    table.push_back(row);
  }
  Json labels = Json::array();
  for (auto a : order) labels.push_back(m.label(a));
  return Json{{"labels", labels}, {"neutral", m.label(m.neutral())}, {"table", table}};
}

Checked<LabelledTopology> topology_from_json(const Json& doc) {
  auto points = point_list(doc);
  const auto n = points.size();
  if (doc.contains("opens")) {
    auto t = topology_from_opens(n, family_of(doc["opens"], points, "opens"));
    if (!t) return t.violation();
    return LabelledTopology{std::move(points), std::move(t).value()};
  }
  if (doc.contains("subbase")) {
    auto t = generate_topology(n, family_of(doc["subbase"], points, "subbase"));
    return LabelledTopology{std::move(points), std::move(t)};
  }
  throw InputError("a topology document needs \"opens\" or \"subbase\"");
}

Json to_json(const LabelledTopology& t) {
  Json opens = Json::array();
  for (const auto& o : t.topology.opens()) opens.push_back(labels_of(o, t.points));
  return Json{{"points", t.points}, {"opens", opens}};
}

Checked<QmSpace> space_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  auto points = point_list(doc);
  const auto& mdoc = field(doc, "mvs");
  auto m = mdoc.is_string() ? mvs_from_json(load_json(base_dir / mdoc.get<std::string>()))
                            : mvs_from_json(mdoc);
  if (!m) throw InputError("value set of the space: " + m.violation().describe());
  const auto mref = share(std::move(m).value());
  const auto& rows = array_field(doc, "d");
  if (rows.size() != points.size()) throw InputError("\"d\" must have one row per point");
  std::vector<std::vector<Element>> d;
  for (const auto& row : rows) {
    const auto vals = label_list(row, "distance row");
    if (vals.size() != points.size()) throw InputError("distance row has the wrong length");
    std::vector<Element> r;
    for (const auto& v : vals) {
      const auto a = mref->find(v);
      if (!a) throw InputError("unknown value \"" + v + "\" in \"d\"");
      r.push_back(*a);
    }
    d.push_back(std::move(r));
  }
  return validate_qm(std::move(points), mref, d);
}

Json to_json(const QmSpace& q) {
  Json d = Json::array();
  for (std::size_t x = 0; x < q.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < q.size(); ++y) row.push_back(q.values().label(q.d(x, y)));
    d.push_back(row);
  }
  return Json{{"points", q.points()}, {"mvs", to_json(q.values())}, {"d", d}};
}

LabelledBase base_from_json(const Json& doc) {
  LabelledBase b;
  b.points = point_list(doc);
  const auto n = b.points.size();
  const bool implicit = doc.contains("implicit_diagonal") && doc["implicit_diagonal"].get<bool>();
  const auto diag = Entourage::diagonal(n);
  for (const auto& e : array_field(doc, "entourages")) {
    auto u = pairs_of(field(e, "pairs"), b.points);
    if (implicit) u = u | diag;
    b.names.push_back(e.contains("name") ? label_text(e["name"], "name")
                                         : "U" + std::to_string(b.members.size() + 1));
    b.members.push_back(std::move(u));
  }
  if (doc.contains("u0")) {
    auto u = pairs_of(doc["u0"], b.points);
    b.u0 = implicit ? u | diag : u;
  }
  return b;
}

Json to_json(const LabelledBase& b) {
  Json ents = Json::array();
  for (std::size_t i = 0; i < b.members.size(); ++i)
    ents.push_back(Json{{"name", b.names[i]}, {"pairs", pairs_json(b.members[i], b.points)}});
  Json doc{{"points", b.points}, {"entourages", ents}, {"implicit_diagonal", false}};
  if (b.u0) doc["u0"] = pairs_json(*b.u0, b.points);
  return doc;
}

LabelledNbhd nbhd_from_json(const Json& doc) {
  LabelledNbhd out;
  out.points = point_list(doc);
  const auto& sys = field(doc, "systems");
  if (!sys.is_object()) throw InputError("\"systems\" must map each point to a list of sets");
  for (const auto& [key, _] : sys.items()) index_of(out.points, key, "point in \"systems\"");
  for (const auto& p : out.points) {
    if (!sys.contains(p)) throw InputError("no neighbourhood family for point \"" + p + "\"");
    out.system.at.push_back(family_of(sys[p], out.points, "neighbourhood family"));
  }
  return out;
}

GlueInput glue_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  auto t = topology_from_json(field(doc, "topology"));
  if (!t) throw InputError("glue topology: " + t.violation().describe());
  GlueInput in{std::move(t).value(), {}};
  const auto& points = in.topology.points;
  for (const auto& p : array_field(doc, "pieces")) {
    const auto subset = subset_from_labels(label_list(field(p, "members"), "members"), points);
    auto space = space_from_json(field(p, "space"), base_dir);
    if (!space) throw InputError("glue piece: " + space.violation().describe());
    const auto& local = space.value();
    const auto ms = members(subset);
    if (local.size() != ms.size()) throw InputError("glue piece space does not match its members");
    // Reorder the local points into carrier order.
    std::vector<std::size_t> pos;
    std::vector<std::string> labels;
    for (auto x : ms) {
      pos.push_back(index_of(local.points(), points[x], "piece point"));
      labels.push_back(points[x]);
    }
    std::vector<std::vector<Element>> d(ms.size(), std::vector<Element>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) d[i][j] = local.d(pos[i], pos[j]);
    auto reordered = validate_qm(labels, local.mvs(), d);
    in.pieces.push_back({subset, std::move(reordered).value()});
  }
  return in;
}

MapInput map_from_json(const Json& doc, const std::vector<std::string>& target_points) {
  MapInput out;
  out.points = point_list(doc);
  const auto images = label_list(field(doc, "map"), "map");
  if (images.size() != out.points.size()) throw InputError("\"map\" needs one image per point");
  for (const auto& l : images) out.map.push_back(index_of(target_points, l, "target point"));
  return out;
}

}  // namespace mvstop
