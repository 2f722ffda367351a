#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvstop/mvs.hpp"
#include "mvstop/qmetric.hpp"
#include "mvstop/quniform.hpp"
#include "mvstop/topology.hpp"

// JSON documents for every model type. Readers throw InputError on schema
// problems and return a Violation when the model is well-formed but fails
// its axioms. Writers produce documents that read back to equal values.
//
// Labels may be given as strings or integers; integers are read as their
// decimal spelling.

namespace mvstop {

using Json = nlohmann::ordered_json;

Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& doc);

/// {"labels": [...], "neutral": "e", "table": [[label, ...], ...]}.
/// The neutral element is moved to index 0; the other labels keep their
/// order. The writer emits index order, so the neutral comes first.
Checked<MvsTable> mvs_from_json(const Json& doc);
Json to_json(const MvsTable& m);

struct LabelledTopology {
  std::vector<std::string> points;
  FiniteTopology topology;

  bool operator==(const LabelledTopology&) const = default;
};

/// {"points": [...], "opens": [[...], ...]} or {"points", "subbase"}.
Checked<LabelledTopology> topology_from_json(const Json& doc);
Json to_json(const LabelledTopology& t);

/// {"points": [...], "mvs": <MVS document or path>, "d": [[label, ...], ...]}.
/// A path is resolved against `base_dir`.
Checked<QmSpace> space_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
Json to_json(const QmSpace& q);

struct LabelledBase {
  std::vector<std::string> points;
  std::vector<std::string> names;
  std::vector<Entourage> members;
  std::optional<Entourage> u0;

  bool operator==(const LabelledBase&) const = default;
};

/// {"points", "entourages": [{"name", "pairs": [[x, y], ...]}],
///  "implicit_diagonal": bool, "u0": [[x, y], ...]}. With implicit_diagonal
/// the diagonal is added to every member and to u0; otherwise pairs are
/// taken literally. "u0" is optional.
LabelledBase base_from_json(const Json& doc);
Json to_json(const LabelledBase& b);

struct LabelledNbhd {
  std::vector<std::string> points;
  NbhdSystem system;
};

/// {"points", "systems": {"<point>": [[...], ...], ...}} with one entry per
/// point.
LabelledNbhd nbhd_from_json(const Json& doc);

struct GlueInput {
  LabelledTopology topology;
  std::vector<GluePiece> pieces;
};

/// {"topology": <topology document>, "pieces": [{"members": [...],
///  "space": <space document over exactly those points>}]}. The piece's
/// points may come in any order.
GlueInput glue_from_json(const Json& doc, const std::filesystem::path& base_dir = {});

struct MapInput {
  std::vector<std::string> points;
  std::vector<std::size_t> map;
};

/// {"points": [...], "map": [<target label per point>]}.
MapInput map_from_json(const Json& doc, const std::vector<std::string>& target_points);

/// Parses labels against a carrier.
Subset subset_from_labels(const std::vector<std::string>& labels, const std::vector<std::string>& points);
Json labels_of(const Subset& s, const std::vector<std::string>& points);

}  // namespace mvstop
