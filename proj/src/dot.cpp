#include "mvstop/dot.hpp"

#include <sstream>

namespace mvstop {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Cover edges of a partial order given by `below(i, j)` (strict).
template <class Below>
std::string hasse(const std::string& name, const std::vector<std::string>& labels, Below below) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  " << quoted(labels[i]) << ";\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!below(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < labels.size() && cover; ++k) cover = !(below(i, k) && below(k, j));
      if (cover) out << "  " << quoted(labels[i]) << " -> " << quoted(labels[j]) << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string open_lattice_dot(const FiniteTopology& t, const std::vector<std::string>& points) {
  const auto opens = t.opens(4096);
  std::vector<std::string> labels;
  for (const auto& o : opens) labels.push_back(format_subset(o, points));
  return hasse("opens", labels, [&](std::size_t i, std::size_t j) {
    return opens[i] != opens[j] && opens[i].is_subset_of(opens[j]);
  });
}

std::string specialization_dot(const FiniteTopology& t, const std::vector<std::string>& points) {
  std::ostringstream out;
  out << "digraph specialization {\n";
  for (std::size_t x = 0; x < t.size(); ++x) out << "  " << quoted(points[x]) << ";\n";
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (x != y && t.specializes(x, y)) out << "  " << quoted(points[x]) << " -> " << quoted(points[y]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string inclusion_dot(const std::vector<Entourage>& family, const std::vector<std::string>& names) {
  return hasse("entourages", names, [&](std::size_t i, std::size_t j) {
    return !(family[i] == family[j]) && family[i].is_subset_of(family[j]);
  });
}

}  // namespace mvstop
