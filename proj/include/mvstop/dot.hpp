#pragma once

#include <string>
#include <vector>

#include "mvstop/quniform.hpp"
#include "mvstop/topology.hpp"

namespace mvstop {

// Graphviz output. Nodes and edges are emitted in a fixed order so equal
// inputs give byte-identical text.

/// Hasse diagram of the open sets under inclusion, an edge per cover.
std::string open_lattice_dot(const FiniteTopology& t, const std::vector<std::string>& points);

/// Specialization preorder without loops: x -> y when y ∈ U(x), x != y.
std::string specialization_dot(const FiniteTopology& t, const std::vector<std::string>& points);

/// Hasse diagram of a family of relations under inclusion.
std::string inclusion_dot(const std::vector<Entourage>& family, const std::vector<std::string>& names);

}  // namespace mvstop
