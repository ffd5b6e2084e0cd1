#pragma once

#include <iosfwd>
#include <string_view>

#include "rpslrepo/property_graph.hpp"

namespace rpslrepo::graph {

// Line-oriented UTF-8 snapshot format, version 1.
//
//   rpslrepo-snapshot v1
//   {"k":"n","id":1,"labels":["Type"],"props":{"name":"T"}}
//   {"k":"e","id":1,"t":"of_type","src":4,"dst":1,"props":{}}
//
// Nodes are written before edges, each in ascending id order; labels and
// property keys are emitted in lexicographic order, so writing the same
// store twice produces identical bytes.
inline constexpr std::string_view kSnapshotHeader = "rpslrepo-snapshot v1";

void snapshot_write(const PropertyGraph& store, std::ostream& out);

// Rebuilds a store with identical ids, labels, properties and edges.
// Throws StoreError{MalformedSnapshot} carrying the 1-based line number of
// the first offending line.
PropertyGraph snapshot_read(std::istream& in);

}  // namespace rpslrepo::graph
