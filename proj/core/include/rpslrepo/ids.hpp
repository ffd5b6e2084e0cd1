#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace rpslrepo::graph {

// Ids are issued by per-store monotonic counters starting at 1 and are
// never reused, so ascending id order is creation order. Node and edge
// counters are independent.
template <class Tag>
struct BasicId {
  std::uint64_t value = 0;

  constexpr bool valid() const noexcept { return value != 0; }
  friend constexpr auto operator<=>(BasicId, BasicId) = default;
};

struct NodeTag {};
struct EdgeTag {};

using NodeId = BasicId<NodeTag>;
using EdgeId = BasicId<EdgeTag>;

}  // namespace rpslrepo::graph

template <class Tag>
struct std::hash<rpslrepo::graph::BasicId<Tag>> {
  std::size_t operator()(rpslrepo::graph::BasicId<Tag> id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
