#pragma once

#include "homlab/graph.hpp"
#include "homlab/group.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace homlab {

enum class Kind { graph, group };

/// An object of one of the two concrete categories.
using Object = std::variant<Graph, FiniteGroup>;

inline Kind kind_of(const Object& o) {
  return std::holds_alternative<Graph>(o) ? Kind::graph : Kind::group;
}

inline std::string_view kind_name(Kind k) { return k == Kind::graph ? "graph" : "group"; }

/// Vertex count or group order.
inline std::size_t object_size(const Graph& g) { return g.vertex_count(); }
inline std::size_t object_size(const FiniteGroup& g) { return g.order(); }
inline std::size_t object_size(const Object& o) {
  return std::visit([](const auto& x) { return object_size(x); }, o);
}

inline std::string describe_object(const Object& o) {
  return std::visit([](const auto& x) { return describe(x); }, o);
}

}  // namespace homlab
