#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rpslrepo/property_value.hpp"

namespace rpslrepo::query {

struct Position {
  int line = 0;
  int column = 0;
};

// Anonymous node patterns get fresh internal names (not writable as
// identifiers) so they can participate in bindings without being
// projectable.
struct NodePattern {
  std::string variable;
  bool anonymous = false;
  std::optional<std::string> label;
  std::vector<std::pair<std::string, graph::PropertyValue>> prop_filter;
  Position pos;
};

enum class RelDirection { LeftToRight, RightToLeft };

struct RelPattern {
  std::string rel_type;
  RelDirection direction = RelDirection::LeftToRight;
};

// Alternating node, (rel, node)*: nodes.size() == rels.size() + 1.
struct PathPattern {
  std::vector<NodePattern> nodes;
  std::vector<RelPattern> rels;
};

enum class CompareOp { Eq, Ne };

struct WhereExpr;
using WhereExprPtr = std::unique_ptr<WhereExpr>;

struct WhereExpr {
  struct Pattern {
    PathPattern path;
  };
  struct Compare {
    std::string variable;
    std::string property;
    CompareOp op = CompareOp::Eq;
    graph::PropertyValue literal;
    Position pos;
  };
  struct And {
    WhereExprPtr lhs, rhs;
  };
  struct Or {
    WhereExprPtr lhs, rhs;
  };
  struct Not {
    WhereExprPtr child;
  };

  std::variant<Pattern, Compare, And, Or, Not> node;
};

struct ReturnItem {
  enum class Kind { Variable, Property, CountStar, CountVariable };

  Kind kind = Kind::Variable;
  std::string variable;
  std::string property;  // Kind::Property only
  Position pos;

  bool is_aggregate() const {
    return kind == Kind::CountStar || kind == Kind::CountVariable;
  }
  std::string column_name() const;
};

struct ReturnClause {
  bool distinct = false;
  std::vector<ReturnItem> items;
};

struct QueryAst {
  std::vector<PathPattern> patterns;
  WhereExprPtr where;  // null when absent
  ReturnClause ret;
};

// Match variables (named and anonymous) in first-appearance order; this
// order defines result row ordering.
std::vector<std::string> match_variables(const QueryAst& ast);

}  // namespace rpslrepo::query
