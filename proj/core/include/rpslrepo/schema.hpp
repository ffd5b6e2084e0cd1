#pragma once

#include <string_view>

// Store schema used by the repository: node labels, relationship types and
// property names produced by ingest and assumed by the canned queries.
namespace rpslrepo::model::schema {

inline constexpr std::string_view kTypeLabel = "Type";
inline constexpr std::string_view kComponentLabel = "Component";
inline constexpr std::string_view kGraphLabel = "PerceptionGraph";

inline constexpr std::string_view kExtendsRel = "extends";
inline constexpr std::string_view kContainsRel = "contains";
inline constexpr std::string_view kConnectsToRel = "connects_to";
inline constexpr std::string_view kOfTypeRel = "of_type";
inline constexpr std::string_view kConsumesRel = "consumes";

inline constexpr std::string_view kNameProp = "name";
inline constexpr std::string_view kDefinitionProp = "definition";
inline constexpr std::string_view kKindProp = "kind";
inline constexpr std::string_view kSrcPortProp = "src_port";
inline constexpr std::string_view kDstPortProp = "dst_port";

}  // namespace rpslrepo::model::schema
