#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rpslrepo/diagnostic.hpp"
#include "rpslrepo/model.hpp"
#include "rpslrepo/property_graph.hpp"

namespace rpslrepo::repo {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& message, std::string path)
      : std::runtime_error(message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Meta-level counts; all derived from the store indices on demand.
struct StatsReport {
  std::size_t types = 0;
  std::size_t components = 0;
  std::size_t perception_graphs = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::map<std::string, std::size_t> edges_by_rel_type;
  bool imported = false;
};

// `key: value` lines in fixed order: types, components, perception_graphs,
// nodes, edges, then rel types lexicographically. Imported (query-only)
// sessions get a trailing `source:` line.
std::string render(const StatsReport& report);

// One loaded repository: the store always equals the ingest of the current
// model; loading rebuilds both from scratch. Sessions created from a
// snapshot have no model and are query-only.
class RepoSession {
 public:
  struct LoadOutcome {
    bool ok = false;
    std::string summary;
    std::vector<Diagnostic> diagnostics;
  };

  // parse -> build -> validate -> ingest into a fresh store; on any
  // diagnostic the session is left untouched.
  LoadOutcome load_sources(
      const std::vector<std::pair<std::string, std::string>>& sources);
  // Reads each file and delegates to load_sources. Throws IoError.
  LoadOutcome load_files(const std::vector<std::string>& paths);

  StatsReport stats() const;

  struct QueryOutcome {
    bool ok = false;
    std::string rendered;  // table plus trailing `(<k> rows)` line
    std::size_t rows = 0;
    std::vector<Diagnostic> diagnostics;
    std::string query_text;
  };

  QueryOutcome run_query(const std::string& text) const;
  // Canned semantic queries; generated text is executed via run_query so
  // canned output is byte-identical to the ad-hoc equivalent.
  QueryOutcome components_of_type(const std::string& type_name) const;
  QueryOutcome graphs_with_type(const std::string& type_name) const;

  void write_snapshot(std::ostream& out) const;
  void export_snapshot(const std::string& path) const;  // throws IoError
  static RepoSession from_snapshot(std::istream& in);
  static RepoSession import_snapshot(const std::string& path);

  const graph::PropertyGraph& store() const { return store_; }
  const std::optional<model::Model>& model() const { return model_; }
  const std::vector<std::string>& loaded_sources() const {
    return loaded_sources_;
  }
  bool imported() const { return imported_; }

 private:
  graph::PropertyGraph store_;
  std::optional<model::Model> model_;
  std::vector<std::string> loaded_sources_;
  bool imported_ = false;
};

// Query text behind the canned commands, exposed for equivalence checks.
std::string components_of_type_query(const std::string& type_name);
std::string graphs_with_type_query(const std::string& type_name);

// Line-oriented interactive loop (`rpsl> ` prompt): load, stats, query,
// export, import, help, quit. Unknown commands hint at help and continue.
// Returns the process exit code.
int run_repl(RepoSession& session, std::istream& in, std::ostream& out,
             bool color = false);

}  // namespace rpslrepo::repo
