#include "rpslrepo/session.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rpslrepo/dsl_parser.hpp"
#include "rpslrepo/ingest.hpp"
#include "rpslrepo/query_engine.hpp"
#include "rpslrepo/query_parser.hpp"
#include "rpslrepo/result_table.hpp"
#include "rpslrepo/schema.hpp"
#include "rpslrepo/snapshot.hpp"
#include "rpslrepo/validate.hpp"

namespace rpslrepo::repo {

namespace schema = model::schema;

std::string render(const StatsReport& report) {
  std::string out;
  out += "types: " + std::to_string(report.types) + '\n';
  out += "components: " + std::to_string(report.components) + '\n';
  out += "perception_graphs: " + std::to_string(report.perception_graphs) +
         '\n';
  out += "nodes: " + std::to_string(report.nodes) + '\n';
  out += "edges: " + std::to_string(report.edges) + '\n';
  for (const auto& [rel_type, count] : report.edges_by_rel_type) {
    out += rel_type + ": " + std::to_string(count) + '\n';
  }
  if (report.imported) {
    out += "source: imported snapshot (query-only)\n";
  }
  return out;
}

RepoSession::LoadOutcome RepoSession::load_sources(
    const std::vector<std::pair<std::string, std::string>>& sources) {
  LoadOutcome outcome;

  std::vector<model::Decl> decls;
  for (const auto& [name, text] : sources) {
    dsl::ParseResult parsed = dsl::parse_document(text, name);
    if (!parsed.ok()) {
      outcome.diagnostics.insert(outcome.diagnostics.end(),
                                 parsed.diagnostics.begin(),
                                 parsed.diagnostics.end());
      continue;
    }
    decls.insert(decls.end(),
                 std::make_move_iterator(parsed.document.decls.begin()),
                 std::make_move_iterator(parsed.document.decls.end()));
  }
  if (!outcome.diagnostics.empty()) return outcome;

  model::BuildResult built = model::build_model(decls);
  if (!built.ok()) {
    outcome.diagnostics = std::move(built.diagnostics);
    return outcome;
  }

  auto validation = model::validate_all(built.model);
  if (!validation.empty()) {
    outcome.diagnostics = std::move(validation);
    return outcome;
  }

  graph::PropertyGraph fresh;
  model::IngestReport report = model::ingest(built.model, fresh);

  store_ = std::move(fresh);
  model_ = std::move(built.model);
  loaded_sources_.clear();
  for (const auto& [name, text] : sources) loaded_sources_.push_back(name);
  imported_ = false;

  std::ostringstream summary;
  summary << "loaded: " << model_->types.size() << " types, "
          << model_->components.size() << " components, "
          << model_->graphs.size() << " graphs; store: " << report.node_count
          << " nodes, " << report.edge_count << " edges";
  outcome.ok = true;
  outcome.summary = summary.str();
  return outcome;
}

RepoSession::LoadOutcome RepoSession::load_files(
    const std::vector<std::string>& paths) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path, path);
    std::ostringstream text;
    text << in.rdbuf();
    sources.emplace_back(path, text.str());
  }
  return load_sources(sources);
}

StatsReport RepoSession::stats() const {
  StatsReport report;
  report.types =
      store_.nodes_by_label(std::string(schema::kTypeLabel)).size();
  report.components =
      store_.nodes_by_label(std::string(schema::kComponentLabel)).size();
  report.perception_graphs =
      store_.nodes_by_label(std::string(schema::kGraphLabel)).size();
  report.nodes = store_.node_count();
  report.edges = store_.edge_count();
  for (const auto& [rel_type, ids] : store_.rel_type_index()) {
    report.edges_by_rel_type[rel_type] = ids.size();
  }
  report.imported = imported_;
  return report;
}

RepoSession::QueryOutcome RepoSession::run_query(
    const std::string& text) const {
  QueryOutcome outcome;
  outcome.query_text = text;
  query::QueryParseResult parsed = query::parse_query(text);
  if (!parsed.ok()) {
    outcome.diagnostics.push_back(*parsed.error);
    return outcome;
  }
  query::ResultTable table = query::execute(*parsed.ast, store_);
  outcome.ok = true;
  outcome.rows = table.rows.size();
  outcome.rendered = query::render_table(table, store_) + '(' +
                     std::to_string(table.rows.size()) + " rows)\n";
  return outcome;
}

std::string components_of_type_query(const std::string& type_name) {
  return "match (n:Component), (m:Type {name: \"" +
         graph::escape_text(type_name) +
         "\"}) where (n)-[:of_type]->(m) return n;";
}

std::string graphs_with_type_query(const std::string& type_name) {
  return "match (g:PerceptionGraph)-[:contains]->(c:Component)-[:of_type]->"
         "(t:Type {name: \"" +
         graph::escape_text(type_name) + "\"}) return distinct g;";
}

RepoSession::QueryOutcome RepoSession::components_of_type(
    const std::string& type_name) const {
  return run_query(components_of_type_query(type_name));
}

RepoSession::QueryOutcome RepoSession::graphs_with_type(
    const std::string& type_name) const {
  return run_query(graphs_with_type_query(type_name));
}

void RepoSession::write_snapshot(std::ostream& out) const {
  graph::snapshot_write(store_, out);
}

void RepoSession::export_snapshot(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path, path);
  write_snapshot(out);
  if (!out.flush()) throw IoError("cannot write file: " + path, path);
}

RepoSession RepoSession::from_snapshot(std::istream& in) {
  RepoSession session;
  session.store_ = graph::snapshot_read(in);
  session.imported_ = true;
  return session;
}

RepoSession RepoSession::import_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path, path);
  return from_snapshot(in);
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics,
                       std::ostream& out, bool color) {
  for (const auto& d : diagnostics) out << render(d, color) << '\n';
}

constexpr std::string_view kReplHelp =
    "commands:\n"
    "  load <files...>   parse, validate and ingest DSL files\n"
    "  stats             repository counts\n"
    "  query <text>      run a query\n"
    "  export <file>     write a store snapshot\n"
    "  import <file>     load a store snapshot (query-only session)\n"
    "  help              this text\n"
    "  quit              leave\n";

}  // namespace

int run_repl(RepoSession& session, std::istream& in, std::ostream& out,
             bool color) {
  std::string line;
  while (out << "rpsl> " << std::flush, std::getline(in, line)) {
    std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string& cmd = words.front();

    if (cmd == "quit") return 0;
    if (cmd == "help") {
      out << kReplHelp;
      continue;
    }
    if (cmd == "stats") {
      out << render(session.stats());
      continue;
    }
    if (cmd == "load") {
      std::vector<std::string> paths(words.begin() + 1, words.end());
      try {
        auto outcome = session.load_files(paths);
        if (outcome.ok) {
          out << outcome.summary << '\n';
        } else {
          print_diagnostics(outcome.diagnostics, out, color);
        }
      } catch (const IoError& e) {
        out << "error: " << e.what() << '\n';
      }
      continue;
    }
    if (cmd == "query") {
      auto text_pos = line.find("query");
      std::string text = line.substr(text_pos + 5);
      auto outcome = session.run_query(text);
      if (outcome.ok) {
        out << outcome.rendered;
      } else {
        for (const auto& d : outcome.diagnostics) {
          out << render_with_caret(d, outcome.query_text, color) << '\n';
        }
      }
      continue;
    }
    if (cmd == "export") {
      if (words.size() != 2) {
        out << "usage: export <file>\n";
        continue;
      }
      try {
        session.export_snapshot(words[1]);
        out << "exported " << session.store().node_count() << " nodes, "
            << session.store().edge_count() << " edges to " << words[1]
            << '\n';
      } catch (const IoError& e) {
        out << "error: " << e.what() << '\n';
      }
      continue;
    }
    if (cmd == "import") {
      if (words.size() != 2) {
        out << "usage: import <file>\n";
        continue;
      }
      try {
        session = RepoSession::import_snapshot(words[1]);
        out << "imported: " << session.store().node_count() << " nodes, "
            << session.store().edge_count() << " edges\n";
      } catch (const IoError& e) {
        out << "error: " << e.what() << '\n';
      } catch (const graph::StoreError& e) {
        out << "error[" << graph::to_string(e.code()) << "]: " << e.what()
            << '\n';
      }
      continue;
    }
    out << "unknown command '" << cmd << "' (try 'help')\n";
  }
  return 0;
}

}  // namespace rpslrepo::repo
