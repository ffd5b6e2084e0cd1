#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "rpslrepo/diagnostic.hpp"
#include "rpslrepo/session.hpp"

namespace {

using rpslrepo::Diagnostic;
using rpslrepo::render;
using rpslrepo::render_with_caret;
using rpslrepo::repo::IoError;
using rpslrepo::repo::RepoSession;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitIo = 2;

bool color_for(FILE* stream) {
  if (std::getenv("RPSLREPO_NO_COLOR")) return false;
  return isatty(fileno(stream)) != 0;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  const bool color = color_for(stderr);
  for (const auto& d : diagnostics) std::cerr << render(d, color) << '\n';
}

// Shared front half of every file-based subcommand.
int load_into(RepoSession& session, const std::vector<std::string>& files,
              bool print_summary) {
  try {
    auto outcome = session.load_files(files);
    if (!outcome.ok) {
      print_diagnostics(outcome.diagnostics);
      return kExitDiagnostics;
    }
    if (print_summary) std::cout << outcome.summary << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int print_query_outcome(const RepoSession::QueryOutcome& outcome) {
  if (outcome.ok) {
    std::cout << outcome.rendered;
    return kExitOk;
  }
  const bool color = color_for(stderr);
  for (const auto& d : outcome.diagnostics) {
    std::cerr << render_with_caret(d, outcome.query_text, color) << '\n';
  }
  return kExitDiagnostics;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedded repository for perception-graph domain models"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string query_text;
  std::string type_name;
  std::string output_path;
  std::string snapshot_path;

  auto* load = app.add_subcommand("load", "Parse, validate and ingest files");
  load->add_option("files", files, "DSL files (.rpsl)");

  auto* stats = app.add_subcommand("stats", "Repository counts");
  stats->add_option("files", files, "DSL files (.rpsl)");

  auto* query = app.add_subcommand("query", "Run a query");
  query->add_option("-q,--query", query_text, "query text")->required();
  query->add_option("files", files, "DSL files (.rpsl)");

  auto* components = app.add_subcommand(
      "components-of-type", "Components producing the given type");
  components->add_option("type", type_name, "type name")->required();
  components->add_option("files", files, "DSL files (.rpsl)");

  auto* graphs = app.add_subcommand(
      "graphs-with-type",
      "Perception graphs where some component produces the given type");
  graphs->add_option("type", type_name, "type name")->required();
  graphs->add_option("files", files, "DSL files (.rpsl)");

  auto* exp = app.add_subcommand("export", "Write a store snapshot");
  exp->add_option("-o,--output", output_path, "snapshot file")->required();
  exp->add_option("files", files, "DSL files (.rpsl)");

  auto* imp = app.add_subcommand("import", "Inspect a store snapshot");
  imp->add_option("snapshot", snapshot_path, "snapshot file")->required();

  auto* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_option("files", files, "DSL files (.rpsl)");

  CLI11_PARSE(app, argc, argv);

  RepoSession session;

  if (load->parsed()) {
    return load_into(session, files, /*print_summary=*/true);
  }

  if (stats->parsed()) {
    if (int rc = load_into(session, files, false); rc != kExitOk) return rc;
    std::cout << render(session.stats());
    return kExitOk;
  }

  if (query->parsed()) {
    if (int rc = load_into(session, files, false); rc != kExitOk) return rc;
    return print_query_outcome(session.run_query(query_text));
  }

  if (components->parsed()) {
    if (int rc = load_into(session, files, false); rc != kExitOk) return rc;
    return print_query_outcome(session.components_of_type(type_name));
  }

  if (graphs->parsed()) {
    if (int rc = load_into(session, files, false); rc != kExitOk) return rc;
    return print_query_outcome(session.graphs_with_type(type_name));
  }

  if (exp->parsed()) {
    if (int rc = load_into(session, files, false); rc != kExitOk) return rc;
    try {
      session.export_snapshot(output_path);
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitIo;
    }
    std::cout << "exported " << session.store().node_count() << " nodes, "
              << session.store().edge_count() << " edges to " << output_path
              << '\n';
    return kExitOk;
  }

  if (imp->parsed()) {
    try {
      session = RepoSession::import_snapshot(snapshot_path);
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitIo;
    } catch (const rpslrepo::graph::StoreError& e) {
      std::cerr << "error[" << rpslrepo::graph::to_string(e.code())
                << "]: " << e.what() << '\n';
      return kExitDiagnostics;
    }
    std::cout << "imported: " << session.store().node_count() << " nodes, "
              << session.store().edge_count() << " edges\n";
    return kExitOk;
  }

  if (repl->parsed()) {
    if (!files.empty()) {
      if (int rc = load_into(session, files, true); rc != kExitOk) return rc;
    }
    return rpslrepo::repo::run_repl(session, std::cin, std::cout,
                                    color_for(stdout));
  }

  return kExitOk;
}
