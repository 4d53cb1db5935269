#include "i40sh/cli/cli.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include <pthread.h>

#include "CLI11.hpp"
#include "httplib.h"
#include "i40sh/ingest/ingest.hpp"
#include "i40sh/query/query.hpp"
#include "i40sh/registry/registry.hpp"
#include "i40sh/registry/server.hpp"
#include "i40sh/turtle/turtle.hpp"
#include "i40sh/vocab/canonicalize.hpp"
#include "i40sh/vocab/validate.hpp"
#include "i40sh/vocab/vocabulary.hpp"

namespace i40sh::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" reads standard input.
std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::optional<rdf::Graph> parse_data(const std::string& path, std::istream& in, std::ostream& err) {
  auto result = turtle::parse_turtle(read_input(path, in));
  if (!result.ok()) {
    err << path << ": Turtle syntax errors\n" << turtle::format_diagnostics(result.diagnostics);
    return std::nullopt;
  }
  return std::move(result.graph);
}

void log_rewrites(const vocab::CanonicalizeResult& result, std::ostream& err) {
  for (const auto& r : result.rewrites)
    err << "canonicalized " << r.original.subject.ntriples() << " " << r.original.predicate.ntriples() << " -> "
        << r.canonical.predicate.ntriples() << "\n";
}

// --- validate -----------------------------------------------------------------

struct ValidateOptions {
  std::string file;
  bool canonicalize = false;
  bool json = false;
};

int cmd_validate(const ValidateOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  auto graph = parse_data(opt.file, in, err);
  if (!graph) return kError;
  if (opt.canonicalize) {
    auto result = vocab::canonicalize(*graph);
    log_rewrites(result, err);
    graph = std::move(result.graph);
  }
  auto report = vocab::validate(*graph);
  if (opt.json)
    out << report.to_json() << "\n";
  else
    out << report.to_text();
  err << report.violation_count() << " violation(s), " << report.warning_count() << " warning(s)\n";
  return report.conforms() ? kSuccess : kFailure;
}

// --- query --------------------------------------------------------------------

struct QueryOptions {
  std::string data;
  std::string query;
  bool canonicalize = false;
};

int cmd_query(const QueryOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  auto graph = parse_data(opt.data, in, err);
  if (!graph) return kError;
  auto parsed = query::parse_query(read_input(opt.query, in));
  if (!parsed.ok()) {
    err << opt.query << ": query errors\n" << turtle::format_diagnostics(parsed.diagnostics);
    return kFailure;
  }
  auto q = *std::move(parsed.query);
  if (opt.canonicalize) {
    auto result = vocab::canonicalize(*graph);
    log_rewrites(result, err);
    graph = std::move(result.graph);
    if (auto n = query::rewrite_predicates(q, vocab::canonical_predicate))
      err << "canonicalized " << n << " query predicate(s)\n";
  }
  auto result = query::eval(*graph, q);
  if (const auto* solutions = std::get_if<query::Solutions>(&result)) {
    out << query::solutions_json(*solutions) << "\n";
    err << solutions->rows.size() << " solution(s)\n";
  } else {
    const auto& g = std::get<rdf::Graph>(result);
    out << turtle::serialize_turtle(g);
    err << g.size() << " triple(s)\n";
  }
  return kSuccess;
}

// --- serve --------------------------------------------------------------------

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string base_iri = "http://purl.org/eis/i40c/";
  std::string snapshot;
};

int cmd_serve(const ServeOptions& opt, std::ostream& err) {
  // Block the shutdown signals before any server thread exists so that
  // only the sigwait below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  registry::Registry reg(opt.base_iri);
  if (!opt.snapshot.empty()) {
    try {
      if (reg.load_snapshot(opt.snapshot))
        err << "loaded snapshot " << opt.snapshot << " (" << reg.store()->size() << " triples)\n";
    } catch (const registry::SnapshotError& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
  }

  registry::HttpServer server(reg);
  int port = 0;
  try {
    port = server.bind(opt.host, opt.port);
  } catch (const registry::BindError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "listening on http://" << opt.host << ":" << port << "/" << std::endl;

  std::thread loop([&] { server.listen(); });
  int received = 0;
  sigwait(&signals, &received);
  err << "received signal " << received << ", shutting down\n";
  server.stop();
  loop.join();

  if (!opt.snapshot.empty()) {
    try {
      reg.save_snapshot(opt.snapshot);
      err << "saved snapshot " << opt.snapshot << "\n";
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
  }
  return kSuccess;
}

// --- ingest -------------------------------------------------------------------

struct IngestOptions {
  std::string input;
  std::string mapping;
  std::string out;
  std::string register_url;
  bool strict = false;
};

int register_records(const ingest::IngestResult& result, const std::string& url, std::ostream& err) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) {
    err << "error: --register expects an http URL, got " << url << "\n";
    return kError;
  }
  std::string path = m[2].matched && m[2].str() != "/" ? m[2].str() : "/components";
  httplib::Client client(m[1].str());
  client.set_connection_timeout(5);

  int status = kSuccess;
  for (const auto& record : result.records) {
    rdf::Graph doc = rdf::concise_bounded_description(result.graph, record.subject);
    if (record.shell) doc = rdf::merge(doc, rdf::concise_bounded_description(result.graph, *record.shell));
    for (const auto& [prefix, iri] : result.graph.prefixes()) doc.set_prefix(prefix, iri);
    const auto& root = record.shell ? *record.shell : record.subject;

    auto res = client.Post(path, turtle::serialize_turtle(doc), "text/turtle");
    if (!res) {
      err << "error: cannot reach " << url << ": " << httplib::to_string(res.error()) << "\n";
      return kError;
    }
    err << res->status << " " << root.value() << "\n";
    if (res->status != 201) {
      err << res->body << "\n";
      status = kFailure;
    }
  }
  return status;
}

int cmd_ingest(const IngestOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  ingest::IngestResult result;
  try {
    auto table = ingest::parse_csv(read_input(opt.input, in));
    auto spec = ingest::parse_mapping(read_input(opt.mapping, in));
    result = ingest::ingest_csv(table, spec);
  } catch (const ingest::CsvError& e) {
    err << opt.input << ": " << e.what() << "\n";
    return kError;
  } catch (const ingest::MappingError& e) {
    for (const auto& d : e.diagnostics()) err << opt.mapping << ": " << d.to_string() << "\n";
    return kError;
  } catch (const ingest::HeaderMismatch& e) {
    err << opt.input << ": " << e.what() << "\n";
    return kError;
  }
  for (const auto& d : result.diagnostics) err << opt.input << ": " << d.to_string() << "\n";
  err << result.records.size() << " row(s) ingested, " << result.graph.size() << " triple(s)\n";

  int status = kSuccess;
  if (!opt.register_url.empty()) {
    status = register_records(result, opt.register_url, err);
    if (status == kError) return status;
  }
  if (!opt.out.empty()) {
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!(file << turtle::serialize_turtle(result.graph))) throw IoError("cannot write " + opt.out);
  } else if (opt.register_url.empty()) {
    out << turtle::serialize_turtle(result.graph);
  }
  if (opt.strict && !result.diagnostics.empty()) return kFailure;
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Registry and toolkit for Industry 4.0 administrative shells", "i40sh"};
  app.require_subcommand(1);

  ValidateOptions vopt;
  auto* validate = app.add_subcommand("validate", "Validate a Turtle document against the shell rules");
  validate->add_option("file", vopt.file, "Turtle file, or - for standard input")->required();
  validate->add_flag("--canonicalize", vopt.canonicalize, "Rewrite known predicate misspellings first")
      ->envname("I40SH_CANONICALIZE");
  validate->add_flag("--json", vopt.json, "Print the report as JSON")->envname("I40SH_JSON");

  QueryOptions qopt;
  auto* query = app.add_subcommand("query", "Evaluate a SELECT or CONSTRUCT query over a Turtle file");
  query->add_option("--data", qopt.data, "Turtle data file, or -")->required()->envname("I40SH_DATA");
  query->add_option("--query", qopt.query, "Query file, or -")->required()->envname("I40SH_QUERY");
  query->add_flag("--canonicalize", qopt.canonicalize, "Canonicalize data and query predicates")
      ->envname("I40SH_CANONICALIZE");

  ServeOptions sopt;
  auto* serve = app.add_subcommand("serve", "Run the registry HTTP service until SIGINT or SIGTERM");
  serve->add_option("--host", sopt.host, "Bind address")->capture_default_str()->envname("I40SH_HOST");
  serve->add_option("--port", sopt.port, "Port, 0 for an ephemeral one")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535))
      ->envname("I40SH_PORT");
  serve->add_option("--base-iri", sopt.base_iri, "Base IRI of served resources")
      ->capture_default_str()
      ->envname("I40SH_BASE_IRI");
  serve->add_option("--snapshot", sopt.snapshot, "Turtle snapshot loaded at start and saved at shutdown")
      ->envname("I40SH_SNAPSHOT");

  IngestOptions iopt;
  auto* ingest_cmd = app.add_subcommand("ingest", "Map CSV rows to shell RDF");
  ingest_cmd->add_option("--input", iopt.input, "CSV file, or -")->required()->envname("I40SH_INPUT");
  ingest_cmd->add_option("--mapping", iopt.mapping, "Mapping file")->required()->envname("I40SH_MAPPING");
  ingest_cmd->add_option("--out", iopt.out, "Write Turtle here instead of standard output")
      ->envname("I40SH_OUT");
  ingest_cmd->add_option("--register", iopt.register_url, "POST each row's shell to this registry URL")
      ->envname("I40SH_REGISTER");
  ingest_cmd->add_flag("--strict", iopt.strict, "Exit 1 if any row was skipped")->envname("I40SH_STRICT");

  auto* vocab_cmd = app.add_subcommand("vocab", "Print the built-in i40c vocabulary as Turtle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kError;
  }

  try {
    if (validate->parsed()) return cmd_validate(vopt, in, out, err);
    if (query->parsed()) return cmd_query(qopt, in, out, err);
    if (serve->parsed()) return cmd_serve(sopt, err);
    if (ingest_cmd->parsed()) return cmd_ingest(iopt, in, out, err);
    if (vocab_cmd->parsed()) {
      out << vocab::builtin_vocabulary_turtle();
      return kSuccess;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace i40sh::cli
