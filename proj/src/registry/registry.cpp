#include "i40sh/registry/registry.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "i40sh/query/query.hpp"
#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/turtle.hpp"
#include "i40sh/vocab/canonicalize.hpp"
#include "i40sh/vocab/descriptor.hpp"
#include "i40sh/vocab/labels.hpp"
#include "json.hpp"

namespace i40sh::registry {

namespace {

using nlohmann::json;
using rdf::Term;

constexpr std::string_view kJson = "application/json";

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

json diagnostics_json(const std::vector<turtle::ParseDiagnostic>& diagnostics) {
  json list = json::array();
  for (const auto& d : diagnostics) {
    list.push_back({{"line", d.line},
                    {"column", d.column},
                    {"code", turtle::code_name(d.code)},
                    {"message", d.message}});
  }
  return {{"diagnostics", list}};
}

HttpResponse respond(int status, std::string_view type, std::string body) {
  return {status, std::string(type), std::move(body), {}};
}

HttpResponse error_json(int status, const std::string& message) {
  return respond(status, kJson, json{{"error", message}}.dump());
}

}  // namespace

std::string HttpRequest::header(std::string_view name) const {
  auto it = headers.find(lower(name));
  return it == headers.end() ? std::string() : it->second;
}

Registry::Registry(std::string base_iri, const vocab::VocabularyDefinition& vocab)
    : base_iri_(std::move(base_iri)), vocab_(vocab), state_(std::make_shared<State>()) {
  if (!rdf::is_absolute_iri(base_iri_)) throw std::invalid_argument("base IRI must be absolute: " + base_iri_);
  // Path component of the base, e.g. "/eis/i40c/" for http://purl.org/eis/i40c/.
  if (auto scheme = base_iri_.find("://"); scheme != std::string::npos) {
    auto slash = base_iri_.find('/', scheme + 3);
    base_path_ = slash == std::string::npos ? "/" : base_iri_.substr(slash);
  }
  vocabulary_turtle_ = turtle::serialize_turtle(vocab_.graph());
  etag_ = "\"" + vocab_.version() + "\"";
}

std::shared_ptr<const Registry::State> Registry::state() const {
  std::lock_guard lock(state_mutex_);
  return state_;
}

void Registry::publish(std::shared_ptr<const State> next) {
  std::lock_guard lock(state_mutex_);
  state_ = std::move(next);
}

std::shared_ptr<const rdf::Graph> Registry::store() const {
  auto s = state();
  return {s, &s->store};
}

std::set<rdf::Term> Registry::external() const { return state()->external; }

RegisterOutcome Registry::register_document(std::string_view text) {
  RegisterOutcome out;
  auto parsed = turtle::parse_turtle(text);
  if (!parsed.ok()) {
    out.status = 400;
    out.content_type = kJson;
    out.body = diagnostics_json(parsed.diagnostics).dump();
    return out;
  }
  auto incoming = vocab::canonicalize(*parsed.graph).graph;

  vocab::TypeResolver types(incoming, vocab_);
  out.roots = types.instances_of(Term::iri(ns::i40c("AdministrativeShell")));
  if (out.roots.empty()) out.roots = types.instances_of(Term::iri(ns::i40c("Object")));
  if (out.roots.empty()) {
    out.status = 422;
    out.content_type = kJson;
    out.report.findings.push_back({vocab::Severity::Violation, "R0", Term::iri(base_iri_),
                                   "document contains no i40c:AdministrativeShell and no i40c:Object"});
    out.body = out.report.to_json();
    return out;
  }

  std::lock_guard writer(write_mutex_);
  auto current = state();
  auto next = std::make_shared<State>(*current);
  // Replace semantics: whatever the store says about a resource the
  // document describes is dropped first.
  for (const auto& subject : incoming.subjects()) {
    if (!subject.is_iri()) continue;
    for (const auto& t : rdf::concise_bounded_description(next->store, subject).triples()) next->store.erase(t);
  }
  next->store = rdf::merge(next->store, incoming);

  out.report = vocab::validate(next->store, vocab_);
  out.content_type = kJson;
  if (!out.report.conforms()) {
    out.status = 422;
    out.body = out.report.to_json();
    return out;
  }
  json created = json::array();
  for (const auto& root : out.roots) {
    created.push_back(root.value());
    if (root.is_iri() && !root.value().starts_with(base_iri_)) next->external.insert(root);
  }
  publish(std::move(next));
  out.status = 201;
  out.body = json{{"created", created}, {"warnings", out.report.warning_count()}}.dump();
  return out;
}

std::optional<rdf::Graph> Registry::dereference(const rdf::Term& iri) const {
  auto s = state();
  auto cbd = rdf::concise_bounded_description(s->store, iri);
  if (cbd.empty()) return std::nullopt;
  return cbd;
}

std::vector<ShellSummary> Registry::list_shells() const {
  auto s = state();
  vocab::TypeResolver types(s->store, vocab_);
  std::vector<ShellSummary> out;
  for (const auto& shell : types.instances_of(Term::iri(ns::i40c("AdministrativeShell")))) {
    ShellSummary summary{shell, {}, std::nullopt};
    try {
      summary.identifier = vocab::descriptor_of(s->store, shell, vocab_).identifier;
    } catch (const std::exception&) {
      // Unreachable while the store conforms; list the shell anyway.
    }
    if (auto label = vocab::get_label(s->store, shell, "en")) summary.label = label->value;
    out.push_back(std::move(summary));
  }
  return out;
}

bool Registry::load_snapshot(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return false;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot read snapshot " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto parsed = turtle::parse_turtle(buf.str());
  if (!parsed.ok()) {
    throw SnapshotError("snapshot " + path + " does not parse:\n" + turtle::format_diagnostics(parsed.diagnostics));
  }
  auto next = std::make_shared<State>();
  next->store = vocab::canonicalize(*parsed.graph).graph;
  auto report = vocab::validate(next->store, vocab_);
  if (!report.conforms()) throw SnapshotError("snapshot " + path + " has violations:\n" + report.to_text());
  vocab::TypeResolver types(next->store, vocab_);
  for (const auto& cls : {"AdministrativeShell", "Object"}) {
    for (const auto& root : types.instances_of(Term::iri(ns::i40c(cls)))) {
      if (root.is_iri() && !root.value().starts_with(base_iri_)) next->external.insert(root);
    }
  }
  std::lock_guard writer(write_mutex_);
  publish(std::move(next));
  return true;
}

void Registry::save_snapshot(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SnapshotError("cannot write snapshot " + tmp);
    out << turtle::serialize_turtle(state()->store);
    if (!out.flush()) throw SnapshotError("cannot write snapshot " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw SnapshotError("cannot replace snapshot " + path + ": " + ec.message());
}

rdf::Term Registry::resource_for_path(std::string_view path) const {
  if (base_path_.size() > 1 && path.starts_with(base_path_)) {
    return Term::iri(base_iri_ + std::string(path.substr(base_path_.size())));
  }
  if (path.starts_with("/")) path.remove_prefix(1);
  return Term::iri(base_iri_ + std::string(path));
}

HttpResponse Registry::handle(const HttpRequest& request) {
  const std::string& path = request.path;
  const bool get = request.method == "GET" || request.method == "HEAD";
  const bool post = request.method == "POST";
  try {
    if (path == "/components") {
      if (get) return get_components();
      if (post) {
        auto outcome = register_document(request.body);
        HttpResponse r = respond(outcome.status, outcome.content_type, outcome.body);
        if (outcome.created()) r.headers["Location"] = outcome.roots.front().value();
        return r;
      }
      return error_json(405, "use GET or POST");
    }
    if (path == "/sparql") {
      if (post) return post_sparql(request);
      return error_json(405, "use POST with an application/sparql-query body");
    }
    if (path == "/vocabulary") {
      if (get) return get_vocabulary(request);
      return error_json(405, "use GET");
    }
    if (!get) return error_json(405, "use GET");
    if (path.starts_with("/component/")) {
      auto local = path.substr(std::string_view("/component/").size());
      if (local.empty()) return error_json(404, "missing component name");
      return get_resource(Term::iri(base_iri_ + local), request);
    }
    if (path.empty() || path == "/") return error_json(404, "no resource at /");
    return get_resource(resource_for_path(path), request);
  } catch (const rdf::TermError& e) {
    return error_json(404, std::string("no such resource: ") + e.what());
  }
}

HttpResponse Registry::get_components() const {
  json list = json::array();
  for (const auto& s : list_shells()) {
    json entry{{"shell", s.shell.value()}, {"identifier", s.identifier}};
    entry["label"] = s.label ? json(*s.label) : json(nullptr);
    list.push_back(std::move(entry));
  }
  return respond(200, kJson, list.dump());
}

HttpResponse Registry::get_resource(const rdf::Term& iri, const HttpRequest& request) const {
  const std::string accept = request.header("accept");
  if (!accepts_turtle(accept)) {
    return respond(406, "text/plain",
                   "406 Not Acceptable: only " + std::string(turtle::kMediaType) + " is served; Accept was: " +
                       accept + "\n");
  }
  auto cbd = dereference(iri);
  if (!cbd) return error_json(404, "unknown resource " + iri.value());
  HttpResponse r = respond(200, turtle::kMediaType, turtle::serialize_turtle(*cbd));
  r.headers["Vary"] = "Accept";
  return r;
}

HttpResponse Registry::post_sparql(const HttpRequest& request) const {
  auto parsed = query::parse_query(request.body);
  if (!parsed.ok()) {
    bool unsupported = std::any_of(parsed.diagnostics.begin(), parsed.diagnostics.end(), [](const auto& d) {
      return d.code == turtle::DiagnosticCode::UnsupportedKeyword;
    });
    auto body = diagnostics_json(parsed.diagnostics);
    body["error"] = parsed.diagnostics.front().message;
    return respond(unsupported ? 422 : 400, kJson, body.dump());
  }
  query::rewrite_predicates(*parsed.query, vocab::canonical_predicate);
  auto snapshot = store();
  auto result = query::eval(*snapshot, *parsed.query);
  if (const auto* solutions = std::get_if<query::Solutions>(&result)) {
    return respond(200, query::kResultsMediaType, query::solutions_json(*solutions));
  }
  return respond(200, turtle::kMediaType, turtle::serialize_turtle(std::get<rdf::Graph>(result)));
}

HttpResponse Registry::get_vocabulary(const HttpRequest& request) const {
  HttpResponse r;
  r.headers["ETag"] = etag_;
  r.headers["X-Vocabulary-Version"] = vocab_.version();
  const std::string inm = request.header("if-none-match");
  if (!inm.empty() && if_none_match(inm, etag_)) {
    r.status = 304;
    return r;
  }
  r.content_type = turtle::kMediaType;
  r.body = vocabulary_turtle_;
  return r;
}

bool accepts_turtle(std::string_view accept) {
  if (trim(accept).empty()) return true;
  for (auto range : split(accept, ',')) {
    auto params = split(range, ';');
    std::string type = lower(params.front());
    double q = 1.0;
    for (std::size_t i = 1; i < params.size(); ++i) {
      std::string p = lower(params[i]);
      if (p.starts_with("q=")) {
        try {
          q = std::stod(p.substr(2));
        } catch (const std::exception&) {
          q = 0;
        }
      }
    }
    if (q <= 0) continue;
    if (type == "text/turtle" || type == "text/*" || type == "*/*") return true;
  }
  return false;
}

bool if_none_match(std::string_view header, std::string_view etag) {
  auto opaque = [](std::string_view tag) {
    if (tag.starts_with("W/")) tag.remove_prefix(2);
    return tag;
  };
  for (auto tag : split(header, ',')) {
    if (tag == "*") return true;
    if (opaque(tag) == opaque(etag)) return true;
  }
  return false;
}

}  // namespace i40sh::registry
