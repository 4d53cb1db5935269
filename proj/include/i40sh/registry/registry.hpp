#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/vocab/validate.hpp"
#include "i40sh/vocab/vocabulary.hpp"

namespace i40sh::registry {

// Header names are matched case-insensitively; keys are stored lowercase.
struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> headers;
  std::string body;

  std::string header(std::string_view name) const;
};

struct HttpResponse {
  int status = 200;
  std::string content_type;
  std::string body;
  std::map<std::string, std::string> headers;
};

struct ShellSummary {
  rdf::Term shell;
  std::string identifier;
  std::optional<std::string> label;
};

struct RegisterOutcome {
  // 201, 400 (syntax) or 422 (no roots / Violations).
  int status = 0;
  // Shells in the document, or its Objects when it has no shell. Sorted.
  std::vector<rdf::Term> roots;
  vocab::ValidationReport report;
  std::string body;
  std::string content_type;

  bool created() const { return status == 201; }
};

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The registry store and its operations, independent of the HTTP server.
//
// Readers take an immutable snapshot (shared_ptr to a const graph) and never
// block on writers; registrations serialize on a writer mutex, build a
// candidate store, validate it, and publish it with a pointer swap.
class Registry {
 public:
  explicit Registry(std::string base_iri = "http://purl.org/eis/i40c/",
                    const vocab::VocabularyDefinition& vocab = vocab::builtin_definition());

  const std::string& base_iri() const { return base_iri_; }

  // Parse, canonicalize, replace the CBD of every IRI subject the document
  // describes, validate the result and publish it; the store is unchanged
  // unless the outcome is 201.
  RegisterOutcome register_document(std::string_view turtle);

  std::shared_ptr<const rdf::Graph> store() const;
  // Registered roots outside base_iri.
  std::set<rdf::Term> external() const;

  // Concise bounded description, or nullopt if `iri` is never a subject.
  std::optional<rdf::Graph> dereference(const rdf::Term& iri) const;
  std::vector<ShellSummary> list_shells() const;

  // Loads a Turtle snapshot into an empty registry. Returns false if the
  // file does not exist; throws SnapshotError if it cannot be read, does not
  // parse, or does not validate.
  bool load_snapshot(const std::string& path);
  // Writes the store atomically (temporary file, then rename).
  void save_snapshot(const std::string& path) const;

  // Routes: GET /components, POST /components, GET /component/{local},
  // POST /sparql, GET /vocabulary, GET /{path under base}. Safe to call
  // from many threads.
  HttpResponse handle(const HttpRequest& request);

  // Request path -> resource IRI. A path that starts with the base IRI's
  // own path is resolved against its authority; any other path is appended
  // to the base.
  rdf::Term resource_for_path(std::string_view path) const;

 private:
  struct State {
    rdf::Graph store;
    std::set<rdf::Term> external;
  };

  std::shared_ptr<const State> state() const;
  void publish(std::shared_ptr<const State> next);

  HttpResponse get_components() const;
  HttpResponse get_resource(const rdf::Term& iri, const HttpRequest& request) const;
  HttpResponse post_sparql(const HttpRequest& request) const;
  HttpResponse get_vocabulary(const HttpRequest& request) const;

  std::string base_iri_;
  std::string base_path_;
  const vocab::VocabularyDefinition& vocab_;
  std::string vocabulary_turtle_;
  std::string etag_;

  mutable std::mutex state_mutex_;
  std::shared_ptr<const State> state_;
  std::mutex write_mutex_;
};

// True if an Accept header admits text/turtle (absent header, text/turtle,
// text/* or */*, with q > 0).
bool accepts_turtle(std::string_view accept);

// If-None-Match evaluation against a strong ETag: comma-separated list,
// weak "W/" tags compared by value, "*" matches anything.
bool if_none_match(std::string_view header, std::string_view etag);

}  // namespace i40sh::registry
