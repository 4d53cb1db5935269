#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/turtle/turtle.hpp"

namespace i40sh::fixtures {

inline std::string fixture_path(const std::string& name) {
  return std::string(I40SH_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline rdf::Graph parse_or_throw(std::string_view text) {
  auto result = turtle::parse_turtle(text);
  if (!result.ok())
    throw std::runtime_error("fixture did not parse:\n" +
                             turtle::format_diagnostics(result.diagnostics));
  return *std::move(result.graph);
}

inline rdf::Graph load_fixture(const std::string& name) {
  return parse_or_throw(read_fixture(name));
}

inline rdf::Term i40c(std::string_view local) {
  return rdf::Term::iri("http://purl.org/eis/i40c/" + std::string(local));
}

}  // namespace i40sh::fixtures
