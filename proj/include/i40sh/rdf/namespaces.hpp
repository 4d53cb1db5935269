#pragma once

#include <string>
#include <string_view>

namespace i40sh::ns {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kI40c = "http://purl.org/eis/i40c/";
inline constexpr std::string_view kIec = "http://purl.org/eis/iec/";
inline constexpr std::string_view kPartOf =
    "http://www.ontologydesignpatterns.org/cp/owl/partof.owl#";

inline std::string rdf(std::string_view local) { return std::string(kRdf).append(local); }
inline std::string rdfs(std::string_view local) { return std::string(kRdfs).append(local); }
inline std::string xsd(std::string_view local) { return std::string(kXsd).append(local); }
inline std::string owl(std::string_view local) { return std::string(kOwl).append(local); }
inline std::string dcterms(std::string_view local) { return std::string(kDcterms).append(local); }
inline std::string skos(std::string_view local) { return std::string(kSkos).append(local); }
inline std::string i40c(std::string_view local) { return std::string(kI40c).append(local); }
inline std::string iec(std::string_view local) { return std::string(kIec).append(local); }

inline const std::string& xsd_string() {
  static const std::string iri = xsd("string");
  return iri;
}

inline const std::string& rdf_lang_string() {
  static const std::string iri = rdf("langString");
  return iri;
}

inline const std::string& rdf_type() {
  static const std::string iri = rdf("type");
  return iri;
}

}  // namespace i40sh::ns
