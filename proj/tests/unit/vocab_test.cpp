#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "random_graph.hpp"
#include "shell_graphs.hpp"
#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/vocab/canonicalize.hpp"
#include "i40sh/vocab/descriptor.hpp"
#include "i40sh/vocab/labels.hpp"
#include "i40sh/vocab/validate.hpp"
#include "i40sh/vocab/vocabulary.hpp"

using namespace i40sh;
using fixtures::i40c;
using rdf::Term;
using rdf::Triple;

namespace {

Term rdfs(std::string_view l) { return Term::iri(ns::rdfs(l)); }
Term type() { return Term::iri(ns::rdf_type()); }

rdf::Graph listing3() { return vocab::canonicalize(fixtures::load_fixture("listing3.ttl")).graph; }

std::vector<std::string> rule_focus(const vocab::ValidationReport& r) {
  std::vector<std::string> out;
  for (const auto& f : r.findings) {
    out.push_back(std::string(vocab::severity_name(f.severity)) + " " + f.rule_id + " " + f.focus.value());
  }
  return out;
}

}  // namespace

// --- builtin vocabulary -------------------------------------------------------

TEST(BuiltinVocabulary, ContainsPaperSubclassAxioms) {
  auto g = vocab::builtin_vocabulary();
  EXPECT_TRUE(g.contains(Triple(i40c("Actuator"), rdfs("subClassOf"), i40c("Component"))));
  EXPECT_TRUE(g.contains(Triple(i40c("Platform"), rdfs("subClassOf"), i40c("TechnicalFunctionality"))));
  EXPECT_FALSE(vocab::has_subclass_cycle(g));
}

TEST(BuiltinVocabulary, DeclaresRequiredClassesAndProperties) {
  const auto& def = vocab::builtin_definition();
  for (const char* c : {"AdministrativeShell", "Object", "TechnicalFunctionality", "Platform", "Manifest", "Data",
                        "TechnicalData", "Component", "Actuator"}) {
    EXPECT_TRUE(def.is_class(i40c(c))) << c;
  }
  for (const char* p : {"surround", "hasTechnicalFunctionality", "hasId", "hasPhase", "hasTechnicalData", "image",
                        "hasVersion", "hasDate", "functionBlockUrl", "brakingResistance", "outputFrequency",
                        "display", "isPartOf"}) {
    EXPECT_TRUE(def.is_property(i40c(p))) << p;
  }
  EXPECT_TRUE(def.graph().contains(Triple(i40c("isPartOf"), rdfs("subPropertyOf"),
                                          Term::iri(std::string(ns::kPartOf) + "isPartOf"))));
  EXPECT_EQ(def.version(), "1.0.0");
}

TEST(BuiltinVocabulary, EveryClassAndPropertyLabelledInEnglishAndGerman) {
  const auto& def = vocab::builtin_definition();
  std::set<Term> terms(def.classes().begin(), def.classes().end());
  for (const auto& [p, _] : def.properties()) terms.insert(p);
  for (const auto& t : terms) {
    EXPECT_TRUE(def.labels().contains({t, "en"})) << t.ntriples();
    EXPECT_TRUE(def.labels().contains({t, "de"})) << t.ntriples();
  }
}

TEST(BuiltinVocabulary, IecSkeletonHasFourRootsAndNoCrossNamespaceSubclassing) {
  const auto& def = vocab::builtin_definition();
  std::set<std::string> roots;
  for (const auto& c : def.classes()) {
    if (!c.value().starts_with(ns::kIec)) continue;
    bool has_parent = std::any_of(def.subclass_edges().begin(), def.subclass_edges().end(),
                                  [&](const auto& e) { return e.first == c; });
    if (!has_parent) roots.insert(c.value().substr(ns::kIec.size()));
  }
  EXPECT_EQ(roots, (std::set<std::string>{"Component", "Feature", "Geometry", "Material"}));

  auto ns_of = [](const Term& t) { return t.value().substr(0, t.value().find_last_of("/#") + 1); };
  for (const auto& [sub, super] : def.subclass_edges()) EXPECT_EQ(ns_of(sub), ns_of(super));

  EXPECT_TRUE(def.graph().contains(
      Triple(i40c("Object"), Term::iri(ns::skos("closeMatch")), Term::iri(ns::iec("Component")))));
}

TEST(BuiltinVocabulary, LabelLookupFallsBackToEnglish) {
  const auto& def = vocab::builtin_definition();
  EXPECT_EQ(def.label(i40c("AdministrativeShell"), "de"), "Verwaltungsschale");
  EXPECT_EQ(def.label(i40c("AdministrativeShell"), "fr"), "Administrative Shell");
  EXPECT_EQ(def.label(i40c("NoSuchThing"), "en"), std::nullopt);
}

TEST(VocabularyDefinition, RejectsSubclassCycle) {
  auto g = vocab::builtin_vocabulary();
  g.insert(i40c("Object"), rdfs("subClassOf"), i40c("Actuator"));
  EXPECT_TRUE(vocab::has_subclass_cycle(g));
  EXPECT_THROW(vocab::VocabularyDefinition::from_graph(g), vocab::VocabularyError);
}

TEST(VocabularyDefinition, RejectsUndeclaredDomain) {
  auto g = vocab::builtin_vocabulary();
  g.insert(i40c("weight"), type(), Term::iri(ns::rdf("Property")));
  g.insert(i40c("weight"), rdfs("domain"), i40c("Undeclared"));
  EXPECT_THROW(vocab::VocabularyDefinition::from_graph(g), vocab::VocabularyError);
}

TEST(VocabularyDefinition, DatatypeRangesAreAccepted) {
  auto g = vocab::builtin_vocabulary();
  g.insert(i40c("weight"), type(), Term::iri(ns::rdf("Property")));
  g.insert(i40c("weight"), rdfs("range"), Term::iri(ns::xsd("decimal")));
  EXPECT_NO_THROW(vocab::VocabularyDefinition::from_graph(g));
}

TEST(TypeResolver, FollowsVocabularyAndDataSubclassEdges) {
  rdf::Graph g;
  g.insert(i40c("A1"), type(), i40c("Actuator"));
  g.insert(i40c("Gripper"), rdfs("subClassOf"), i40c("Actuator"));
  g.insert(i40c("G1"), type(), i40c("Gripper"));
  g.insert(i40c("P1"), type(), i40c("Platform"));
  vocab::TypeResolver types(g, vocab::builtin_definition());
  EXPECT_TRUE(types.has_type(i40c("A1"), i40c("Object")));
  EXPECT_TRUE(types.has_type(i40c("G1"), i40c("Object")));
  EXPECT_FALSE(types.has_type(i40c("P1"), i40c("Object")));
  EXPECT_EQ(types.instances_of(i40c("Object")), (std::vector<Term>{i40c("A1"), i40c("G1")}));
}

// --- canonicalize -------------------------------------------------------------

TEST(Canonicalize, Listing3RewritesThreePredicates) {
  auto raw = fixtures::load_fixture("listing3.ttl");
  auto [graph, rewrites] = vocab::canonicalize(raw);
  ASSERT_EQ(rewrites.size(), 3u);
  std::set<std::string> variants;
  for (const auto& r : rewrites) {
    variants.insert(r.original.predicate.value());
    EXPECT_EQ(r.original.subject, r.canonical.subject);
    EXPECT_EQ(r.original.object, r.canonical.object);
    EXPECT_TRUE(graph.contains(r.canonical));
    EXPECT_FALSE(graph.contains(r.original));
  }
  EXPECT_EQ(variants, (std::set<std::string>{ns::i40c("hasTechFuncionality"), ns::i40c("BrakingResistance"),
                                             ns::i40c("Outputfrequency")}));
  EXPECT_EQ(graph.size(), raw.size());
  EXPECT_EQ(graph.prefixes(), raw.prefixes());
}

TEST(Canonicalize, CanonicalGraphIsUnchanged) {
  auto g = listing3();
  auto again = vocab::canonicalize(g);
  EXPECT_TRUE(again.rewrites.empty());
  EXPECT_EQ(again.graph, g);
}

TEST(Canonicalize, BrakingResistancePatternMatchesOnce) {
  auto g = listing3();
  auto hits = g.match(std::nullopt, i40c("brakingResistance"), std::nullopt);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].subject, i40c("TechnicalData1"));
  EXPECT_EQ(hits[0].object, Term::literal("60 Ohm"));
}

TEST(Canonicalize, AliasTableCoversBothFunctionalitySpellings) {
  EXPECT_EQ(vocab::canonical_predicate(i40c("hasTechnicalFuncionality")), i40c("hasTechnicalFunctionality"));
  EXPECT_EQ(vocab::canonical_predicate(i40c("hasTechFuncionality")), i40c("hasTechnicalFunctionality"));
  EXPECT_EQ(vocab::canonical_predicate(i40c("hasTechnicalFunctionality")), std::nullopt);
  // Every canonical target is a declared property.
  for (const auto& a : vocab::predicate_aliases()) {
    EXPECT_TRUE(vocab::builtin_definition().is_property(Term::iri(a.canonical))) << a.canonical;
  }
}

TEST(CanonicalizeProperty, Idempotent) {
  fixtures::RandomGraphs gen(7);
  std::vector<Term> variants;
  for (const auto& a : vocab::predicate_aliases()) variants.push_back(Term::iri(a.variant));
  for (int iter = 0; iter < 300; ++iter) {
    rdf::Graph g = gen.graph(20, true);
    for (int k = 0; k < 5; ++k) {
      g.insert(gen.subject(true), variants[gen.uniform(variants.size())], gen.object(true));
    }
    auto once = vocab::canonicalize(g).graph;
    auto twice = vocab::canonicalize(once);
    EXPECT_EQ(twice.graph, once);
    EXPECT_TRUE(twice.rewrites.empty());
    for (const auto& t : once.triples()) EXPECT_FALSE(vocab::canonical_predicate(t.predicate).has_value());
  }
}

// --- validate -----------------------------------------------------------------

TEST(Validate, Listing3HasNoViolations) {
  auto report = vocab::validate(listing3());
  EXPECT_EQ(report.violation_count(), 0u);
  EXPECT_TRUE(report.conforms());
  // Worked by hand: the shell label carries no language (R4, and fewer
  // than two languages for R5), Object1 is labelled in English only, and
  // the image is a string literal.
  EXPECT_EQ(rule_focus(report), (std::vector<std::string>{"Warning R4 " + ns::i40c("AdminShell1"),
                                                          "Warning R5 " + ns::i40c("AdminShell1"),
                                                          "Warning R5 " + ns::i40c("Object1"),
                                                          "Warning R8 " + ns::i40c("Object1")}));
}

TEST(Validate, UncanonicalizedListing3WarnsAboutVariantPredicates) {
  auto report = vocab::validate(fixtures::load_fixture("listing3.ttl"));
  EXPECT_TRUE(report.conforms());
  auto r7 = report.by_rule("R7");
  ASSERT_EQ(r7.size(), 3u);
  EXPECT_EQ(r7[0].focus, i40c("AdminShell1"));
  EXPECT_EQ(r7[1].focus, i40c("TechnicalData1"));
  EXPECT_EQ(r7[2].focus, i40c("TechnicalData1"));
}

TEST(Validate, MissingSurroundIsOneR1Violation) {
  auto g = listing3();
  ASSERT_TRUE(g.erase(Triple(i40c("AdminShell1"), i40c("surround"), i40c("Object1"))));
  auto report = vocab::validate(g);
  ASSERT_EQ(report.violation_count(), 1u);
  auto r1 = report.by_rule("R1");
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0].focus, i40c("AdminShell1"));
  EXPECT_EQ(r1[0].severity, vocab::Severity::Violation);
}

TEST(Validate, Listing2LabelsPassR4AndR5) {
  auto report = vocab::validate(fixtures::load_fixture("listing2.ttl"));
  EXPECT_TRUE(report.by_rule("R4").empty());
  EXPECT_TRUE(report.by_rule("R5").empty());
  EXPECT_TRUE(report.findings.empty());
}

TEST(Validate, Listing1ActuatorIsAnObjectViaSubclassing) {
  auto report = vocab::validate(fixtures::load_fixture("listing1.ttl"));
  EXPECT_TRUE(report.conforms());
  // dcterms:identifier satisfies R3; the untagged label triggers R4 and R5.
  EXPECT_EQ(rule_focus(report), (std::vector<std::string>{"Warning R4 " + ns::i40c("ActuatorAAA001"),
                                                          "Warning R5 " + ns::i40c("ActuatorAAA001")}));
}

TEST(Validate, SurroundToUntypedNodeViolatesR1) {
  auto g = listing3();
  g.erase(Triple(i40c("Object1"), type(), i40c("Object")));
  auto report = vocab::validate(g);
  ASSERT_EQ(report.by_rule("R1").size(), 1u);
  EXPECT_NE(report.by_rule("R1")[0].message.find("not typed"), std::string::npos);
}

TEST(Validate, TwoSurroundsViolateR1) {
  auto g = listing3();
  g.insert(i40c("AdminShell1"), i40c("surround"), i40c("TechnicalData1"));
  EXPECT_EQ(vocab::validate(g).by_rule("R1").size(), 1u);
}

TEST(Validate, NonHttpObjectViolatesR2) {
  rdf::Graph g;
  Term urn = Term::iri("urn:uuid:1234");
  g.insert(urn, type(), i40c("Object"));
  g.insert(urn, i40c("hasId"), Term::literal("1"));
  Term blank = Term::blank("o");
  g.insert(blank, type(), i40c("Object"));
  g.insert(blank, i40c("hasId"), Term::literal("2"));
  auto r2 = vocab::validate(g).by_rule("R2");
  ASSERT_EQ(r2.size(), 2u);
}

TEST(Validate, ObjectWithoutIdentifierViolatesR3) {
  auto g = listing3();
  g.erase(Triple(i40c("Object1"), i40c("hasId"), Term::literal("1501325")));
  auto report = vocab::validate(g);
  ASSERT_EQ(report.violation_count(), 1u);
  EXPECT_EQ(report.by_rule("R3").size(), 1u);
}

TEST(Validate, BadDateViolatesR6) {
  auto g = listing3();
  g.erase(Triple(i40c("Platform1"), i40c("hasDate"), Term::typed_literal("2015-11-02", ns::xsd("date"))));
  g.insert(i40c("Platform1"), i40c("hasDate"), Term::typed_literal("2015-02-30", ns::xsd("date")));
  auto report = vocab::validate(g);
  ASSERT_EQ(report.by_rule("R6").size(), 1u);
  EXPECT_EQ(report.by_rule("R6")[0].focus, i40c("Platform1"));
}

TEST(Validate, UnknownPredicateWarnsR7) {
  auto g = listing3();
  g.insert(i40c("Object1"), i40c("colour"), Term::literal("blue"));
  auto r7 = vocab::validate(g).by_rule("R7");
  ASSERT_EQ(r7.size(), 1u);
  EXPECT_EQ(r7[0].severity, vocab::Severity::Warning);
  EXPECT_NE(r7[0].message.find("colour"), std::string::npos);
}

TEST(Validate, ReportJsonCarriesCounts) {
  auto json = vocab::validate(listing3()).to_json();
  EXPECT_NE(json.find("\"conforms\":true"), std::string::npos);
  EXPECT_NE(json.find("\"warnings\":4"), std::string::npos);
  EXPECT_NE(json.find("\"rule\":\"R8\""), std::string::npos);
}

TEST(XsdDate, LexicalForms) {
  for (const char* ok : {"2015-11-02", "2016-02-29", "2015-11-02Z", "2015-11-02+01:00", "-0044-03-15",
                         "2015-11-02-14:00", "12345-01-01"}) {
    EXPECT_TRUE(vocab::is_valid_xsd_date(ok)) << ok;
  }
  for (const char* bad : {"", "2015-11-2", "2015-13-01", "2015-02-29", "15-11-02", "2015-11-02T00:00",
                          "2015-11-02+15:00", "2015-11-02+01", "02.11.2015", "2015-00-10", "012345-01-01"}) {
    EXPECT_FALSE(vocab::is_valid_xsd_date(bad)) << bad;
  }
}

// Every day of a few years, against a direct leap-year computation.
TEST(XsdDate, AgreesWithCalendarOracle) {
  const int month_days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  for (int year : {1900, 2000, 2015, 2016, 2100}) {
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    for (int m = 1; m <= 12; ++m) {
      for (int d = 1; d <= 32; ++d) {
        int limit = month_days[m - 1] + (m == 2 && leap ? 1 : 0);
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, m, d);
        EXPECT_EQ(vocab::is_valid_xsd_date(buf), d <= limit) << buf;
      }
    }
  }
}

TEST(ValidateProperty, OrderIndependent) {
  fixtures::RandomShells shells(11);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = shells.graph(1 + shells.pick(4));
    for (const auto& t : listing3().triples()) g.insert(t);
    auto triples = g.triples();
    auto expected = vocab::validate(g);
    std::shuffle(triples.begin(), triples.end(), shells.rng());
    rdf::Graph shuffled;
    for (const auto& t : triples) shuffled.insert(t);
    EXPECT_EQ(vocab::validate(shuffled), expected);
  }
}

TEST(ValidateProperty, GeneratedShellGraphsConform) {
  fixtures::RandomShells shells(3);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = shells.graph(1 + shells.pick(5));
    auto report = vocab::validate(g);
    EXPECT_TRUE(report.conforms()) << report.to_text();
  }
}

TEST(ValidateProperty, DeletingAnySurroundAddsExactlyOneViolation) {
  fixtures::RandomShells shells(5);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = shells.graph(1 + shells.pick(5));
    auto before = vocab::validate(g).violation_count();
    auto surrounds = g.match(std::nullopt, i40c("surround"), std::nullopt);
    const auto& victim = surrounds[shells.pick(static_cast<int>(surrounds.size()))];
    g.erase(victim);
    auto after = vocab::validate(g);
    EXPECT_EQ(after.violation_count(), before + 1);
    auto r1 = after.by_rule("R1");
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_EQ(r1[0].focus, victim.subject);
  }
}

// --- labels -------------------------------------------------------------------

TEST(GetLabel, ExactLanguage) {
  auto g = fixtures::load_fixture("listing2.ttl");
  auto l = vocab::get_label(g, i40c("ActuatorAAA001"), "de");
  ASSERT_TRUE(l);
  EXPECT_EQ(l->value, "Aktor mit ID AAA001");
  EXPECT_EQ(l->match, vocab::LabelMatch::Exact);
}

TEST(GetLabel, FallsBackToEnglish) {
  auto g = fixtures::load_fixture("listing2.ttl");
  auto l = vocab::get_label(g, i40c("ActuatorAAA001"), "fr");
  ASSERT_TRUE(l);
  EXPECT_EQ(l->value, "Actuator with ID AAA001");
  EXPECT_EQ(l->language, "en");
  EXPECT_EQ(l->match, vocab::LabelMatch::English);
}

TEST(GetLabel, FallsBackToAnyThenAbsent) {
  auto g = fixtures::load_fixture("listing1.ttl");
  auto l = vocab::get_label(g, i40c("ActuatorAAA001"), "de");
  ASSERT_TRUE(l);
  EXPECT_EQ(l->value, "Actuator ID AAA001");
  EXPECT_EQ(l->match, vocab::LabelMatch::Any);
  EXPECT_FALSE(vocab::get_label(g, i40c("Nothing"), "en"));
}

TEST(GetLabel, LanguageMatchIsCaseInsensitive) {
  auto g = fixtures::load_fixture("listing2.ttl");
  EXPECT_EQ(vocab::get_label(g, i40c("ActuatorAAA001"), "DE")->match, vocab::LabelMatch::Exact);
}

// --- descriptor ---------------------------------------------------------------

TEST(Descriptor, Listing3AdminShell) {
  auto d = vocab::descriptor_of(listing3(), i40c("AdminShell1"));
  EXPECT_EQ(d.shell, i40c("AdminShell1"));
  EXPECT_EQ(d.object, i40c("Object1"));
  EXPECT_EQ(d.identifier, "1501325");
  EXPECT_EQ(d.technical_functionality, i40c("Platform1"));
  EXPECT_EQ(d.technical_data, i40c("TechnicalData1"));
  EXPECT_EQ(d.labels, (std::map<std::string, std::string>{{"", "AdminShell1"}}));
}

TEST(Descriptor, ObjectIsNotAShell) {
  EXPECT_THROW(vocab::descriptor_of(listing3(), i40c("Object1")), vocab::NotAShell);
}

TEST(Descriptor, TechnicalDataIsOptional) {
  auto g = listing3();
  g.erase(Triple(i40c("Object1"), i40c("hasTechnicalData"), i40c("TechnicalData1")));
  auto d = vocab::descriptor_of(g, i40c("AdminShell1"));
  EXPECT_FALSE(d.technical_data.has_value());
}

TEST(Descriptor, InvalidShellCarriesFindings) {
  auto g = listing3();
  g.erase(Triple(i40c("AdminShell1"), i40c("surround"), i40c("Object1")));
  try {
    vocab::descriptor_of(g, i40c("AdminShell1"));
    FAIL() << "expected InvalidShell";
  } catch (const vocab::InvalidShell& e) {
    ASSERT_EQ(e.findings().size(), 1u);
    EXPECT_EQ(e.findings()[0].rule_id, "R1");
  }
}

TEST(DescriptorProperty, SucceedsForEveryShellOfConformingGraph) {
  fixtures::RandomShells shells(13);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = shells.graph(1 + shells.pick(5));
    ASSERT_TRUE(vocab::validate(g).conforms());
    vocab::TypeResolver types(g, vocab::builtin_definition());
    for (const auto& shell : types.instances_of(i40c("AdministrativeShell"))) {
      auto d = vocab::descriptor_of(g, shell);
      EXPECT_TRUE(g.contains(Triple(shell, i40c("surround"), d.object)));
      EXPECT_FALSE(d.identifier.empty());
    }
  }
}
