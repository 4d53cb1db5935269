#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "i40sh/rdf/graph.hpp"
#include "i40sh/rdf/namespaces.hpp"
#include "random_graph.hpp"

using namespace i40sh;
using i40sh::fixtures::i40c;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

Term rdf_type() { return Term::iri(ns::rdf_type()); }
Term rdfs_label() { return Term::iri(ns::rdfs("label")); }

}  // namespace

TEST(TermTest, IriMustBeAbsolute) {
  EXPECT_NO_THROW(Term::iri("http://purl.org/eis/i40c/Actuator"));
  EXPECT_NO_THROW(Term::iri("urn:isbn:123"));
  EXPECT_THROW(Term::iri("Actuator"), rdf::TermError);
  EXPECT_THROW(Term::iri("1http://x"), rdf::TermError);
  EXPECT_THROW(Term::iri("http://x y"), rdf::TermError);
  EXPECT_THROW(Term::iri(""), rdf::TermError);
}

TEST(TermTest, LanguageTagsAreLowercasedAndCompareCaseInsensitively) {
  auto upper = Term::lang_literal("Aktor", "DE-at");
  auto lower = Term::lang_literal("Aktor", "de-AT");
  EXPECT_EQ(upper.language(), "de-at");
  EXPECT_EQ(upper, lower);
  EXPECT_EQ(upper.datatype(), ns::rdf_lang_string());
  EXPECT_THROW(Term::lang_literal("x", "e n"), rdf::TermError);
  EXPECT_THROW(Term::lang_literal("x", ""), rdf::TermError);
}

TEST(TermTest, PlainLiteralHasStringDatatype) {
  auto plain = Term::literal("1501325");
  EXPECT_EQ(plain.datatype(), ns::xsd_string());
  EXPECT_FALSE(plain.has_language());
  EXPECT_EQ(plain, Term::typed_literal("1501325", ns::xsd_string()));
  EXPECT_THROW(Term::typed_literal("x", ns::rdf_lang_string()), rdf::TermError);
}

TEST(TermTest, EqualityIsStructuralAndLexical) {
  EXPECT_NE(Term::typed_literal("1.0", ns::xsd("decimal")),
            Term::typed_literal("1.00", ns::xsd("decimal")));
  EXPECT_NE(Term::literal("Single-phase"), Term::lang_literal("Single-phase", "en"));
  EXPECT_NE(Term::iri("http://x/a"), Term::literal("http://x/a"));
  EXPECT_NE(Term::blank("a"), Term::iri("http://x/a"));
}

TEST(TermTest, NTriplesEscaping) {
  EXPECT_EQ(Term::literal("a\"b\nc").ntriples(), "\"a\\\"b\\nc\"");
  EXPECT_EQ(Term::lang_literal("x", "EN").ntriples(), "\"x\"@en");
  EXPECT_EQ(Term::typed_literal("2015-11-02", ns::xsd("date")).ntriples(),
            "\"2015-11-02\"^^<http://www.w3.org/2001/XMLSchema#date>");
}

TEST(TripleTest, PositionsAreChecked) {
  EXPECT_THROW(Triple(Term::literal("x"), rdf_type(), i40c("A")), rdf::TermError);
  EXPECT_THROW(Triple(i40c("A"), Term::blank("p"), i40c("B")), rdf::TermError);
  EXPECT_THROW(Triple(i40c("A"), Term::literal("p"), i40c("B")), rdf::TermError);
  EXPECT_NO_THROW(Triple(Term::blank("s"), rdf_type(), Term::literal("o")));
}

TEST(GraphTest, InsertIntoEmptyGraph) {
  Graph g;
  EXPECT_TRUE(g.insert(i40c("Object1"), rdf_type(), i40c("Object")));
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, InsertIsSetSemantics) {
  Graph g;
  Triple t(i40c("Object1"), rdf_type(), i40c("Object"));
  EXPECT_TRUE(g.insert(t));
  EXPECT_FALSE(g.insert(t));
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, Listing3HasTwentyTriplesAndReinsertionIsANoop) {
  // 4 + 6 + 5 + 5 predicate-object pairs across AdminShell1, Object1,
  // TechnicalData1 and Platform1.
  Graph g = fixtures::load_fixture("listing3.ttl");
  ASSERT_EQ(g.size(), 20u);
  for (const auto& t : g.triples()) EXPECT_FALSE(g.insert(t));
  EXPECT_EQ(g.size(), 20u);
}

TEST(GraphTest, MatchExamples) {
  Graph g = fixtures::load_fixture("listing3.ttl");
  auto ids = g.match(i40c("Object1"), i40c("hasId"), std::nullopt);
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_EQ(ids[0].object, Term::typed_literal("1501325", ns::xsd_string()));

  EXPECT_TRUE(Graph().match(std::nullopt, std::nullopt, std::nullopt).empty());

  auto labels = g.match(std::nullopt, rdfs_label(), std::nullopt);
  EXPECT_EQ(labels.size(), 4u);
  std::set<Term> subjects;
  for (const auto& t : labels) subjects.insert(t.subject);
  EXPECT_EQ(subjects.size(), 4u);
}

TEST(GraphTest, MatchWithSubjectAndObjectUsesOsp) {
  Graph g = fixtures::load_fixture("listing3.ttl");
  auto hits = g.match(i40c("AdminShell1"), std::nullopt, i40c("Object1"));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].predicate, i40c("surround"));
  EXPECT_EQ(g.count(i40c("AdminShell1"), std::nullopt, i40c("Object1")), 1u);
}

TEST(GraphTest, IndexChoiceCoversMostBoundLeadingPositions) {
  using rdf::IndexOrder;
  EXPECT_EQ(Graph::index_for(true, true, true), IndexOrder::Spo);
  EXPECT_EQ(Graph::index_for(true, true, false), IndexOrder::Spo);
  EXPECT_EQ(Graph::index_for(true, false, false), IndexOrder::Spo);
  EXPECT_EQ(Graph::index_for(true, false, true), IndexOrder::Osp);
  EXPECT_EQ(Graph::index_for(false, true, true), IndexOrder::Pos);
  EXPECT_EQ(Graph::index_for(false, true, false), IndexOrder::Pos);
  EXPECT_EQ(Graph::index_for(false, false, true), IndexOrder::Osp);
  EXPECT_EQ(Graph::index_for(false, false, false), IndexOrder::Spo);
}

TEST(GraphTest, InsertThenEraseRestoresState) {
  Graph g = fixtures::load_fixture("listing3.ttl");
  Graph before = g;
  Triple extra(i40c("Object1"), i40c("isPartOf"), i40c("Machine7"));
  ASSERT_TRUE(g.insert(extra));
  ASSERT_TRUE(g.erase(extra));
  EXPECT_EQ(g, before);
  EXPECT_EQ(g.index_contents(rdf::IndexOrder::Pos), before.index_contents(rdf::IndexOrder::Pos));
  EXPECT_EQ(g.index_contents(rdf::IndexOrder::Osp), before.index_contents(rdf::IndexOrder::Osp));
  EXPECT_FALSE(g.erase(extra));
}

TEST(GraphProperty, IndexesStayCoherentUnderRandomInsertsAndRemovals) {
  fixtures::RandomGraphs gen(7);
  for (int round = 0; round < 200; ++round) {
    Graph g;
    std::set<Triple> model;
    for (int step = 0; step < 60; ++step) {
      Triple t = gen.triple(true);
      if (gen.uniform(3) == 0) {
        EXPECT_EQ(g.erase(t), model.erase(t) == 1);
      } else {
        EXPECT_EQ(g.insert(t), model.insert(t).second);
      }
    }
    ASSERT_TRUE(g.indexes_consistent());
    auto all = g.triples();
    EXPECT_EQ(std::set<Triple>(all.begin(), all.end()), model);
    EXPECT_EQ(g.size(), model.size());
  }
}

TEST(GraphProperty, MatchIsMonotoneInBoundPositions) {
  fixtures::RandomGraphs gen(11);
  for (int round = 0; round < 100; ++round) {
    Graph g = gen.graph(40, true);
    if (g.empty()) continue;
    auto all = g.triples();
    const Triple& pick = all[gen.uniform(all.size())];
    auto full = g.match(pick.subject, pick.predicate, pick.object);
    EXPECT_EQ(full.size(), 1u);
    auto missing = g.match(pick.subject, pick.predicate, gen.object(true));
    EXPECT_LE(missing.size(), 1u);

    std::optional<Term> s = pick.subject, p = pick.predicate, o = pick.object;
    for (int mask = 0; mask < 8; ++mask) {
      std::optional<Term> ms = (mask & 1) ? s : std::nullopt;
      std::optional<Term> mp = (mask & 2) ? p : std::nullopt;
      std::optional<Term> mo = (mask & 4) ? o : std::nullopt;
      auto narrow = g.match(ms, mp, mo);
      EXPECT_EQ(narrow.size(), g.count(ms, mp, mo));
      // Dropping any bound position can only widen the result.
      for (int drop = 0; drop < 3; ++drop) {
        if (!(mask & (1 << drop))) continue;
        auto wide = g.match(drop == 0 ? std::nullopt : ms, drop == 1 ? std::nullopt : mp,
                            drop == 2 ? std::nullopt : mo);
        std::set<Triple> wide_set(wide.begin(), wide.end());
        for (const auto& t : narrow) EXPECT_TRUE(wide_set.contains(t));
      }
      for (const auto& t : narrow) {
        if (ms) {
          EXPECT_EQ(t.subject, *ms);
        }
        if (mp) {
          EXPECT_EQ(t.predicate, *mp);
        }
        if (mo) {
          EXPECT_EQ(t.object, *mo);
        }
      }
    }
  }
}

TEST(PrefixTest, ExpandExamples) {
  rdf::PrefixMap i40c_only{{"i40c", "http://purl.org/eis/i40c/"}};
  EXPECT_EQ(rdf::expand(i40c_only, "i40c:Actuator"),
            Term::iri("http://purl.org/eis/i40c/Actuator"));
  EXPECT_THROW(rdf::expand({}, "i40c:Actuator"), rdf::UnknownPrefix);
  try {
    rdf::expand({}, "i40c:Actuator");
  } catch (const rdf::UnknownPrefix& e) {
    EXPECT_EQ(e.prefix(), "i40c");
  }
  rdf::PrefixMap rdf_only{{"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"}};
  EXPECT_EQ(rdf::expand(rdf_only, "rdf:type"),
            Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"));
}

TEST(PrefixTest, CompactPrefersLongestNamespaceAndSafeLocals) {
  rdf::PrefixMap prefixes{{"ex", "http://example.org/"}, {"exa", "http://example.org/a/"}};
  EXPECT_EQ(rdf::compact(prefixes, "http://example.org/a/b"), "exa:b");
  EXPECT_EQ(rdf::compact(prefixes, "http://example.org/x"), "ex:x");
  EXPECT_EQ(rdf::compact(prefixes, "http://example.org/x y"), std::nullopt);
  EXPECT_EQ(rdf::compact(prefixes, "http://example.org/x."), std::nullopt);
  EXPECT_EQ(rdf::compact(prefixes, "http://other.org/x"), std::nullopt);
}

TEST(PrefixProperty, ExpandAfterCompactIsIdentity) {
  rdf::PrefixMap prefixes{{"i40c", "http://purl.org/eis/i40c/"},
                          {"rdfs", std::string(ns::kRdfs)},
                          {"ex", "http://example.org/"}};
  std::mt19937 rng(3);
  const std::string alphabet = "abcXYZ019_-.";
  for (int i = 0; i < 500; ++i) {
    std::string local;
    auto len = rng() % 8;
    for (std::size_t k = 0; k < len; ++k) local += alphabet[rng() % alphabet.size()];
    for (const auto& [label, namespace_iri] : prefixes) {
      std::string iri = namespace_iri + local;
      auto qname = rdf::compact(prefixes, iri);
      if (!rdf::is_safe_local_name(local)) continue;
      ASSERT_TRUE(qname.has_value()) << iri;
      EXPECT_EQ(rdf::expand(prefixes, *qname).value(), iri);
    }
  }
}

TEST(MergeTest, EmptyIsIdentity) {
  Graph g = fixtures::load_fixture("listing3.ttl");
  EXPECT_EQ(rdf::merge(g, Graph()), g);
  EXPECT_EQ(rdf::merge(Graph(), g), g);
}

TEST(MergeTest, ListingsOneAndTwoShareTheIdentifierTriple) {
  Graph one = fixtures::load_fixture("listing1.ttl");
  Graph two = fixtures::load_fixture("listing2.ttl");
  Graph merged = rdf::merge(one, two);
  auto ids = merged.match(i40c("ActuatorAAA001"), Term::iri(ns::dcterms("identifier")),
                          Term::literal("AAA001"));
  EXPECT_EQ(ids.size(), 1u);
  // 6 + 6 triples, sharing the type and identifier statements.
  EXPECT_EQ(one.size(), 6u);
  EXPECT_EQ(two.size(), 6u);
  EXPECT_EQ(merged.size(), 10u);
  EXPECT_EQ(merged.prefixes().at("dcterms"), std::string(ns::kDcterms));
}

TEST(MergeTest, CollidingBlankNodesStayDistinct) {
  Graph a, b;
  a.insert(Term::blank("b1"), rdfs_label(), Term::literal("first"));
  b.insert(Term::blank("b1"), rdfs_label(), Term::literal("second"));
  Graph merged = rdf::merge(a, b);
  EXPECT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged.blank_labels().size(), 2u);
}

TEST(MergeTest, PrefixesOfFirstGraphWin) {
  Graph a(rdf::PrefixMap{{"ex", "http://a.org/"}});
  Graph b(rdf::PrefixMap{{"ex", "http://b.org/"}, {"other", "http://o.org/"}});
  Graph merged = rdf::merge(a, b);
  EXPECT_EQ(merged.prefixes().at("ex"), "http://a.org/");
  EXPECT_EQ(merged.prefixes().at("other"), "http://o.org/");
}

TEST(MergeProperty, IdempotentOnGroundGraphsAndAssociativeUpToRenaming) {
  fixtures::RandomGraphs gen(19);
  for (int round = 0; round < 100; ++round) {
    Graph ground = gen.graph(20, false);
    EXPECT_EQ(rdf::merge(ground, ground), ground);

    Graph a = gen.graph(10, true), b = gen.graph(10, true), c = gen.graph(10, true);
    Graph left = rdf::merge(rdf::merge(a, b), c);
    Graph right = rdf::merge(a, rdf::merge(b, c));
    EXPECT_TRUE(rdf::isomorphic(left, right));
    EXPECT_EQ(left.size(), right.size());
  }
}

TEST(IsomorphismTest, RenamingIsInvisibleButStructureIsNot) {
  Graph a, b, c;
  a.insert(Term::blank("x"), rdfs_label(), Term::literal("n"));
  a.insert(i40c("S"), i40c("p"), Term::blank("x"));
  b.insert(Term::blank("y"), rdfs_label(), Term::literal("n"));
  b.insert(i40c("S"), i40c("p"), Term::blank("y"));
  c.insert(Term::blank("y"), rdfs_label(), Term::literal("n"));
  c.insert(i40c("S"), i40c("p"), Term::blank("z"));
  EXPECT_TRUE(rdf::isomorphic(a, b));
  EXPECT_FALSE(rdf::isomorphic(a, c));
  EXPECT_FALSE(a == b);
}

TEST(ConciseBoundedDescriptionTest, FollowsBlankNodesOnly) {
  Graph g;
  g.insert(i40c("S"), i40c("p"), Term::blank("n"));
  g.insert(Term::blank("n"), i40c("q"), Term::blank("m"));
  g.insert(Term::blank("m"), i40c("r"), Term::literal("deep"));
  g.insert(i40c("S"), i40c("link"), i40c("Other"));
  g.insert(i40c("Other"), i40c("q"), Term::literal("not included"));
  Graph cbd = rdf::concise_bounded_description(g, i40c("S"));
  EXPECT_EQ(cbd.size(), 4u);
  EXPECT_TRUE(cbd.match(i40c("Other"), std::nullopt, std::nullopt).empty());
  EXPECT_TRUE(rdf::concise_bounded_description(g, i40c("Missing")).empty());
}
