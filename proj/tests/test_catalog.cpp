#include <doctest.h>

#include <set>
#include <variant>

#include "hmlift/catalog.hpp"
#include "hmlift/parser.hpp"

using namespace hmlift;

namespace {
const PropertyOutcome& outcome(const EntryReport& r, const std::string& property) {
  for (const auto& o : r.outcomes)
    if (o.property == property) return o;
  FAIL("missing property " << property);
  throw;
}
}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("registry holds every entry once") {
    const std::set<std::string> expected = {
        "ex1.4.i-zw", "ex1.4.i-zwbar", "ex1.4.ii-hopf-construction", "ex1.4.iii-quaternion",
        "ex1.4.iv-hyperbolic-stereographic", "ex1.4.v-orthogonal-projection", "ex2.4-complex-lift-Q",
        "ex3.1.iii-quaternion-real-lift", "ex3.5-antilift-obstruction", "ex3.7-R16-to-C"};
    std::set<std::string> ids;
    for (const auto& e : catalog()) {
      CHECK(ids.insert(e.id).second);
      CHECK(!e.expected.empty());
      CHECK(!e.summary.empty());
    }
    CHECK(ids == expected);
  }

  TEST_CASE("definitions parse to their declared kind") {
    for (const auto& e : catalog()) {
      const ParsedMap m = parse_map(e.definition);
      switch (e.kind) {
        case CatalogEntry::Kind::RealPoly:
        case CatalogEntry::Kind::Quadratic: CHECK_MESSAGE(std::holds_alternative<RealPolyMap>(m), e.id); break;
        case CatalogEntry::Kind::ComplexPoly: CHECK_MESSAGE(std::holds_alternative<ComplexPolyMap>(m), e.id); break;
        case CatalogEntry::Kind::Smooth: CHECK_MESSAGE(std::holds_alternative<SmoothMap>(m), e.id); break;
      }
    }
  }

  TEST_CASE("every entry reproduces") {
    for (const auto& e : catalog()) {
      const EntryReport r = run_entry(e.id);
      CHECK_MESSAGE(r.ok(), e.id);
      CHECK(r.outcomes.size() == e.expected.size());
      for (const auto& o : r.outcomes) CHECK_MESSAGE(o.matches(), e.id << ": " << o.property);
    }
  }

  TEST_CASE("entry verdicts") {
    const EntryReport zw = run_entry("ex1.4.i-zw");
    CHECK(outcome(zw, "harmonic-morphism").actual);
    CHECK(outcome(zw, "holomorphic").actual);

    const EntryReport qr = run_entry("ex3.1.iii-quaternion-real-lift");
    CHECK(outcome(qr, "harmonic-morphism").actual);
    CHECK(!outcome(qr, "orthogonal-multiplication").actual);

    const EntryReport st = run_entry("ex1.4.iv-hyperbolic-stereographic");
    CHECK(outcome(st, "numeric-harmonic-morphism").actual);
    CHECK(!outcome(st, "lift-numeric-hwc").actual);

    const EntryReport k = run_entry("ex3.7-R16-to-C");
    CHECK(outcome(k, "not-kaehler-certified").actual);
    CHECK(!k.details.empty());
    CHECK(!k.notes.empty());
  }

  TEST_CASE("unknown ids") {
    try {
      (void)lookup("ex9.9-nothing");
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownId);
    }
    CHECK_THROWS_AS(run_entry("nope"), Error);
  }
}
