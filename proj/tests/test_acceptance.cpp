// End-to-end acceptance run: executes the full verification suite once and
// maps every suite check onto the eleven headline facts the library is
// supposed to establish, printing one line per fact.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <initializer_list>
#include <string>

#include "ginv/report.hpp"

using namespace ginv;

namespace {

const VerificationReport& full_report() {
  static const VerificationReport rep = [] {
    VerifyOptions opts;
    opts.suite = SuiteKind::Full;
    opts.jobs = 0;  // use the hardware
    std::printf("running the full verification suite (this takes a few "
                "minutes; the degree-1 generation sweep dominates)...\n");
    std::fflush(stdout);
    VerificationReport r = run_verification(opts);
    std::printf("suite finished: %zu checks\n", r.checks.size());
    return r;
  }();
  return rep;
}

bool passed(const std::string& id) {
  for (const auto& c : full_report().checks)
    if (c.id == id) return c.verdict == Verdict::Pass;
  return false;
}

bool criterion(int number, const char* description,
               std::initializer_list<const char*> ids) {
  bool ok = true;
  for (const char* id : ids) ok = passed(id) && ok;
  std::printf("criterion %2d: %s — %s\n", number, ok ? "pass" : "FAIL",
              description);
  std::fflush(stdout);
  if (!ok)
    for (const char* id : ids)
      if (!passed(id)) std::printf("    failing check: %s\n", id);
  return ok;
}

}  // namespace

TEST_CASE("criterion 1: matching-space dimensions follow the Catalan numbers") {
  CHECK(criterion(1, "dimensions 2, 5, 14, 42 for 4..10 points",
                  {"dims.catalan"}));
}

TEST_CASE("criterion 2: the three 4-point matchings satisfy one linear relation") {
  CHECK(criterion(2, "unique linear relation with coefficients 1, -1, 1",
                  {"n4.linear.relations"}));
}

TEST_CASE("criterion 3: five points") {
  CHECK(criterion(3,
                  "no degree-(1,...,1) invariants, 6-dimensional doubled piece, "
                  "5 quadrics spanned by the rotated binomials",
                  {"n5.dims", "n5.kernel2.dim", "n5.delpezzo.span"}));
}

TEST_CASE("criterion 4: six points") {
  CHECK(criterion(4,
                  "no quadric relations; one cubic, spanned by the binomial "
                  "cubic, proportional to the alternating cubic",
                  {"n6.kernel2.dim", "n6.kernel3.dim", "n6.segre.span",
                   "n6.skew.proportional"}));
}

TEST_CASE("criterion 5: eight points") {
  CHECK(criterion(5,
                  "14 quadrics = orbit of the binomial quadric = partial "
                  "derivatives of the sign-alternating cubic",
                  {"n8.kernel2.dim", "n8.partials.span", "n8.orbit.span",
                   "n8.skew.sign"}));
}

TEST_CASE("criterion 6: quadrics generate over Q but not over F_3") {
  CHECK(criterion(6,
                  "cubic relations are quadric multiples rationally; one "
                  "extra generator appears in characteristic 3",
                  {"n8.generation.q", "char3-generation"}));
}

TEST_CASE("criterion 7: ten points") {
  CHECK(criterion(7,
                  "300-dimensional quadric space equal to the orbit of the "
                  "extended binomial quadric",
                  {"n10.kernel2.dim", "n10.orbit.span"}));
}

TEST_CASE("criterion 8: symmetric-group decompositions") {
  CHECK(criterion(8,
                  "multiplicity-free squares with the predicted all-even "
                  "4-part extra summands; the matching spaces are irreducible",
                  {"rep.keyfact", "rep.r1.irreducible"}));
}

TEST_CASE("criterion 9: the sign character in the cubic power") {
  CHECK(criterion(9, "present exactly once at 8 points, absent at 10",
                  {"skew.sign.multiplicity"}));
}

TEST_CASE("criterion 10: degree-1 generation across small weights") {
  CHECK(criterion(10, "every tested weight configuration is generated",
                  {"kempe.generation"}));
}

TEST_CASE("criterion 11: property suites") {
  CHECK(criterion(11,
                  "straightening oracle, zero expansions, rewriting move, "
                  "rank-nullity",
                  {"property.straighten.oracle", "property.relations.expand",
                   "property.plucker.expand", "property.rank.nullity"}));
}

TEST_CASE("the full report covers every registered claim exactly once") {
  const auto& rep = full_report();
  auto ids = known_claim_ids();
  REQUIRE(rep.checks.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(rep.checks[i].id == ids[i]);
  // nothing failed; the only allowed skip is the gated stretch check
  for (const auto& c : rep.checks) {
    CHECK(c.verdict != Verdict::Fail);
    if (c.verdict == Verdict::Skipped) CHECK(c.id == "stretch.n12.kernel2");
  }
}
