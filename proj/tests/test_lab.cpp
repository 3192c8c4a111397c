#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chern/poly_text.hpp"
#include "chern/report.hpp"

using namespace chern;

namespace {

LabConfig quick() {
  LabConfig cfg;
  cfg.trials = 4;  // keep unit tests brisk; acceptance runs the full battery
  cfg.nmax = 8;
  cfg.seed = 42;
  return cfg;
}

const CorpusEntry& entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  REQUIRE(false);
  return corpus.front();
}

Ideal maximal(const RingPtr& R) {
  std::vector<Polynomial> v;
  for (int i = 0; i < R->nvars(); ++i) v.push_back(R->variable(i));
  return Ideal(R, std::move(v));
}

}  // namespace

TEST_CASE("corpus flags are consistent with computed structure") {
  auto corpus = builtin_corpus(32003);
  CHECK(corpus.size() == 7);
  for (const auto& e : corpus) {
    CmReport cm = is_cohen_macaulay(e.ring, 5);
    CHECK(cm.depth <= cm.dim);
    CHECK(cm.cohen_macaulay == e.flags.cm_expected);
  }
}

TEST_CASE("sign test on the two-planes ring") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  ExperimentReport rep = sign_test(entry(corpus, "two_planes"), cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["dim"] == 2);
  CHECK(rep.evidence["depth"] == 1);
  // every sampled parameter ideal of the two-planes ring has e_1 = -1
  for (const auto& v : rep.evidence["e1_per_trial"]) CHECK(v.get<long>() == -1);
}

TEST_CASE("sign test on Cohen-Macaulay entries includes the length law") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  for (const char* name : {"poly2", "curve345"}) {
    ExperimentReport rep = sign_test(entry(corpus, name), cfg);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.evidence["cm_length_law"] == true);
    for (const auto& v : rep.evidence["e1_per_trial"]) CHECK(v.get<long>() == 0);
  }
}

TEST_CASE("sign test separates hypothesis failure from refutation") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  ExperimentReport rep = sign_test(entry(corpus, "depth0_embedded"), cfg);
  CHECK(rep.verdict == Verdict::HypothesisUnverified);
}

TEST_CASE("instability surfaces as unstable, never fail") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  cfg.nmax = 5;  // enough to sample, too few values to certify a fit
  ExperimentReport rep = sign_test(entry(corpus, "two_planes"), cfg);
  CHECK(rep.verdict == Verdict::Unstable);
}

TEST_CASE("short exact sequence coefficient transfer") {
  LabConfig cfg = quick();
  RingPtr S3 = Ring::make(32003, {"x", "y", "z"});
  Ideal m = maximal(S3);
  ExperimentReport rep = ses_e1_check(S3, parse_ideal(S3, {"x^2", "x*y", "x*z"}), m, "t1", cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["lambda"] == 1);
  CHECK(rep.evidence["e_M"] == nlohmann::ordered_json::array({1, 0, 1}));
  CHECK(rep.evidence["e_N"] == nlohmann::ordered_json::array({1, 0, 0}));

  ExperimentReport rep2 = ses_e1_check(S3, parse_ideal(S3, {"x^3", "x*y", "x*z"}), m, "t2", cfg);
  CHECK(rep2.verdict == Verdict::Pass);
  CHECK(rep2.evidence["lambda"] == 2);

  // torsion-free input is rejected
  CHECK_THROWS_AS(ses_e1_check(S3, parse_ideal(S3, {"x"}), m, "t0", cfg), InputError);
}

TEST_CASE("northcott bound") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  const CorpusEntry& poly2 = entry(corpus, "poly2");
  ExperimentReport rep =
      northcott_check(poly2, parse_ideal(poly2.ring, {"x^2", "x*y", "y^2"}), "m^2", cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["e"] == nlohmann::ordered_json::array({4, 1, 0}));
  CHECK(rep.evidence["lambda"] == 3);
  CHECK(rep.evidence["slack"] == 0);  // 1 >= 4 - 3 with equality

  ExperimentReport rm = northcott_check(poly2, maximal(poly2.ring), "m", cfg);
  CHECK(rm.verdict == Verdict::Pass);
  CHECK(rm.evidence["slack"] == 0);  // 0 >= 1 - 1

  // non-CM input cannot assert the hypothesis
  const CorpusEntry& planes = entry(corpus, "two_planes");
  CHECK(northcott_check(planes, maximal(planes.ring), "m", cfg).verdict ==
        Verdict::HypothesisUnverified);
}

TEST_CASE("goto-nishida bound on the two-planes ring is tight") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  const CorpusEntry& planes = entry(corpus, "two_planes");
  ExperimentReport rep = goto_nishida_check(planes, maximal(planes.ring), "m", cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["e_I"] == nlohmann::ordered_json::array({2, 0, -1}));
  CHECK(rep.evidence["e_J"] == nlohmann::ordered_json::array({2, -1, 0}));
  CHECK(rep.evidence["slack"] == 0);  // (0 - (-1)) - (2 - 1) = 0
}

TEST_CASE("huckaba-marley bound") {
  auto corpus = builtin_corpus(32003);
  LabConfig cfg = quick();
  const CorpusEntry& poly2 = entry(corpus, "poly2");
  ExperimentReport rep = huckaba_marley_check(
      poly2, parse_ideal(poly2.ring, {"x^2", "x*y", "y^2"}),
      parse_ideal(poly2.ring, {"x^2", "y^2"}), "I = m^2, J = (x^2, y^2)", cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["s"] == 1);
  CHECK(rep.evidence["sum"] == 1);    // λ(m^2 / J) = 4 - 3 = 1
  CHECK(rep.evidence["slack"] == 0);  // e_1 = 1 <= 1

  const CorpusEntry& curve = entry(corpus, "curve345");
  ExperimentReport rc = huckaba_marley_check(curve, maximal(curve.ring),
                                             parse_ideal(curve.ring, {"x"}), "m/(x)", cfg);
  CHECK(rc.verdict == Verdict::Pass);

  // parameter ideal in a CM ring: empty sum, e_1 = 0
  ExperimentReport rp =
      huckaba_marley_check(poly2, maximal(poly2.ring), maximal(poly2.ring), "m/m", cfg);
  CHECK(rp.verdict == Verdict::Pass);
  CHECK(rp.evidence["sum"] == 0);
}

TEST_CASE("planes family identities") {
  LabConfig cfg = quick();
  RingPtr S4 = Ring::make(32003, {"x1", "x2", "x3", "x4"});
  Ideal P1 = parse_ideal(S4, {"x1", "x2"});
  Ideal P2 = parse_ideal(S4, {"x3", "x4"});

  ExperimentReport rep = planes_family_check({P1, P2}, "two", cfg);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.evidence["lambda"] == 1);
  CHECK(rep.evidence["e"] == nlohmann::ordered_json::array({2, -1, 0}));

  // degenerate member: a single plane is Cohen-Macaulay, λ = 0
  ExperimentReport single = planes_family_check({P1}, "one", cfg);
  CHECK(single.verdict == Verdict::Pass);
  CHECK(single.evidence["lambda"] == 0);
  CHECK(single.evidence["e"][1] == 0);

  // hypothesis guards
  Ideal bad = parse_ideal(S4, {"x1"});
  CHECK_THROWS_AS(planes_family_check({bad, P2}, "bad", cfg), InputError);
  CHECK_THROWS_AS(planes_family_check({P1, parse_ideal(S4, {"x1", "x2*x3"})}, "bad2", cfg),
                  InputError);
}

TEST_CASE("module grade law") {
  LabConfig cfg = quick();
  for (const ModuleEntry& me : builtin_modules(32003)) {
    ExperimentReport rep = module_check(me, cfg);
    CHECK(rep.verdict == Verdict::Pass);
    long e1 = rep.evidence["e_natural"][1].get<long>();
    long e0 = rep.evidence["e_natural"][0].get<long>();
    long a = rep.evidence["a"].get<long>();
    bool free = rep.evidence["probe_free_up_to_bound"].get<bool>();
    CHECK(e1 <= a * e0);
    CHECK((e1 == a * e0) == free);
  }
}

TEST_CASE("mixed-degree modules are out of hypothesis") {
  LabConfig cfg = quick();
  RingPtr S = Ring::make(32003, {"x", "y"});
  GradedSubmodule mixed(S, 1, {{parse_poly(S, "x")}, {parse_poly(S, "y^2")}});
  ModuleEntry me{"mixed", mixed, std::nullopt};
  CHECK_THROWS_AS(module_check(me, cfg), InputError);
}

TEST_CASE("corpus run is deterministic and the negative control flips one verdict") {
  LabConfig cfg = quick();
  auto a = run_corpus("noncm", cfg);
  auto b = run_corpus("noncm", cfg);
  CHECK(report_json(a, cfg) == report_json(b, cfg));

  auto flipped = run_corpus("noncm", cfg, "two_planes");
  REQUIRE(flipped.size() == a.size());
  int differing = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].verdict != flipped[i].verdict) {
      ++differing;
      CHECK(flipped[i].verdict == Verdict::Fail);
      CHECK(flipped[i].claim == "sign_dichotomy");
      CHECK(flipped[i].entry == "two_planes");
    }
  }
  CHECK(differing == 1);
  CHECK(exit_code_for(a) == 0);
  CHECK(exit_code_for(flipped) == 1);

  CHECK_THROWS_AS(run_corpus("nope", cfg), InputError);
  CHECK_THROWS_AS(run_corpus("paper", cfg, "no_such_entry"), InputError);
}

TEST_CASE("report serialization shapes") {
  LabConfig cfg = quick();
  auto reports = run_corpus("modules", cfg);
  std::string json = report_json(reports, cfg);
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["schema_version"] == "1");
  CHECK(parsed["runs"].size() == reports.size());
  for (const auto& run : parsed["runs"]) {
    CHECK(run.contains("claim"));
    CHECK(run.contains("verdict"));
  }
  // one header plus one line per run
  std::string csv = report_csv(reports);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(reports.size()) + 1);
  CHECK(csv.rfind("entry,claim,e0,e1,e2,lambda,verdict,seed\n", 0) == 0);

  std::string empty = report_json({}, cfg);
  auto eparsed = nlohmann::json::parse(empty);
  CHECK(eparsed["runs"].empty());
}

TEST_CASE("annihilator reflexivity experiment") {
  LabConfig cfg = quick();
  ExperimentReport rep = annihilator_reflexivity_experiment(cfg);
  CHECK(rep.verdict == Verdict::Pass);
}
