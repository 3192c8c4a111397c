#ifndef CHERN_LAB_HPP
#define CHERN_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chern/graded.hpp"
#include "chern/structure.hpp"

namespace chern {

struct CorpusFlags {
  bool cm_expected = false;
  bool constructed_unmixed = false;
  bool domain = false;
};

struct CorpusEntry {
  std::string name;
  RingPtr ring;
  CorpusFlags flags;
  std::string note;
};

struct ModuleEntry {
  std::string name;
  GradedSubmodule module;
  std::optional<bool> expect_free;  // checked against the probe when present
};

enum class Verdict { Pass, Fail, HypothesisUnverified, Unstable };

std::string to_string(Verdict v);

struct ExperimentReport {
  std::string claim;
  std::string entry;
  std::string inputs;
  Verdict verdict = Verdict::Pass;
  uint64_t seed = 0;
  nlohmann::ordered_json evidence;  // exact integers only
  double ms = 0.0;                  // wall time; never serialized
};

struct LabConfig {
  int64_t characteristic = 32003;
  int nmax = 12;
  int trials = 20;       // random parameter ideals per sign test
  int sop_trials = 8;    // genericity retries
  int c_max = 5;
  int s_max = 10;
  uint64_t seed = 0;
  // precedence: explicit CLI flags beat script directives beat defaults
  bool lock_nmax = false;
  bool lock_trials = false;
  bool lock_seed = false;

  StructureConfig structure() const {
    return StructureConfig{sop_trials, c_max, s_max, nmax};
  }
};

// Built-in example rings; flags are set by construction (the non-CM rings
// are intersections of equidimensional primes, hence unmixed by design).
std::vector<CorpusEntry> builtin_corpus(int64_t characteristic);
std::vector<ModuleEntry> builtin_modules(int64_t characteristic);

// ----- individual experiments -----

// Sign dichotomy for parameter ideals: Cohen-Macaulay rings give e_1(J) = 0
// together with λ(R/J^{n+1}) = λ(R/J) binom(n+d, d); non-CM unmixed rings
// give e_1(J) < 0 on every sampled J. Also cross-checks the computed CM
// status against the entry's flag.
ExperimentReport sign_test(const CorpusEntry& entry, const LabConfig& cfg);

// Finite-length torsion drops out of e_0..e_{d-1} and shifts e_d by
// (-1)^{d+1} λ(T), for M = S/L0, T = (L0 : m^∞)/L0, N = M/T.
ExperimentReport ses_e1_check(const RingPtr& S, const Ideal& L0, const Ideal& I,
                              const std::string& entry, const LabConfig& cfg);

ExperimentReport northcott_check(const CorpusEntry& entry, const Ideal& I,
                                 const std::string& ideal_label, const LabConfig& cfg);

ExperimentReport goto_nishida_check(const CorpusEntry& entry, const Ideal& I,
                                    const std::string& ideal_label, const LabConfig& cfg);

ExperimentReport huckaba_marley_check(const CorpusEntry& entry, const Ideal& I,
                                      const Ideal& J, const std::string& ideal_label,
                                      const LabConfig& cfg);

// Family of rings S/∩P_i (codim-2 planes in 4 variables, pairwise sums
// m-primary): e_0 adds up over the planes, e_1 = -λ(coker), e_2 = 0, with
// λ(coker) measured independently by graded Hilbert functions.
ExperimentReport planes_family_check(const std::vector<Ideal>& primes, const std::string& entry,
                                     const LabConfig& cfg);

// Shift law, the bound e_1(M) <= a e_0(M), and the equality/freeness match.
ExperimentReport module_check(const ModuleEntry& entry, const LabConfig& cfg);

ExperimentReport superficial_descent_experiment(const CorpusEntry& entry, const Ideal& I,
                                                const std::string& ideal_label,
                                                const LabConfig& cfg);

ExperimentReport parameter_lifting_experiment(const LabConfig& cfg);

ExperimentReport annihilator_reflexivity_experiment(const LabConfig& cfg);

// Deterministic roster over the corpus. Suites: paper (everything), cm,
// noncm, modules, all (= paper). flip_entry inverts one cm_expected flag
// (negative control).
std::vector<ExperimentReport> run_corpus(const std::string& suite, const LabConfig& cfg,
                                         const std::string& flip_entry = "");

int exit_code_for(const std::vector<ExperimentReport>& reports);

}  // namespace chern

#endif
