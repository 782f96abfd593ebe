// Named verification checks over all modules, with structured pass/fail
// results and counterexample payloads, plus the reusable building blocks the
// acceptance runner shares with the suite.
#pragma once

#include "ntlc/enumerate.hpp"
#include "ntlc/modules.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ntlc {

enum class VerifyLevel { quick, standard, full };
VerifyLevel level_from_string(const std::string& s);
std::string level_to_string(VerifyLevel level);

enum class Fault { none, arrow_flip };

struct CheckResult {
  std::string name;
  std::string ref; // the mathematical statement being verified, in brief
  bool pass = false;
  nlohmann::json witness; // counterexample payload; null when passing
  double seconds = 0.0;
};

struct VerifyReport {
  int n = 0;
  VerifyLevel level = VerifyLevel::standard;
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

VerifyReport verify_suite(int n, VerifyLevel level,
                          std::uint64_t seed = 20250823,
                          Fault fault = Fault::none);

// Building blocks shared with the acceptance runner.

// Scans every word of length <= max_len; the minuscule test must equal the
// negated commutation-orbit search (run against oracle_d, which may carry
// injected faults).  Returns a disagreeing word if any.
std::optional<Word> find_oracle_disagreement(const CoxeterData& d, int max_len,
                                             const CoxeterData& oracle_d);

struct FaithfulnessOutcome {
  std::size_t word_count = 0;
  bool witnesses_unique = false;    // each witness triple hit by its own word only
  bool evaluation_rank_full = false; // modular rank of evaluated matrices
};

// Witness-based and evaluation-based independence certificates for the
// matrices of all minuscule words of length <= max_len.
FaithfulnessOutcome check_faithfulness(const CoxeterData& d, int max_len);

// True iff the window sums counts[d] + counts[d+1] + ... + counts[d+n] equal
// 2^{2n} for every d from some start <= max_start up to max_len - n.
bool check_window_rank(const CoxeterData& d, int max_len, int max_start,
                       std::vector<long long>* counts_out = nullptr);

// Exact solve at n = 2: elements spanned by basis words of length <= n that
// commute with every generator are exactly the multiples of the identity.
bool check_centre_degree_bound(const CoxeterData& d);

} // namespace ntlc
