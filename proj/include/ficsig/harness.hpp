#ifndef FICSIG_HARNESS_HPP
#define FICSIG_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ficsig/syntax.hpp"

namespace ficsig {

// Generation is a pure function of these parameters.
struct GenParams {
  std::uint64_t seed = 0;
  int max_sorts = 5;
  int max_ctx_len = 5;
  int max_attempts = 8;
};

// Derives a well-formed signature: every output passes check_signature.
// Each declaration picks an already-bound sort and synthesizes a
// substitution entry by entry, searching the context built so far for a
// variable of exactly the required (instantiated) sort; after max_attempts
// failed picks it falls back to a sort with an empty context.
Signature gen_signature(const GenParams& p);

struct SuiteFailure {
  int case_index;
  std::uint64_t seed;
  std::string property;
  std::string shrunk;  // one-line rendering of the shrunk counterexample
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  std::map<std::string, long long> stats;

  bool ok() const { return failures.empty(); }

  // One "FAIL case=<i> seed=<s> prop=<name> ..." line per failure, then
  // "OK <n> cases" or "FAILED <k>/<n>" (k = failing cases).
  std::string to_string() const;
};

// Suites: "lemmas", "roundtrip", "congruence", "fic-axioms", "parser".
// Cases are independent (per-case derived seeds) and may run concurrently;
// the report is assembled in case order and is deterministic for a given
// (name, p, cases). Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, const GenParams& p, int cases);

}  // namespace ficsig

#endif  // FICSIG_HARNESS_HPP
