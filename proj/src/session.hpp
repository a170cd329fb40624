#pragma once

#include <memory>
#include <string>

#include "dsl.hpp"
#include "invariants.hpp"

#include "json.hpp"

namespace gradecheck {

// Everything a single CLI/API interaction needs: the parsed ring, the seed,
// and the option set. Every emitted report embeds seed and options, and any
// two runs with identical (input, seed, options) produce byte-identical
// output.
class Session {
 public:
  struct Options {
    uint64_t seed = 2024;
    bool audit = false;
    long long budget = 100000;
    int samples = 5;
    int retries = 8;
    int audit_samples = 20;
    int degree_bound = 3;
    int t_power = 2;
    int m_power = 2;
    int family_degree = -1;  // -1: choose the smallest degree that works
  };

  void set_seed(uint64_t seed) { opt_.seed = seed; }
  // Known keys: audit, budget, samples, retries, audit_samples,
  // degree_bound, t, m, family_degree. Throws PreconditionError otherwise.
  void set_option(const std::string& key, long long value);

  // Parses the ring description; must run before any check. The current
  // budget applies to the parsed ring.
  void parse(const std::string& text);
  bool parsed() const { return input_.ring != nullptr; }
  const ParsedInput& input() const;

  std::string warnings_text() const;

  // Full report. status: 0 computed, 2 precondition failure (e.g. the
  // Cohen-Macaulay certificate failed).
  std::string run_report(bool as_json, int* status);

  // Focused subcommands: hilbert, hvector, stretched, ss, ss-sop, reduction,
  // identities, family. Throws PreconditionError / ParseError for exit
  // code 2 situations; anything else is an internal error.
  std::string run_check(const std::string& command, const std::string& argument,
                        bool as_json);

 private:
  CheckOptions check_options() const;
  std::unique_ptr<GradedRing> make_ring() const;
  std::string run_identities(const std::string& which, nlohmann::json& j);
  std::string run_family(const std::string& kind, nlohmann::json& j);

  Options opt_;
  ParsedInput input_;
};

}  // namespace gradecheck
