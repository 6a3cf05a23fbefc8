/* Copyright 2026 The plactic Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exhaustive and sampled sweeps over rows, pairs and triples.
//
// Every sweep has a serial reference loop and an OpenMP loop that evaluate
// the same per-item kernel. Results are merged with commutative reductions
// (sums, and "keep the k least failures"), so a report does not depend on
// the number of threads or on scheduling.

#ifndef PLACTIC_SWEEP_HPP
#define PLACTIC_SWEEP_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plactic/gs_verify.hpp"
#include "plactic/row.hpp"

namespace plactic {

struct Execution {
  bool parallel = true;
  /// 0: PLACTIC_THREADS if set, otherwise the OpenMP default.
  int threads = 0;

  static Execution serial() { return {false, 1}; }
  static Execution with_threads(int t) { return {true, t}; }
};

/// Thread count a parallel sweep would use.
int resolved_threads(Execution const& exec);

struct CheckCounts {
  std::uint64_t pass           = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t fail           = 0;

  std::uint64_t total() const noexcept {
    return pass + not_applicable + fail;
  }
  void add(Outcome outcome) noexcept;
  CheckCounts& operator+=(CheckCounts const& other) noexcept;
  bool operator==(CheckCounts const&) const = default;
};

struct SweepConfig {
  std::size_t   n              = 3;
  std::size_t   max_len        = 3;
  std::uint64_t samples        = 0;
  std::uint64_t seed           = 1;
  std::size_t   sample_max_len = 30;
  std::uint64_t budget         = 10'000'000;

  bool operator==(SweepConfig const&) const = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("sweep needs " + std::to_string(needed)
                           + " triples, budget is " + std::to_string(budget)) {}
};

/// A failed check on a pair (ordering) or triple of rows.
struct Failure {
  std::string              check;
  std::vector<CountVector> rows;
  bool                     sampled = false;
  std::optional<std::size_t> witness;

  bool operator==(Failure const&) const = default;
};

/// Failures sort by their rows (lexicographically under row_compare), then
/// by check name.
bool failure_less(Failure const& a, Failure const& b);

inline constexpr std::size_t kMaxReportedFailures = 64;

/// Names of the per-triple checks, in report order.
inline constexpr std::array<std::string_view, 10> kTripleChecks{
    "composition",
    "zero_pattern",
    "letter_conservation",
    "c3k3_closed_form",
    "e2l2_closed_form",
    "lemma_a_le_i",
    "lemma_scga_nonnegative",
    "lemma_scga_positive_a_eq_i",
    "lemma_s_minus_g_bound",
    "lemma_k_eq_i"};

struct VerificationReport {
  std::string   tool    = "plactic";
  std::string   version;
  SweepConfig   config;
  std::uint64_t rows               = 0;
  std::uint64_t triples_exhaustive = 0;
  std::uint64_t triples_sampled    = 0;
  std::uint64_t pairs              = 0;
  /// Indexed like kTripleChecks.
  std::array<CheckCounts, kTripleChecks.size()> checks{};
  /// relation_respects_ordering over all exhaustive pairs; trivial
  /// relations count as not applicable.
  CheckCounts                ordering;
  std::uint64_t              failure_count = 0;
  std::vector<Failure>       failures;  // least first, capped
  std::optional<Failure>     counterexample;  // least failing triple
  double                     wall_seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }

  /// Equality ignoring wall_seconds.
  bool same_results(VerificationReport const& other) const;
  bool operator==(VerificationReport const&) const = default;
};

std::string_view library_version();

/// Runs every per-triple check on all triples of rows with 1..max_len
/// letters over n letters, plus `samples` random triples with rows of up to
/// sample_max_len letters. Throws BudgetExceeded before doing any work if
/// the triple count is over budget.
VerificationReport verify_gs_basis(SweepConfig const& config,
                                   Execution const&   exec = {});

inline VerificationReport verify_gs_basis_serial(SweepConfig const& config) {
  return verify_gs_basis(config, Execution::serial());
}

/// Outcomes of every per-triple check on one triple, indexed like
/// kTripleChecks.
std::array<Outcome, kTripleChecks.size()> evaluate_triple(Row const& r,
                                                          Row const& s,
                                                          Row const& t);

/// Letter insertion vs closed form on all pairs of rows with 1..max_len
/// letters.
CheckCounts sweep_equivalence(Alphabet         alphabet,
                              std::size_t      max_len,
                              Execution const& exec = {});

/// Same on random pairs: n uniform in [1, max_n], row lengths uniform in
/// [1, max_len].
CheckCounts sample_equivalence(std::size_t      max_n,
                               std::size_t      max_len,
                               std::uint64_t    samples,
                               std::uint64_t    seed,
                               Execution const& exec = {});

/// relation_respects_ordering on all pairs of rows with 1..max_len letters.
CheckCounts sweep_ordering(Alphabet         alphabet,
                           std::size_t      max_len,
                           Execution const& exec = {});

/// Samples (u, v, a, b) and checks that comparing a·u·b with a·v·b gives
/// the same answer as comparing u with v.
CheckCounts sample_monomial(Alphabet         alphabet,
                            std::uint64_t    samples,
                            std::uint64_t    seed,
                            Execution const& exec = {});

/// Deterministic per-index generator for sampled sweeps.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform length in [1, max_len], then each letter uniform in [1, n].
Row random_row(Alphabet alphabet, std::size_t max_len, std::mt19937_64& rng);

}  // namespace plactic

#endif  // PLACTIC_SWEEP_HPP
