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

#include "plactic/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>

#include <omp.h>

#include "plactic/schensted.hpp"

#ifndef PLACTIC_VERSION
#define PLACTIC_VERSION "0.0.0"
#endif

namespace plactic {

std::string_view library_version() {
  return PLACTIC_VERSION;
}

int resolved_threads(Execution const& exec) {
  if (!exec.parallel) {
    return 1;
  }
  if (exec.threads > 0) {
    return exec.threads;
  }
  if (char const* env = std::getenv("PLACTIC_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) {
      return t;
    }
  }
  return std::max(1, omp_get_max_threads());
}

void CheckCounts::add(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::pass:
      ++pass;
      break;
    case Outcome::not_applicable:
      ++not_applicable;
      break;
    case Outcome::fail:
      ++fail;
      break;
  }
}

CheckCounts& CheckCounts::operator+=(CheckCounts const& other) noexcept {
  pass += other.pass;
  not_applicable += other.not_applicable;
  fail += other.fail;
  return *this;
}

bool failure_less(Failure const& a, Failure const& b) {
  auto const rows_less
      = std::lexicographical_compare(a.rows.begin(), a.rows.end(),
                                     b.rows.begin(), b.rows.end(),
                                     [](CountVector const& x,
                                        CountVector const& y) {
                                       return row_compare(Row(x), Row(y)) < 0;
                                     });
  if (rows_less) {
    return true;
  }
  if (a.rows != b.rows) {
    return false;
  }
  if (a.check != b.check) {
    return a.check < b.check;
  }
  return a.sampled < b.sampled;
}

bool VerificationReport::same_results(VerificationReport const& other) const {
  auto lhs         = *this;
  auto rhs         = other;
  lhs.wall_seconds = rhs.wall_seconds = 0.0;
  return lhs == rhs;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser decorrelates neighbouring indices
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return std::mt19937_64(z ^ (z >> 31));
}

Row random_row(Alphabet alphabet, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_len));
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::vector<Count> counts(alphabet.size(), 0);
  for (std::size_t k = length(rng); k > 0; --k) {
    ++counts[letter(rng)];
  }
  return Row(std::move(counts));
}

namespace {

  CountVector to_vector(Row const& row) {
    return CountVector(row.counts().begin(), row.counts().end());
  }

  struct CountsAcc {
    CheckCounts counts;
    void        merge(CountsAcc const& other) { counts += other.counts; }
  };

  // Runs work(index, accumulator) for every index in [0, total), either in
  // a plain loop or in an OpenMP loop with one accumulator per thread.
  template <typename Acc, typename Work>
  Acc run_indexed(std::uint64_t total, Execution const& exec, Work&& work) {
    if (!exec.parallel) {
      Acc acc;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        work(idx, acc);
      }
      return acc;
    }
    int const          threads = resolved_threads(exec);
    std::vector<Acc>   parts(static_cast<std::size_t>(threads));
    std::exception_ptr error;
    auto const         count = static_cast<std::int64_t>(total);
#pragma omp parallel num_threads(threads)
    {
      Acc& acc = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t idx = 0; idx < count; ++idx) {
        try {
          work(static_cast<std::uint64_t>(idx), acc);
        } catch (...) {
#pragma omp critical(plactic_sweep_error)
          {
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
    Acc out;
    for (auto& part : parts) {
      out.merge(std::move(part));
    }
    return out;
  }

  struct TripleAcc {
    std::array<CheckCounts, kTripleChecks.size()> checks{};
    CheckCounts                                    ordering;
    std::uint64_t                                  failure_count = 0;
    std::vector<Failure>                           failures;
    std::optional<Failure>                         least_triple;

    void trim() {
      std::sort(failures.begin(), failures.end(), failure_less);
      if (failures.size() > kMaxReportedFailures) {
        failures.resize(kMaxReportedFailures);
      }
    }

    void note(Failure failure) {
      ++failure_count;
      if (failure.rows.size() == 3
          && (!least_triple || failure_less(failure, *least_triple))) {
        least_triple = failure;
      }
      failures.push_back(std::move(failure));
      if (failures.size() > 4 * kMaxReportedFailures) {
        trim();
      }
    }

    void merge(TripleAcc&& other) {
      for (std::size_t c = 0; c < checks.size(); ++c) {
        checks[c] += other.checks[c];
      }
      ordering += other.ordering;
      failure_count += other.failure_count;
      if (other.least_triple
          && (!least_triple || failure_less(*other.least_triple, *least_triple))) {
        least_triple = std::move(other.least_triple);
      }
      failures.insert(failures.end(),
                      std::make_move_iterator(other.failures.begin()),
                      std::make_move_iterator(other.failures.end()));
      trim();
    }
  };

  Outcome as_outcome(bool ok) {
    return ok ? Outcome::pass : Outcome::fail;
  }

  std::array<Outcome, kTripleChecks.size()>
  evaluate_trace(ReductionTrace const& trace, LemmaReport& lemmas) {
    auto const n = trace.n();
    std::array<Outcome, kTripleChecks.size()> out{};
    out[0] = as_outcome(composition_trivial(trace));
    out[1] = as_outcome(zero_pattern_holds(trace));
    out[2] = as_outcome(letters_conserved(trace));
    out[3] = n >= 3 ? as_outcome(check_c3k3_closed_form(trace))
                    : Outcome::not_applicable;
    out[4] = n >= 2 ? as_outcome(check_e2l2_closed_form(trace))
                    : Outcome::not_applicable;
    lemmas = check_lemma_invariants(trace);
    for (std::size_t i = 0; i < LemmaReport::kCount; ++i) {
      out[5 + i] = lemmas.results[i].outcome;
    }
    return out;
  }

  void record_triple(Row const& r,
                     Row const& s,
                     Row const& t,
                     bool       sampled,
                     TripleAcc& acc) {
    LemmaReport lemmas;
    auto const  outcomes = evaluate_trace(reduce_triple(r, s, t), lemmas);
    for (std::size_t c = 0; c < outcomes.size(); ++c) {
      acc.checks[c].add(outcomes[c]);
      if (outcomes[c] == Outcome::fail) {
        Failure f{std::string(kTripleChecks[c]),
                  {to_vector(r), to_vector(s), to_vector(t)},
                  sampled,
                  std::nullopt};
        if (c >= 5) {
          f.witness = lemmas.results[c - 5].witness;
        }
        acc.note(std::move(f));
      }
    }
  }

  Outcome ordering_outcome(Row const& r, Row const& s) {
    auto const rel = build_relation(r, s);
    if (rel.trivial()) {
      return Outcome::not_applicable;
    }
    return relation_respects_ordering(rel) ? Outcome::pass : Outcome::fail;
  }

}  // namespace

std::array<Outcome, kTripleChecks.size()> evaluate_triple(Row const& r,
                                                          Row const& s,
                                                          Row const& t) {
  LemmaReport lemmas;
  return evaluate_trace(reduce_triple(r, s, t), lemmas);
}

VerificationReport verify_gs_basis(SweepConfig const& config,
                                   Execution const&   exec) {
  auto const start    = std::chrono::steady_clock::now();
  Alphabet const alphabet(config.n);
  if (config.max_len == 0) {
    throw std::invalid_argument("max_len must be at least 1");
  }
  if (config.budget == 0) {
    throw std::invalid_argument("budget must be positive");
  }
  auto const m      = static_cast<std::uint64_t>(count_rows(alphabet, config.max_len));
  auto const needed = m * m * m + config.samples;
  if (needed > config.budget) {
    throw BudgetExceeded(needed, config.budget);
  }
  auto const rows = all_rows(alphabet, config.max_len);

  auto triples = run_indexed<TripleAcc>(
      m * m * m + config.samples, exec, [&](std::uint64_t idx, TripleAcc& acc) {
        if (idx < m * m * m) {
          record_triple(rows[idx / (m * m)], rows[(idx / m) % m], rows[idx % m],
                        false, acc);
        } else {
          auto       rng = sample_rng(config.seed, idx - m * m * m);
          auto const r   = random_row(alphabet, config.sample_max_len, rng);
          auto const s   = random_row(alphabet, config.sample_max_len, rng);
          auto const t   = random_row(alphabet, config.sample_max_len, rng);
          record_triple(r, s, t, true, acc);
        }
      });

  auto pairs = run_indexed<TripleAcc>(
      m * m, exec, [&](std::uint64_t idx, TripleAcc& acc) {
        auto const& r = rows[idx / m];
        auto const& s = rows[idx % m];
        auto const  o = ordering_outcome(r, s);
        acc.ordering.add(o);
        if (o == Outcome::fail) {
          acc.note(Failure{"ordering", {to_vector(r), to_vector(s)}, false, {}});
        }
      });
  triples.merge(std::move(pairs));

  VerificationReport report;
  report.version            = std::string(library_version());
  report.config             = config;
  report.rows               = m;
  report.triples_exhaustive = m * m * m;
  report.triples_sampled    = config.samples;
  report.pairs              = m * m;
  report.checks             = triples.checks;
  report.ordering           = triples.ordering;
  report.failure_count      = triples.failure_count;
  report.failures           = std::move(triples.failures);
  report.counterexample     = std::move(triples.least_triple);
  report.wall_seconds       = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

CheckCounts sweep_equivalence(Alphabet         alphabet,
                              std::size_t      max_len,
                              Execution const& exec) {
  auto const rows = all_rows(alphabet, max_len);
  auto const m    = static_cast<std::uint64_t>(rows.size());
  return run_indexed<CountsAcc>(m * m, exec,
                                [&](std::uint64_t idx, CountsAcc& acc) {
                                  acc.counts.add(as_outcome(check_equivalence(
                                      rows[idx / m], rows[idx % m])));
                                })
      .counts;
}

CheckCounts sample_equivalence(std::size_t      max_n,
                               std::size_t      max_len,
                               std::uint64_t    samples,
                               std::uint64_t    seed,
                               Execution const& exec) {
  if (max_n == 0) {
    throw std::invalid_argument("max_n must be at least 1");
  }
  return run_indexed<CountsAcc>(
             samples, exec,
             [&](std::uint64_t idx, CountsAcc& acc) {
               auto rng = sample_rng(seed, idx);
               std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
               Alphabet const alphabet(pick_n(rng));
               auto const     w = random_row(alphabet, max_len, rng);
               auto const     z = random_row(alphabet, max_len, rng);
               acc.counts.add(as_outcome(check_equivalence(w, z)));
             })
      .counts;
}

CheckCounts sweep_ordering(Alphabet         alphabet,
                           std::size_t      max_len,
                           Execution const& exec) {
  auto const rows = all_rows(alphabet, max_len);
  auto const m    = static_cast<std::uint64_t>(rows.size());
  return run_indexed<CountsAcc>(m * m, exec,
                                [&](std::uint64_t idx, CountsAcc& acc) {
                                  acc.counts.add(ordering_outcome(
                                      rows[idx / m], rows[idx % m]));
                                })
      .counts;
}

namespace {

  RowWord random_rowword(Alphabet         alphabet,
                         std::size_t      degree,
                         std::mt19937_64& rng) {
    RowWord out(alphabet);
    for (std::size_t i = 0; i < degree; ++i) {
      out.push_back(random_row(alphabet, 3, rng));
    }
    return out;
  }

}  // namespace

CheckCounts sample_monomial(Alphabet         alphabet,
                            std::uint64_t    samples,
                            std::uint64_t    seed,
                            Execution const& exec) {
  return run_indexed<CountsAcc>(
             samples, exec,
             [&](std::uint64_t idx, CountsAcc& acc) {
               auto rng = sample_rng(seed, idx);
               std::uniform_int_distribution<std::size_t> degree(0, 3);
               std::uniform_int_distribution<std::size_t> context(0, 2);
               auto const du = degree(rng);
               // half of the samples compare words of equal degree
               auto const dv = (rng() & 1U) != 0U ? du : degree(rng);
               auto const u  = random_rowword(alphabet, du, rng);
               auto const v  = random_rowword(alphabet, dv, rng);
               auto const a  = random_rowword(alphabet, context(rng), rng);
               auto const b  = random_rowword(alphabet, context(rng), rng);
               auto const base = rowword_compare(u, v);
               if (base == 0) {
                 acc.counts.add(Outcome::not_applicable);
                 return;
               }
               auto const wrapped = rowword_compare(a * u * b, a * v * b);
               acc.counts.add(as_outcome(wrapped == base));
             })
      .counts;
}

}  // namespace plactic
