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
// Relations R·S = R'·S' between rows and the overlap check on triples.
//
// A triple R·S·T is reduced in two orders; every arrow is a row product:
//
//   right first:  S·T = A·B,   R·A = C·D,   D·B = E·F    ->  C·E·F
//   left first:   R·S = G·H,   H·T = I·J,   G·I = K·L    ->  K·L·J
//
// The overlap of the leading words RS and ST is resolved iff both sides
// give the same word. A trace records all twelve intermediate vectors; a
// product that bumps nothing stores an explicit all-zero vector, so the
// partial-sum identities below can be evaluated on every trace. Zero rows
// are dropped only when the final words are compared.

#ifndef PLACTIC_GS_VERIFY_HPP
#define PLACTIC_GS_VERIFY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "plactic/row.hpp"
#include "plactic/schensted.hpp"

namespace plactic {

using CountVector = std::vector<Count>;

struct Relation {
  Row        lhs_left;
  Row        lhs_right;
  RowProduct rhs;

  /// True iff lhs_left dominates lhs_right, so rhs == lhs.
  bool trivial() const;
  RowWord lhs() const;
};

Relation build_relation(Row const& r, Row const& s);

/// rhs < lhs under rowword_compare. Throws std::invalid_argument for a
/// trivial relation.
bool relation_respects_ordering(Relation const& relation);

struct ReductionTrace {
  Row r, s, t;
  // right-first path
  CountVector A, B, C, D, E, F;
  // left-first path
  CountVector G, H, I, J, K, L;

  std::size_t n() const noexcept { return r.n(); }

  /// C·E·F and K·L·J with all-zero rows dropped.
  RowWord right_result() const;
  RowWord left_result() const;
};

ReductionTrace reduce_triple(Row const& r, Row const& s, Row const& t);

bool composition_trivial(ReductionTrace const& trace);

/// a_1 = c_1 = c_2 = e_1 = g_1 = i_1 = k_1 = k_2 = l_1 = 0 (indices beyond
/// n are skipped).
bool zero_pattern_holds(ReductionTrace const& trace);

/// C+E+F, K+L+J and R+S+T have the same letter multiset.
bool letters_conserved(ReductionTrace const& trace);

/// C_3 = K_3 = min(t_1, s_2, r_3). Requires n >= 3.
bool check_c3k3_closed_form(ReductionTrace const& trace);

/// e_2 = l_2 = min(s_1 + t_1, t_1 + r_2, r_2 + s_2). Requires n >= 2.
bool check_e2l2_closed_form(ReductionTrace const& trace);

enum class Outcome { pass, not_applicable, fail };

std::string_view to_string(Outcome outcome);

struct LemmaResult {
  Outcome                    outcome = Outcome::not_applicable;
  /// First index p (1-based) at which the check failed.
  std::optional<std::size_t> witness;
};

/// The five partial-sum inequalities, uppercase = partial sums:
///
///   [0] A_p <= I_p                                          all p
///   [1] S_p + C_p - G_p - A_p >= 0                          all p
///   [2] S_p + C_p - G_p - A_p > 0  =>  A_p = I_p
///   [3] K_p = C_p, K_{p+1} = C_{p+1}, C_{p+1} = C_p + r_{p+1}
///         =>  S_p - G_p >= r_{p+1}                          2 <= p < n
///   [4] K_{p-1} = C_{p-1}, K_p = C_p = A_{p-1} < C_{p-1} + r_p,
///       S_{p-1} - G_{p-1} >= r_p  =>  K_p = I_{p-1}         3 <= p <= n
///
/// The implications report not_applicable when no index satisfies the
/// hypothesis.
struct LemmaReport {
  static constexpr std::size_t kCount = 5;
  static constexpr std::array<std::string_view, kCount> kNames{
      "lemma_a_le_i",
      "lemma_scga_nonnegative",
      "lemma_scga_positive_a_eq_i",
      "lemma_s_minus_g_bound",
      "lemma_k_eq_i"};

  std::array<LemmaResult, kCount> results;

  bool all_passed() const;
};

LemmaReport check_lemma_invariants(ReductionTrace const& trace);

}  // namespace plactic

#endif  // PLACTIC_GS_VERIFY_HPP
