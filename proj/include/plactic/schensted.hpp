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
// Products of two rows. W·Z = X·Y where X·Y is a tableau (X possibly
// empty). Two independent algorithms are provided:
//
//  * letter insertion: insert the letters of Z one at a time into W, each
//    either appending or bumping the leftmost strictly larger letter;
//  * the closed form on count vectors, with uppercase = partial sums:
//
//        x_1 = 0
//        x_p = min(Z_{p-1} - X_{p-1}, w_p)        2 <= p <= n
//        y_q = w_q + z_q - x_q                    1 <= q <= n
//
// multiply_rows() uses the closed form; it costs O(n) regardless of the row
// lengths.

#ifndef PLACTIC_SCHENSTED_HPP
#define PLACTIC_SCHENSTED_HPP

#include <optional>
#include <span>
#include <vector>

#include "plactic/row.hpp"

namespace plactic {

struct InsertionResult {
  std::optional<Letter> bumped;
  Row                   row;

  bool operator==(InsertionResult const&) const = default;
};

/// X is absent when nothing was bumped.
struct RowProduct {
  std::optional<Row> x;
  Row                y;

  bool operator==(RowProduct const&) const = default;

  /// [X, Y] or [Y].
  RowWord as_rowword() const;
};

InsertionResult insert_letter(Row const& row, Letter x);
/// Insertion into the empty row: never bumps.
InsertionResult insert_letter(std::nullopt_t, Alphabet alphabet, Letter x);

RowProduct multiply_rows_schensted(Row const& w, Row const& z);
RowProduct multiply_rows_closed_form(Row const& w, Row const& z);

inline RowProduct multiply_rows(Row const& w, Row const& z) {
  return multiply_rows_closed_form(w, z);
}

/// Both algorithms agree on (w, z).
bool check_equivalence(Row const& w, Row const& z);

namespace kernel {

  /// Closed form on raw count vectors; any of the inputs may be all-zero.
  /// All four spans have the same length n >= 1.
  void multiply_counts(std::span<Count const> w,
                       std::span<Count const> z,
                       std::span<Count>       x,
                       std::span<Count>       y);

}  // namespace kernel

}  // namespace plactic

#endif  // PLACTIC_SCHENSTED_HPP
