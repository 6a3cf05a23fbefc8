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

#include "plactic/schensted.hpp"

#include <algorithm>
#include <stdexcept>

namespace plactic {

RowWord RowProduct::as_rowword() const {
  RowWord out(y.alphabet());
  if (x) {
    out.push_back(*x);
  }
  out.push_back(y);
  return out;
}

namespace {

  // Insert x into a count vector in place; returns the bumped letter or 0.
  Letter insert_into_counts(std::vector<Count>& counts, Letter x) {
    auto const n = counts.size();
    for (std::size_t p = x; p < n; ++p) {  // letters x+1..n
      if (counts[p] != 0) {
        --counts[p];
        counts[x - 1] = detail::checked_add(counts[x - 1], 1);
        return static_cast<Letter>(p + 1);
      }
    }
    counts[x - 1] = detail::checked_add(counts[x - 1], 1);
    return 0;
  }

}  // namespace

InsertionResult insert_letter(Row const& row, Letter x) {
  row.alphabet().check(x);
  std::vector<Count> counts(row.counts().begin(), row.counts().end());
  Letter             bumped = insert_into_counts(counts, x);
  InsertionResult    out{std::nullopt, Row(std::move(counts))};
  if (bumped != 0) {
    out.bumped = bumped;
  }
  return out;
}

InsertionResult insert_letter(std::nullopt_t, Alphabet alphabet, Letter x) {
  return {std::nullopt, Row::letter(alphabet, x)};
}

RowProduct multiply_rows_schensted(Row const& w, Row const& z) {
  w.alphabet().require_same(z.alphabet());
  auto const         n = w.n();
  std::vector<Count> current(w.counts().begin(), w.counts().end());
  std::vector<Count> bumped(n, 0);
  Letter             last_bumped = 0;
  for (std::size_t p = 0; p < n; ++p) {
    auto const x = static_cast<Letter>(p + 1);
    for (Count k = 0; k < z.counts()[p]; ++k) {
      Letter b = insert_into_counts(current, x);
      if (b == 0) {
        continue;
      }
      if (b < last_bumped) {
        throw std::logic_error("bumped letters do not form a row");
      }
      last_bumped   = b;
      bumped[b - 1] = detail::checked_add(bumped[b - 1], 1);
    }
  }
  RowProduct out{std::nullopt, Row(std::move(current))};
  if (last_bumped != 0) {
    out.x = Row(std::move(bumped));
  }
  return out;
}

namespace kernel {

  void multiply_counts(std::span<Count const> w,
                       std::span<Count const> z,
                       std::span<Count>       x,
                       std::span<Count>       y) {
    auto const n = w.size();
    x[0]         = 0;
    Count big_z  = 0;  // Z_{p-1}
    Count big_x  = 0;  // X_{p-1}
    for (std::size_t p = 1; p < n; ++p) {
      big_z = detail::checked_add(big_z, z[p - 1]);
      x[p]  = std::min<Count>(big_z - big_x, w[p]);
      big_x += x[p];
    }
    for (std::size_t q = 0; q < n; ++q) {
      y[q] = detail::checked_add(w[q], z[q]) - x[q];
    }
  }

}  // namespace kernel

RowProduct multiply_rows_closed_form(Row const& w, Row const& z) {
  w.alphabet().require_same(z.alphabet());
  auto const         n = w.n();
  std::vector<Count> x(n), y(n);
  kernel::multiply_counts(w.counts(), z.counts(), x, y);
  RowProduct out{std::nullopt, Row(std::move(y))};
  if (std::any_of(x.begin(), x.end(), [](Count c) { return c != 0; })) {
    out.x = Row(std::move(x));
  }
  return out;
}

bool check_equivalence(Row const& w, Row const& z) {
  return multiply_rows_schensted(w, z) == multiply_rows_closed_form(w, z);
}

}  // namespace plactic
