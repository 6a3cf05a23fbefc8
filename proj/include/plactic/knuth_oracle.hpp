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
// Brute-force plactic congruence: breadth-first closure of a word under
// single applications of the two Knuth relations
//
//   x z y = z x y   (x <= y < z)
//   y x z = y z x   (x < y <= z)
//
// in either direction at any window of three letters. Nothing here uses
// rows, tableaux or insertion; it exists to check the code that does.

#ifndef PLACTIC_KNUTH_ORACLE_HPP
#define PLACTIC_KNUTH_ORACLE_HPP

#include <cstddef>
#include <set>
#include <stdexcept>

#include "plactic/row.hpp"

namespace plactic {

/// Sorted set of words; all members have the same length and letters.
using CongruenceClass = std::set<LetterWord>;

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::size_t fuel)
      : std::runtime_error("congruence class exceeds "
                           + std::to_string(fuel) + " words") {}
};

inline constexpr std::size_t kDefaultOracleFuel = 1'000'000;

std::set<LetterWord> knuth_neighbors(LetterWord const& w);

/// Throws FuelExhausted if the class has more than `fuel` members.
CongruenceClass congruence_class(LetterWord const& w,
                                 std::size_t       fuel = kDefaultOracleFuel);

bool oracle_equivalent(LetterWord const& u,
                       LetterWord const& v,
                       std::size_t       fuel = kDefaultOracleFuel);

}  // namespace plactic

#endif  // PLACTIC_KNUTH_ORACLE_HPP
