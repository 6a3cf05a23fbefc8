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
// JSON forms.
//
//   row        [r_1, ..., r_n]
//   tableau    {"n": 3, "rows": [row, ...]}            first row first
//   element    {"n": 3, "terms": [{"coeff": "p/q", "rows": [row, ...]}]}
//   class      {"n": 3, "words": ["132", "312"]}       sorted
//   report     see to_json(VerificationReport)

#ifndef PLACTIC_JSON_HPP
#define PLACTIC_JSON_HPP

#include <nlohmann/json.hpp>

#include "plactic/algebra.hpp"
#include "plactic/knuth_oracle.hpp"
#include "plactic/sweep.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

nlohmann::json tableau_to_json(Tableau const& t);
Tableau        tableau_from_json(nlohmann::json const& j);

nlohmann::json element_to_json(AlgebraElement const& a);
AlgebraElement element_from_json(nlohmann::json const& j);

nlohmann::json class_to_json(Alphabet alphabet, CongruenceClass const& c);

/// `include_timing` = false drops wall_seconds, for byte-for-byte
/// comparison of reports.
nlohmann::json report_to_json(VerificationReport const& r,
                              bool                      include_timing = true);
VerificationReport report_from_json(nlohmann::json const& j);

}  // namespace plactic

#endif  // PLACTIC_JSON_HPP
