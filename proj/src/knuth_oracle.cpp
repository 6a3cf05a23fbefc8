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

#include "plactic/knuth_oracle.hpp"

#include <deque>
#include <utility>

namespace plactic {

namespace {

  LetterWord with_window(LetterWord const& w,
                         std::size_t       i,
                         Letter            a,
                         Letter            b,
                         Letter            c) {
    auto letters     = w.letters();
    letters[i]       = a;
    letters[i + 1]   = b;
    letters[i + 2]   = c;
    return LetterWord(w.alphabet(), std::move(letters));
  }

}  // namespace

std::set<LetterWord> knuth_neighbors(LetterWord const& w) {
  std::set<LetterWord> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    Letter const a = w[i], b = w[i + 1], c = w[i + 2];
    // First relation, xzy <-> zxy with x <= y < z.
    if (a <= c && c < b) {  // window is x z y
      out.insert(with_window(w, i, b, a, c));
    }
    if (b <= c && c < a) {  // window is z x y
      out.insert(with_window(w, i, b, a, c));
    }
    // Second relation, yxz <-> yzx with x < y <= z.
    if (b < a && a <= c) {  // window is y x z
      out.insert(with_window(w, i, a, c, b));
    }
    if (c < a && a <= b) {  // window is y z x
      out.insert(with_window(w, i, a, c, b));
    }
  }
  return out;
}

CongruenceClass congruence_class(LetterWord const& w, std::size_t fuel) {
  CongruenceClass        seen{w};
  std::deque<LetterWord> queue{w};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : knuth_neighbors(current)) {
      if (seen.insert(next).second) {
        if (seen.size() > fuel) {
          throw FuelExhausted(fuel);
        }
        queue.push_back(next);
      }
    }
  }
  return seen;
}

bool oracle_equivalent(LetterWord const& u,
                       LetterWord const& v,
                       std::size_t       fuel) {
  u.alphabet().require_same(v.alphabet());
  if (u.size() != v.size()) {
    return false;
  }
  return congruence_class(u, fuel).contains(v);
}

}  // namespace plactic
