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


#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracle.hpp"
#include "plactic/format.hpp"
#include "plactic/gs_verify.hpp"
#include "plactic/tableau.hpp"

using namespace plactic;
using plactic::test::R;
using plactic::test::RW;

namespace {

CountVector cv(std::size_t n, std::string const& row) {
  if (row.empty()) {
    return CountVector(n, 0);
  }
  auto const r = R(n, row);
  return {r.counts().begin(), r.counts().end()};
}

// Letter-level product returning count vectors, zero vector for no bump.
std::pair<CountVector, CountVector> oracle_product(CountVector const& w,
                                                   CountVector const& z) {
  auto expand = [](CountVector const& v) {
    oracle::Word out;
    for (std::size_t p = 0; p < v.size(); ++p) {
      out.insert(out.end(), v[p], static_cast<int>(p + 1));
    }
    return out;
  };
  auto row = expand(w);
  CountVector x(w.size(), 0), y(w.size(), 0);
  for (int letter : expand(z)) {
    if (int b = oracle::insert(row, letter); b != 0) {
      ++x[b - 1];
    }
  }
  for (int letter : row) {
    ++y[letter - 1];
  }
  return {x, y};
}

}  // namespace

TEST_CASE("build_relation", "[gs]") {
  auto const a = build_relation(R(5, "111225"), R(5, "23"));
  CHECK_FALSE(a.trivial());
  CHECK(format_rowword(a.rhs.as_rowword()) == "5\xC2\xB7" "1112223");
  CHECK(relation_respects_ordering(a));

  auto const b = build_relation(R(7, "4556"), R(7, "223357"));
  CHECK(b.trivial());
  CHECK(b.rhs.as_rowword() == b.lhs());
  CHECK_THROWS_AS(relation_respects_ordering(b), std::invalid_argument);

  auto const c = build_relation(R(3, "2"), R(3, "2"));
  CHECK_FALSE(c.trivial());
  CHECK_FALSE(c.rhs.x);
  CHECK(c.rhs.y == R(3, "22"));
  CHECK(relation_respects_ordering(c));
}

TEST_CASE("ordering holds on every nontrivial relation", "[gs][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const rows = all_rows(Alphabet(n), 5);
    for (auto const& r : rows) {
      for (auto const& s : rows) {
        auto const rel = build_relation(r, s);
        if (!rel.trivial()) {
          REQUIRE(relation_respects_ordering(rel));
        }
      }
    }
  }
}

TEST_CASE("worked trace", "[gs]") {
  auto const tr = reduce_triple(R(3, "2"), R(3, "12"), R(3, "1"));
  CHECK(tr.A == cv(3, "2"));
  CHECK(tr.B == cv(3, "11"));
  CHECK(tr.C == cv(3, ""));
  CHECK(tr.D == cv(3, "22"));
  CHECK(tr.E == cv(3, "22"));
  CHECK(tr.F == cv(3, "11"));
  CHECK(tr.G == cv(3, "2"));
  CHECK(tr.H == cv(3, "12"));
  CHECK(tr.I == cv(3, "2"));
  CHECK(tr.J == cv(3, "11"));
  CHECK(tr.K == cv(3, ""));
  CHECK(tr.L == cv(3, "22"));
  CHECK(tr.right_result() == RW(3, "22·11"));
  CHECK(tr.left_result() == RW(3, "22·11"));
  CHECK(composition_trivial(tr));
  CHECK(zero_pattern_holds(tr));
  CHECK(letters_conserved(tr));
  CHECK(check_c3k3_closed_form(tr));
  CHECK(check_e2l2_closed_form(tr));
  CHECK(tr.E[1] == 2);
  CHECK(check_lemma_invariants(tr).all_passed());
}

TEST_CASE("fixed triple", "[gs]") {
  auto const tr = reduce_triple(R(3, "3"), R(3, "2"), R(3, "1"));
  CHECK(tr.right_result() == RW(3, "3·2·1"));
  CHECK(tr.left_result() == RW(3, "3·2·1"));
  CHECK(check_c3k3_closed_form(tr));
  CHECK(tr.C == cv(3, "3"));
  CHECK(tr.K == cv(3, "3"));

  auto const ones = reduce_triple(R(3, "1"), R(3, "1"), R(3, "1"));
  CHECK(composition_trivial(ones));
  CHECK(check_lemma_invariants(ones).all_passed());
}

TEST_CASE("closed-form preconditions", "[gs]") {
  auto const one = reduce_triple(R(1, "1"), R(1, "11"), R(1, "1"));
  CHECK_THROWS_AS(check_e2l2_closed_form(one), std::invalid_argument);
  CHECK_THROWS_AS(check_c3k3_closed_form(one), std::invalid_argument);
  auto const two = reduce_triple(R(2, "2"), R(2, "12"), R(2, "1"));
  CHECK(check_e2l2_closed_form(two));
  CHECK_THROWS_AS(check_c3k3_closed_form(two), std::invalid_argument);
  CHECK_THROWS_AS(reduce_triple(R(2, "1"), R(3, "1"), R(2, "1")),
                  AlphabetMismatch);
}

TEST_CASE("traces match the letter oracle", "[gs][property]") {
  Alphabet const a(3);
  auto const     rows = all_rows(a, 3);
  for (auto const& r : rows) {
    for (auto const& s : rows) {
      for (auto const& t : rows) {
        auto const tr = reduce_triple(r, s, t);
        CountVector const rv(r.counts().begin(), r.counts().end());
        CountVector const sv(s.counts().begin(), s.counts().end());
        CountVector const tv(t.counts().begin(), t.counts().end());
        auto const [A, B] = oracle_product(sv, tv);
        auto const [C, D] = oracle_product(rv, A);
        auto const [E, F] = oracle_product(D, B);
        auto const [G, H] = oracle_product(rv, sv);
        auto const [I, J] = oracle_product(H, tv);
        auto const [K, L] = oracle_product(G, I);
        REQUIRE(tr.A == A);
        REQUIRE(tr.B == B);
        REQUIRE(tr.C == C);
        REQUIRE(tr.D == D);
        REQUIRE(tr.E == E);
        REQUIRE(tr.F == F);
        REQUIRE(tr.G == G);
        REQUIRE(tr.H == H);
        REQUIRE(tr.I == I);
        REQUIRE(tr.J == J);
        REQUIRE(tr.K == K);
        REQUIRE(tr.L == L);
      }
    }
  }
}

TEST_CASE("composition agrees with independent normal forms", "[gs][property]") {
  Alphabet const a(3);
  auto const     rows = all_rows(a, 3);
  for (auto const& r : rows) {
    for (auto const& s : rows) {
      for (auto const& t : rows) {
        auto const tr = reduce_triple(r, s, t);
        RowWord const rst(a, {r, s, t});
        auto const    left  = normal_form_rowword(rst, Strategy::leftmost_first);
        auto const    right = normal_form_rowword(rst, Strategy::rightmost_first);
        auto const    product = tableau_multiply(
            tableau_multiply(normal_form_rowword(RowWord(a, {r})),
                             normal_form_rowword(RowWord(a, {s}))),
            normal_form_rowword(RowWord(a, {t})));
        REQUIRE(composition_trivial(tr));
        REQUIRE(left == right);
        REQUIRE(left == product);
        REQUIRE(left.to_rowword() == tr.right_result());
        REQUIRE(zero_pattern_holds(tr));
        REQUIRE(letters_conserved(tr));
        REQUIRE(check_c3k3_closed_form(tr));
        REQUIRE(check_e2l2_closed_form(tr));
        REQUIRE(check_lemma_invariants(tr).all_passed());
      }
    }
  }
}

TEST_CASE("t1 = 0 forces C3 = K3 = 0", "[gs]") {
  auto const rows = all_rows(Alphabet(3), 3);
  for (auto const& r : rows) {
    for (auto const& s : rows) {
      for (auto const& t : rows) {
        if (t.count(1) != 0) {
          continue;
        }
        auto const tr = reduce_triple(r, s, t);
        REQUIRE(tr.C[0] + tr.C[1] + tr.C[2] == 0);
        REQUIRE(tr.K[0] + tr.K[1] + tr.K[2] == 0);
      }
    }
  }
}

TEST_CASE("checks detect corrupted traces", "[gs]") {
  auto const good = reduce_triple(R(3, "2"), R(3, "12"), R(3, "1"));

  auto bad = good;
  bad.L = cv(3, "23");
  CHECK_FALSE(composition_trivial(bad));
  CHECK_FALSE(letters_conserved(bad));
  CHECK_FALSE(check_e2l2_closed_form(bad));

  bad   = good;
  bad.A = cv(3, "1");
  CHECK_FALSE(zero_pattern_holds(bad));

  bad   = good;
  bad.A = cv(3, "33");
  auto const report = check_lemma_invariants(bad);
  CHECK_FALSE(report.all_passed());
  CHECK(report.results[0].outcome == Outcome::fail);
  CHECK(report.results[0].witness == std::size_t{3});

  bad   = good;
  bad.C = cv(3, "3");
  CHECK_FALSE(check_c3k3_closed_form(bad));
}

TEST_CASE("conditional lemmas report not_applicable", "[gs]") {
  auto const tr = reduce_triple(R(2, "2"), R(2, "12"), R(2, "1"));
  auto const report = check_lemma_invariants(tr);
  CHECK(report.results[3].outcome == Outcome::not_applicable);
  CHECK(report.results[4].outcome == Outcome::not_applicable);
  CHECK(to_string(Outcome::not_applicable) == "not_applicable");
  CHECK(LemmaReport::kNames[0] == "lemma_a_le_i");
}
