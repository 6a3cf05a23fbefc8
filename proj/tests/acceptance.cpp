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

// Acceptance gate. One PASS/FAIL line per criterion; exit status 0 iff all
// criteria pass. Every comparison is exact; the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plactic/algebra.hpp"
#include "plactic/format.hpp"
#include "plactic/gs_verify.hpp"
#include "plactic/knuth_oracle.hpp"
#include "plactic/sweep.hpp"
#include "plactic/tableau.hpp"

using namespace plactic;

namespace {

constexpr double kLimitEquivalence = 5.0;
constexpr double kLimitGsBasis     = 60.0;
constexpr double kLimitOrdering    = 10.0;
constexpr double kLimitNormalForm  = 120.0;
constexpr double kLimitStrategy    = 30.0;
constexpr double kLimitWorkedValues       = 60.0;
constexpr double kLimitAlgebra     = 60.0;

constexpr std::uint64_t kSeed = 1;

struct Verdict {
  bool        ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok     = false;
      detail = what;
    }
  }
};

std::vector<LetterWord> all_words(Alphabet a, std::size_t len) {
  std::vector<LetterWord> out;
  std::vector<Letter>     w(len, 1);
  while (true) {
    out.emplace_back(a, w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == a.size()) {
      w[i - 1] = 1;
      --i;
    }
    if (i == 0) {
      return out;
    }
    ++w[i - 1];
  }
}

bool clean(CheckCounts const& c, std::uint64_t total) {
  return c.fail == 0 && c.total() == total;
}

Verdict criterion_equivalence() {
  Verdict       o;
  std::uint64_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const m = count_rows(Alphabet(n), 4);
    auto const c = sweep_equivalence(Alphabet(n), 4);
    o.require(clean(c, m * m) && c.pass == m * m,
              "exhaustive mismatch at n=" + std::to_string(n));
    pairs += m * m;
  }
  o.require(count_rows(Alphabet(4), 4) == 69, "69 rows at n=4");
  auto const sampled = sample_equivalence(8, 12, 10'000, kSeed);
  o.require(sampled.pass == 10'000 && sampled.fail == 0, "random pairs");
  if (o.ok) {
    o.detail = std::to_string(pairs) + " exhaustive pairs (4761 at n=4), "
               + std::to_string(sampled.pass) + " random pairs, 0 mismatches";
  }
  return o;
}

Verdict criterion_gs_basis() {
  Verdict       o;
  std::string   detail;
  for (auto [n, triples] : {std::pair<std::size_t, std::uint64_t>{3, 39'304},
                            {4, 328'509}}) {
    SweepConfig c;
    c.n       = n;
    c.max_len = 4;
    auto const r = verify_gs_basis(c);
    o.require(r.triples_exhaustive == triples,
              "triple count at n=" + std::to_string(n));
    o.require(r.passed(), "failures at n=" + std::to_string(n));
    for (std::size_t k = 0; k < kTripleChecks.size(); ++k) {
      o.require(clean(r.checks[k], triples),
                std::string(kTripleChecks[k]) + " at n=" + std::to_string(n));
    }
    o.require(r.checks[0].pass == triples, "composition pass count");
    detail += (detail.empty() ? "" : ", ") + std::string("n=")
              + std::to_string(n) + ": " + std::to_string(triples)
              + " triples, 0 failures";
  }
  if (o.ok) {
    o.detail = detail;
  }
  return o;
}

Verdict criterion_ordering() {
  Verdict       o;
  std::uint64_t relations = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const m = count_rows(Alphabet(n), 5);
    auto const c = sweep_ordering(Alphabet(n), 5);
    o.require(clean(c, m * m), "ordering at n=" + std::to_string(n));
    relations += c.pass;
  }
  auto const mono = sample_monomial(Alphabet(4), 10'000, kSeed);
  o.require(clean(mono, 10'000), "monomial samples");
  o.require(mono.pass > 0, "no informative monomial samples");
  if (o.ok) {
    o.detail = std::to_string(relations) + " nontrivial relations decrease, "
               + std::to_string(mono.pass) + "/10000 monomial samples pass ("
               + std::to_string(mono.not_applicable) + " with u = v)";
  }
  return o;
}

Verdict criterion_normal_form() {
  Verdict        o;
  Alphabet const a(3);
  std::size_t    words = 0;
  std::uint64_t  pairs = 0;
  for (std::size_t l = 1; l <= 5; ++l) {
    auto const ws = all_words(a, l);
    words += ws.size();
    std::vector<Tableau>         nf;
    std::vector<CongruenceClass> cls;
    for (auto const& w : ws) {
      nf.push_back(normal_form_letters(w));
      cls.push_back(congruence_class(w));
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        ++pairs;
        o.require((nf[i] == nf[j]) == cls[i].contains(ws[j]),
                  format_letters(ws[i]) + " vs " + format_letters(ws[j]));
      }
    }
  }
  o.require(words == 363, "363 words");
  std::string counts;
  for (std::size_t l = 0; l <= 6; ++l) {
    std::set<Tableau, TableauLess> forms;
    std::set<LetterWord>           seen;
    std::size_t                    classes = 0;
    for (auto const& w : all_words(a, l)) {
      forms.insert(normal_form_letters(w));
      if (!seen.contains(w)) {
        ++classes;
        auto const c = congruence_class(w);
        seen.insert(c.begin(), c.end());
      }
    }
    auto const tableaux = enumerate_tableaux(a, l).size();
    o.require(forms.size() == classes && classes == tableaux,
              "class count at l=" + std::to_string(l));
    counts += (l ? "," : "") + std::to_string(tableaux);
  }
  auto const n2 = enumerate_tableaux(Alphabet(2), 2).size();
  std::set<LetterWord> seen;
  std::size_t          n2_classes = 0;
  for (auto const& w : all_words(Alphabet(2), 2)) {
    if (!seen.contains(w)) {
      ++n2_classes;
      auto const c = congruence_class(w);
      seen.insert(c.begin(), c.end());
    }
  }
  o.require(n2 == 4 && n2_classes == 4, "n=2, l=2 must give 4 classes");
  if (o.ok) {
    o.detail = std::to_string(words) + " words, " + std::to_string(pairs)
               + " same-length pairs agree; classes l=0..6: " + counts
               + "; n=2 l=2: 4";
  }
  return o;
}

Verdict criterion_strategy() {
  Verdict        o;
  Alphabet const a(3);
  auto const     rows = all_rows(a, 8);
  std::uint64_t  checked = 0;
  std::function<void(RowWord const&)> grow = [&](RowWord const& w) {
    ++checked;
    o.require(normal_form_rowword(w, Strategy::leftmost_first)
                  == normal_form_rowword(w, Strategy::rightmost_first),
              format_rowword(w));
    if (w.degree() == 3) {
      return;
    }
    for (auto const& r : rows) {
      if (w.letter_count() + r.length() <= 8) {
        grow(w * RowWord(a, {r}));
      }
    }
  };
  grow(RowWord(a));
  if (o.ok) {
    o.detail = std::to_string(checked) + " row words agree";
  }
  return o;
}

Verdict criterion_worked_values() {
  Verdict o;
  auto const row = parse_row(Alphabet(5), "111225");
  o.require(format_row_counts(row) == "(3,2,0,0,1)", "111225 counts");
  Alphabet const a7(7);
  auto const     word = parse_rowword(a7, "4556·223357·1112444");
  o.require(Tableau::is_tableau(word), "example tableau validates");
  auto const t = Tableau(a7, word.rows());
  o.require(normal_form_rowword(word) == t, "rowword fixed point");
  o.require(normal_form_letters(t.to_letters()) == t, "letter fixed point");
  std::uint64_t traces = 0;
  for (std::size_t n : {3u, 4u}) {
    auto const rows = all_rows(Alphabet(n), 4);
    for (auto const& r : rows) {
      for (auto const& s : rows) {
        for (auto const& u : rows) {
          auto const tr = reduce_triple(r, s, u);
          o.require(check_c3k3_closed_form(tr), "C3 = K3 closed form");
          o.require(check_e2l2_closed_form(tr), "e2 = l2 closed form");
          ++traces;
        }
      }
    }
  }
  if (o.ok) {
    o.detail = "111225 = (3,2,0,0,1); 4556·223357·1112444 fixed; "
               "both closed forms on " + std::to_string(traces) + " traces";
  }
  return o;
}

Verdict criterion_algebra() {
  Verdict        o;
  Alphabet const a(3);
  for (std::size_t l = 0; l <= 5; ++l) {
    auto const     basis = enumerate_tableaux(a, l);
    AlgebraElement sum(a);
    for (auto const& w : all_words(a, l)) {
      auto const m = reduce_free_word(letters_to_rowword(w), 1);
      o.require(m.terms().size() == 1, "monomial reduces to one term");
      sum += m;
    }
    std::vector<Tableau> support;
    for (auto const& [t, c] : sum.terms()) {
      support.push_back(t);
    }
    o.require(support == basis, "support at l=" + std::to_string(l));
  }
  auto const x = parse_element(a, "1/2*2·1 - 3*13 + 2*ε");
  auto const y = parse_element(a, "123 + 5/7*3·2");
  auto const z = parse_element(a, "-2*22·11 + 1");
  auto const one = AlgebraElement::one(a);
  o.require((x * y) * z == x * (y * z), "associativity");
  o.require(x * (y + z) == x * y + x * z, "left distributivity");
  o.require((x + y) * z == x * z + y * z, "right distributivity");
  o.require(one * x == x && x * one == x, "identity");
  o.require((x - x).is_zero(), "additive inverse");
  o.require(parse_element(a, "2*12 + 3*12") == parse_element(a, "5*12"),
            "like terms");
  if (o.ok) {
    o.detail = "monomials of length 0..5 span exactly the tableaux; "
               "ring axioms exact";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    char const*            name;
    double                 limit;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> const criteria{
      {"row product algorithms agree", kLimitEquivalence, criterion_equivalence},
      {"row relations form a Groebner-Shirshov basis", kLimitGsBasis,
       criterion_gs_basis},
      {"relations respect the deg-lex ordering", kLimitOrdering,
       criterion_ordering},
      {"normal forms match the Knuth congruence", kLimitNormalForm,
       criterion_normal_form},
      {"reduction strategies agree", kLimitStrategy, criterion_strategy},
      {"worked values reproduce", kLimitWorkedValues, criterion_worked_values},
      {"tableaux are an algebra basis", kLimitAlgebra, criterion_algebra},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    auto       o     = criteria[i].run();
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (o.ok && secs > criteria[i].limit) {
      o.ok     = false;
      o.detail = "took " + std::to_string(secs) + " s, limit "
                 + std::to_string(criteria[i].limit) + " s";
    }
    failed += o.ok ? 0 : 1;
    std::printf("[%s] criterion %zu: %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name, o.detail.c_str(), secs);
  }
  std::printf("%s: %zu/%zu criteria\n", failed == 0 ? "ACCEPTED" : "REJECTED",
              criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
