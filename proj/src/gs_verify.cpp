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

#include "plactic/gs_verify.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace plactic {

bool Relation::trivial() const {
  return dominates(lhs_left, lhs_right);
}

RowWord Relation::lhs() const {
  return RowWord(lhs_left.alphabet(), {lhs_left, lhs_right});
}

Relation build_relation(Row const& r, Row const& s) {
  return Relation{r, s, multiply_rows(r, s)};
}

bool relation_respects_ordering(Relation const& relation) {
  if (relation.trivial()) {
    throw std::invalid_argument("ordering check on a trivial relation");
  }
  return rowword_compare(relation.rhs.as_rowword(), relation.lhs()) < 0;
}

namespace {

  bool is_zero(CountVector const& v) {
    return std::all_of(v.begin(), v.end(), [](Count c) { return c == 0; });
  }

  void push_nonzero(RowWord& word, CountVector const& v) {
    if (!is_zero(v)) {
      word.push_back(Row(v));
    }
  }

  // P[0] = 0, P[p] = v_1 + ... + v_p.
  std::vector<std::int64_t> partial_sums(std::span<Count const> v) {
    std::vector<std::int64_t> out(v.size() + 1, 0);
    for (std::size_t p = 0; p < v.size(); ++p) {
      out[p + 1] = out[p] + v[p];
    }
    return out;
  }

  std::int64_t at(std::span<Count const> v, std::size_t p) {  // 1-based
    return v[p - 1];
  }

  CountVector counts_of(Row const& row) {
    return CountVector(row.counts().begin(), row.counts().end());
  }

  void product(CountVector const& w,
               CountVector const& z,
               CountVector&       x,
               CountVector&       y) {
    x.assign(w.size(), 0);
    y.assign(w.size(), 0);
    kernel::multiply_counts(w, z, x, y);
  }

}  // namespace

RowWord ReductionTrace::right_result() const {
  RowWord out(r.alphabet());
  push_nonzero(out, C);
  push_nonzero(out, E);
  push_nonzero(out, F);
  return out;
}

RowWord ReductionTrace::left_result() const {
  RowWord out(r.alphabet());
  push_nonzero(out, K);
  push_nonzero(out, L);
  push_nonzero(out, J);
  return out;
}

ReductionTrace reduce_triple(Row const& r, Row const& s, Row const& t) {
  r.alphabet().require_same(s.alphabet());
  r.alphabet().require_same(t.alphabet());
  ReductionTrace tr{r, s, t, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  auto const     rv = counts_of(r);
  auto const     sv = counts_of(s);
  auto const     tv = counts_of(t);
  product(sv, tv, tr.A, tr.B);
  product(rv, tr.A, tr.C, tr.D);
  product(tr.D, tr.B, tr.E, tr.F);
  product(rv, sv, tr.G, tr.H);
  product(tr.H, tv, tr.I, tr.J);
  product(tr.G, tr.I, tr.K, tr.L);
  return tr;
}

bool composition_trivial(ReductionTrace const& trace) {
  return trace.right_result() == trace.left_result();
}

bool zero_pattern_holds(ReductionTrace const& trace) {
  auto const n = trace.n();
  bool       ok = trace.A[0] == 0 && trace.C[0] == 0 && trace.E[0] == 0
            && trace.G[0] == 0 && trace.I[0] == 0 && trace.K[0] == 0
            && trace.L[0] == 0;
  if (n >= 2) {
    ok = ok && trace.C[1] == 0 && trace.K[1] == 0;
  }
  return ok;
}

bool letters_conserved(ReductionTrace const& trace) {
  for (std::size_t q = 0; q < trace.n(); ++q) {
    std::uint64_t const in = std::uint64_t{trace.r.counts()[q]}
                             + trace.s.counts()[q] + trace.t.counts()[q];
    std::uint64_t const right
        = std::uint64_t{trace.C[q]} + trace.E[q] + trace.F[q];
    std::uint64_t const left
        = std::uint64_t{trace.K[q]} + trace.L[q] + trace.J[q];
    if (in != right || in != left) {
      return false;
    }
  }
  return true;
}

bool check_c3k3_closed_form(ReductionTrace const& trace) {
  if (trace.n() < 3) {
    throw std::invalid_argument("C3/K3 closed form needs n >= 3");
  }
  auto const expected = std::min({at(trace.t.counts(), 1),
                                  at(trace.s.counts(), 2),
                                  at(trace.r.counts(), 3)});
  auto const big_c3   = partial_sums(trace.C)[3];
  auto const big_k3   = partial_sums(trace.K)[3];
  return big_c3 == expected && big_k3 == expected;
}

bool check_e2l2_closed_form(ReductionTrace const& trace) {
  if (trace.n() < 2) {
    throw std::invalid_argument("e2/l2 closed form needs n >= 2");
  }
  auto const r2 = at(trace.r.counts(), 2);
  auto const s1 = at(trace.s.counts(), 1), s2 = at(trace.s.counts(), 2);
  auto const t1 = at(trace.t.counts(), 1);
  auto const expected = std::min({s1 + t1, t1 + r2, r2 + s2});
  return at(trace.E, 2) == expected && at(trace.L, 2) == expected;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass:
      return "pass";
    case Outcome::not_applicable:
      return "not_applicable";
    case Outcome::fail:
      return "fail";
  }
  return "?";
}

bool LemmaReport::all_passed() const {
  return std::none_of(results.begin(), results.end(), [](auto const& r) {
    return r.outcome == Outcome::fail;
  });
}

namespace {

  // Implication check over a range of indices.
  class Tally {
   public:
    explicit Tally(LemmaResult& out) : out_(out) {}

    void unconditional(bool holds, std::size_t p) {
      record(true, holds, p);
    }

    void record(bool hypothesis, bool conclusion, std::size_t p) {
      if (!hypothesis || out_.outcome == Outcome::fail) {
        return;
      }
      if (conclusion) {
        out_.outcome = Outcome::pass;
      } else {
        out_.outcome = Outcome::fail;
        out_.witness = p;
      }
    }

   private:
    LemmaResult& out_;
  };

}  // namespace

LemmaReport check_lemma_invariants(ReductionTrace const& trace) {
  auto const n  = trace.n();
  auto const R  = partial_sums(trace.r.counts());
  auto const S  = partial_sums(trace.s.counts());
  auto const A  = partial_sums(trace.A);
  auto const C  = partial_sums(trace.C);
  auto const G  = partial_sums(trace.G);
  auto const I  = partial_sums(trace.I);
  auto const K  = partial_sums(trace.K);
  auto       r  = [&](std::size_t p) { return R[p] - R[p - 1]; };

  LemmaReport report;
  Tally       a_le_i(report.results[0]);
  Tally       nonneg(report.results[1]);
  Tally       positive(report.results[2]);
  Tally       s_minus_g(report.results[3]);
  Tally       k_eq_i(report.results[4]);

  for (std::size_t p = 1; p <= n; ++p) {
    a_le_i.unconditional(A[p] <= I[p], p);
    auto const q = S[p] + C[p] - G[p] - A[p];
    nonneg.unconditional(q >= 0, p);
    positive.record(q > 0, A[p] == I[p], p);
  }
  for (std::size_t p = 2; p + 1 <= n; ++p) {
    bool const hyp
        = K[p] == C[p] && K[p + 1] == C[p + 1] && C[p + 1] == C[p] + r(p + 1);
    s_minus_g.record(hyp, S[p] - G[p] >= r(p + 1), p);
  }
  for (std::size_t p = 3; p <= n; ++p) {
    bool const hyp = K[p - 1] == C[p - 1] && K[p] == C[p] && C[p] == A[p - 1]
                     && A[p - 1] < C[p - 1] + r(p)
                     && S[p - 1] - G[p - 1] >= r(p);
    k_eq_i.record(hyp, K[p] == I[p - 1], p);
  }
  return report;
}

}  // namespace plactic
