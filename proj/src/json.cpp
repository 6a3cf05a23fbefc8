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

#include "plactic/json.hpp"

#include "plactic/format.hpp"

namespace plactic {

using nlohmann::json;

namespace {

  json rows_to_json(std::vector<Row> const& rows) {
    json out = json::array();
    for (auto const& row : rows) {
      out.push_back(std::vector<Count>(row.counts().begin(), row.counts().end()));
    }
    return out;
  }

  std::vector<Row> rows_from_json(Alphabet alphabet, json const& j) {
    std::vector<Row> rows;
    for (auto const& r : j) {
      auto counts = r.get<std::vector<Count>>();
      if (counts.size() != alphabet.size()) {
        throw std::invalid_argument("count vector of length "
                                    + std::to_string(counts.size())
                                    + " for n=" + std::to_string(alphabet.size()));
      }
      rows.emplace_back(std::move(counts));
    }
    return rows;
  }

  json counts_json(CheckCounts const& c) {
    return json{{"pass", c.pass},
                {"not_applicable", c.not_applicable},
                {"fail", c.fail}};
  }

  CheckCounts counts_from(json const& j) {
    return CheckCounts{j.at("pass").get<std::uint64_t>(),
                       j.at("not_applicable").get<std::uint64_t>(),
                       j.at("fail").get<std::uint64_t>()};
  }

  json failure_json(Failure const& f) {
    json out{{"check", f.check}, {"rows", f.rows}, {"sampled", f.sampled}};
    out["witness"] = f.witness ? json(*f.witness) : json(nullptr);
    return out;
  }

  Failure failure_from(json const& j) {
    Failure f;
    f.check   = j.at("check").get<std::string>();
    f.rows    = j.at("rows").get<std::vector<CountVector>>();
    f.sampled = j.at("sampled").get<bool>();
    if (!j.at("witness").is_null()) {
      f.witness = j.at("witness").get<std::size_t>();
    }
    return f;
  }

}  // namespace

json tableau_to_json(Tableau const& t) {
  return json{{"n", t.alphabet().size()}, {"rows", rows_to_json(t.rows())}};
}

Tableau tableau_from_json(json const& j) {
  Alphabet const alphabet(j.at("n").get<std::size_t>());
  return Tableau(alphabet, rows_from_json(alphabet, j.at("rows")));
}

json element_to_json(AlgebraElement const& a) {
  json terms = json::array();
  for (auto const& [t, c] : a.terms()) {
    terms.push_back(json{{"coeff", c.get_str()}, {"rows", rows_to_json(t.rows())}});
  }
  return json{{"n", a.alphabet().size()}, {"terms", terms}};
}

AlgebraElement element_from_json(json const& j) {
  Alphabet const alphabet(j.at("n").get<std::size_t>());
  AlgebraElement out(alphabet);
  for (auto const& term : j.at("terms")) {
    Rational coeff(term.at("coeff").get<std::string>());
    coeff.canonicalize();
    out.add_term(Tableau(alphabet, rows_from_json(alphabet, term.at("rows"))),
                 coeff);
  }
  return out;
}

json class_to_json(Alphabet alphabet, CongruenceClass const& c) {
  json words = json::array();
  for (auto const& w : c) {
    words.push_back(format_letters(w));
  }
  return json{{"n", alphabet.size()}, {"words", words}};
}

json report_to_json(VerificationReport const& r, bool include_timing) {
  json checks = json::object();
  for (std::size_t c = 0; c < kTripleChecks.size(); ++c) {
    checks[std::string(kTripleChecks[c])] = counts_json(r.checks[c]);
  }
  json failures = json::array();
  for (auto const& f : r.failures) {
    failures.push_back(failure_json(f));
  }
  json out{
      {"tool", r.tool},
      {"version", r.version},
      {"config",
       {{"n", r.config.n},
        {"max_len", r.config.max_len},
        {"samples", r.config.samples},
        {"seed", r.config.seed},
        {"sample_max_len", r.config.sample_max_len},
        {"budget", r.config.budget}}},
      {"rows", r.rows},
      {"triples_exhaustive", r.triples_exhaustive},
      {"triples_sampled", r.triples_sampled},
      {"pairs", r.pairs},
      {"checks", checks},
      {"ordering", counts_json(r.ordering)},
      {"failure_count", r.failure_count},
      {"failures", failures},
      {"counterexample",
       r.counterexample ? failure_json(*r.counterexample) : json(nullptr)},
      {"passed", r.passed()},
  };
  if (include_timing) {
    out["wall_seconds"] = r.wall_seconds;
  }
  return out;
}

VerificationReport report_from_json(json const& j) {
  VerificationReport r;
  r.tool                = j.at("tool").get<std::string>();
  r.version             = j.at("version").get<std::string>();
  auto const& c         = j.at("config");
  r.config.n            = c.at("n").get<std::size_t>();
  r.config.max_len      = c.at("max_len").get<std::size_t>();
  r.config.samples      = c.at("samples").get<std::uint64_t>();
  r.config.seed         = c.at("seed").get<std::uint64_t>();
  r.config.sample_max_len = c.at("sample_max_len").get<std::size_t>();
  r.config.budget       = c.at("budget").get<std::uint64_t>();
  r.rows                = j.at("rows").get<std::uint64_t>();
  r.triples_exhaustive  = j.at("triples_exhaustive").get<std::uint64_t>();
  r.triples_sampled     = j.at("triples_sampled").get<std::uint64_t>();
  r.pairs               = j.at("pairs").get<std::uint64_t>();
  for (std::size_t k = 0; k < kTripleChecks.size(); ++k) {
    r.checks[k] = counts_from(j.at("checks").at(std::string(kTripleChecks[k])));
  }
  r.ordering      = counts_from(j.at("ordering"));
  r.failure_count = j.at("failure_count").get<std::uint64_t>();
  for (auto const& f : j.at("failures")) {
    r.failures.push_back(failure_from(f));
  }
  if (!j.at("counterexample").is_null()) {
    r.counterexample = failure_from(j.at("counterexample"));
  }
  if (j.contains("wall_seconds")) {
    r.wall_seconds = j.at("wall_seconds").get<double>();
  }
  return r;
}

}  // namespace plactic
