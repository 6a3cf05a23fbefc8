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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "plactic/algebra.hpp"
#include "plactic/format.hpp"
#include "plactic/json.hpp"
#include "plactic/knuth_oracle.hpp"
#include "plactic/schensted.hpp"
#include "plactic/sweep.hpp"
#include "plactic/tableau.hpp"

namespace plactic::cli {

namespace {

  using nlohmann::json;

  struct Common {
    std::size_t n      = 0;
    std::string format;  // empty: the subcommand's default
    std::string out_path;
  };

  struct Output {
    std::string text;
    json        doc;
    int         code = kExitOk;
  };

  void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--n", common.n, "alphabet size (letters 1..n)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", common.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", common.out_path, "write the result to a file");
  }

  Output verdict(bool value) {
    return Output{value ? "true" : "false",
                  json{{"result", value}},
                  value ? kExitOk : kExitFalse};
  }

  Output tableau_output(Tableau const& t) {
    return Output{format_tableau(t), tableau_to_json(t), kExitOk};
  }

  Tableau normal_form_of(Alphabet alphabet, std::string const& text) {
    if (has_row_separator(text) || text.find('(') != std::string::npos) {
      return normal_form_rowword(parse_rowword(alphabet, text));
    }
    return normal_form_letters(parse_letters(alphabet, text));
  }

  json optional_row_json(std::optional<Row> const& row) {
    if (!row) {
      return nullptr;
    }
    return std::vector<Count>(row->counts().begin(), row->counts().end());
  }

  std::string counts_line(std::string_view name, CheckCounts const& c) {
    std::ostringstream os;
    os << "  " << std::left << std::setw(28) << name << " pass "
       << std::setw(9) << c.pass << " n/a " << std::setw(9) << c.not_applicable
       << " fail " << c.fail << '\n';
    return os.str();
  }

  std::string summary(VerificationReport const& r) {
    std::ostringstream os;
    os << "verify-gs n=" << r.config.n << " max_len=" << r.config.max_len
       << ": " << r.rows << " rows, " << r.triples_exhaustive
       << " exhaustive triples, " << r.triples_sampled
       << " sampled triples (seed " << r.config.seed << ")\n";
    for (std::size_t c = 0; c < kTripleChecks.size(); ++c) {
      os << counts_line(kTripleChecks[c], r.checks[c]);
    }
    os << counts_line("ordering (pairs)", r.ordering);
    if (r.counterexample) {
      os << "least failing triple:";
      for (auto const& v : r.counterexample->rows) {
        os << ' ' << format_row(Row(v));
      }
      os << " (" << r.counterexample->check << ")\n";
    }
    os << (r.passed() ? "PASS" : "FAIL") << ": " << r.failure_count
       << " failures, " << std::fixed << std::setprecision(3) << r.wall_seconds
       << " s";
    return os.str();
  }

}  // namespace

int run(std::vector<std::string> const& args,
        std::ostream&                   out,
        std::ostream&                   err) {
  CLI::App app{"plactic: rows, tableaux and the plactic monoid"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  Common                       common;
  std::vector<std::string>     operands;
  std::function<Output()>      action;

  auto sub = [&](std::string const& name,
                 std::string const& help,
                 std::size_t        arity) {
    auto* cmd = app.add_subcommand(name, help);
    add_common(cmd, common);
    if (arity > 0) {
      cmd->add_option("operands", operands)->required()->expected(
          static_cast<int>(arity));
    }
    return cmd;
  };

  // normal-form
  sub("normal-form", "tableau of a letter word or row word", 1)
      ->callback([&] {
        action = [&] {
          return tableau_output(normal_form_of(Alphabet(common.n), operands[0]));
        };
      });

  sub("equiv", "are two words equal in the plactic monoid", 2)->callback([&] {
    action = [&] {
      Alphabet a(common.n);
      return verdict(plactic_equivalent(parse_letters(a, operands[0]),
                                        parse_letters(a, operands[1])));
    };
  });

  std::string algorithm = "closed-form";
  auto* mul = sub("mul-rows", "product of two rows as a tableau X·Y", 2);
  mul->add_option("--algorithm", algorithm, "closed-form or schensted")
      ->check(CLI::IsMember({"closed-form", "schensted"}));
  mul->callback([&] {
    action = [&] {
      Alphabet   a(common.n);
      auto const w = parse_row(a, operands[0]);
      auto const z = parse_row(a, operands[1]);
      auto const p = algorithm == "schensted" ? multiply_rows_schensted(w, z)
                                              : multiply_rows_closed_form(w, z);
      return Output{format_rowword(p.as_rowword()),
                    json{{"n", common.n},
                         {"x", optional_row_json(p.x)},
                         {"y", optional_row_json(p.y)}},
                    kExitOk};
    };
  });

  sub("tab-mul", "product of two tableaux", 2)->callback([&] {
    action = [&] {
      Alphabet a(common.n);
      return tableau_output(tableau_multiply(parse_tableau(a, operands[0]),
                                             parse_tableau(a, operands[1])));
    };
  });

  std::size_t length = 0;
  auto*       enumerate
      = sub("enumerate", "all tableaux with a given number of letters", 0);
  enumerate->add_option("--len", length, "number of letters")->required();
  enumerate->callback([&] {
    action = [&] {
      Output o;
      o.doc = json::array();
      for_each_tableau(Alphabet(common.n), length, [&](Tableau const& t) {
        o.text += format_tableau(t) + "\n";
        o.doc.push_back(tableau_to_json(t));
      });
      if (!o.text.empty()) {
        o.text.pop_back();
      }
      return o;
    };
  });

  sub("oracle-equiv", "Knuth-relation search: are two words congruent", 2)
      ->callback([&] {
        action = [&] {
          Alphabet a(common.n);
          return verdict(oracle_equivalent(parse_letters(a, operands[0]),
                                           parse_letters(a, operands[1])));
        };
      });

  sub("oracle-class", "all words congruent to a word", 1)->callback([&] {
    action = [&] {
      Alphabet   a(common.n);
      auto const cls = congruence_class(parse_letters(a, operands[0]));
      Output     o;
      for (auto const& w : cls) {
        o.text += format_letters(w) + "\n";
      }
      o.text.pop_back();
      o.doc = class_to_json(a, cls);
      return o;
    };
  });

  SweepConfig config;
  int         threads = 0;
  auto*       verify  = sub("verify-gs",
                     "check every overlap R·S·T of the row relations",
                     0);
  verify->add_option("--max-len", config.max_len, "longest row")->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", config.samples, "extra random triples");
  verify->add_option("--seed", config.seed, "seed for random triples")
      ->capture_default_str();
  verify->add_option("--sample-max-len", config.sample_max_len,
                     "longest row in random triples")
      ->capture_default_str();
  verify->add_option("--budget", config.budget, "maximum number of triples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "0: PLACTIC_THREADS or all cores");
  verify->callback([&] {
    action = [&] {
      config.n = common.n;
      if (common.format.empty()) {
        common.format = "json";
      }
      auto report = verify_gs_basis(config, Execution::with_threads(threads));
      Output o;
      o.text = summary(report);
      o.doc  = report_to_json(report);
      o.code = report.passed() ? kExitOk : kExitFalse;
      if (common.format == "json") {
        err << o.text << '\n';
      }
      return o;
    };
  });

  std::size_t   order_len     = 5;
  std::uint64_t order_samples = 10'000;
  std::uint64_t order_seed    = 1;
  auto*         order
      = sub("check-order", "row relations decrease under deg-lex", 0);
  order->add_option("--max-len", order_len, "longest row")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  order->add_option("--samples", order_samples, "monomiality samples")
      ->capture_default_str();
  order->add_option("--seed", order_seed, "seed")->capture_default_str();
  order->callback([&] {
    action = [&] {
      Alphabet   a(common.n);
      auto const rel  = sweep_ordering(a, order_len);
      auto const mono = sample_monomial(a, order_samples, order_seed);
      bool const ok   = rel.fail == 0 && mono.fail == 0;
      Output     o;
      o.text = counts_line("relations", rel) + counts_line("monomial", mono)
               + (ok ? "PASS" : "FAIL");
      o.doc  = json{{"n", common.n},
                   {"max_len", order_len},
                   {"seed", order_seed},
                   {"relations",
                    {{"pass", rel.pass},
                     {"not_applicable", rel.not_applicable},
                     {"fail", rel.fail}}},
                   {"monomial",
                    {{"pass", mono.pass},
                     {"not_applicable", mono.not_applicable},
                     {"fail", mono.fail}}},
                   {"passed", ok}};
      o.code = ok ? kExitOk : kExitFalse;
      return o;
    };
  });

  sub("alg-mul", "product of two algebra elements", 2)->callback([&] {
    action = [&] {
      Alphabet   a(common.n);
      auto const product = parse_element(a, operands[0])
                           * parse_element(a, operands[1]);
      return Output{format_element(product), element_to_json(product), kExitOk};
    };
  });

  bool  is_zero = false;
  auto* reduce  = sub("alg-reduce", "canonical form of a linear combination", 1);
  reduce->add_flag("--is-zero", is_zero, "print whether the result is zero");
  reduce->callback([&] {
    action = [&] {
      auto const element = parse_element(Alphabet(common.n), operands[0]);
      if (is_zero) {
        return verdict(element.is_zero());
      }
      return Output{format_element(element), element_to_json(element), kExitOk};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForVersion const&) {
    out << library_version() << '\n';
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Output result;
  try {
    result = action();
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (BudgetExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (common.format.empty()) {
    common.format = "text";
  }
  std::string const payload
      = common.format == "json" ? result.doc.dump(2) : result.text;
  if (common.out_path.empty()) {
    out << payload << '\n';
  } else {
    std::ofstream file(common.out_path);
    if (!file) {
      err << "error: cannot open '" << common.out_path << "'\n";
      return kExitUsage;
    }
    file << payload << '\n';
  }
  return result.code;
}

}  // namespace plactic::cli
