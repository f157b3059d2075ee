/*
 *   Copyright 2026 the operadica authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "operadica/axioms.hpp"
#include "operadica/characterize.hpp"
#include "operadica/closure.hpp"
#include "operadica/combinatorics.hpp"
#include "operadica/freeoperad.hpp"
#include "operadica/registry.hpp"

namespace {

using operadica::DomainError;
using operadica::IndexError;
using operadica::ResourceError;
using operadica::UsageError;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string operad;
  std::string family;
  std::string word;
  std::string format = "text";
  std::string preset;
  std::string from;
  std::string to;
  std::string map = "identity";
  std::string expect = "equal";
  std::string relations_file;
  int arity = 4;
  int max_arity = 0;  // per-command default applied after parsing
  long long samples = 0;
  std::uint64_t seed = 1;
  std::size_t max_elements = 0;  // 0: resolve from env or default
  bool arity_given = false;
  bool word_given = false;
};

operadica::ResourceGuard resolve_guard(const Options& opt) {
  operadica::ResourceGuard guard;
  if (const char* env = std::getenv("OPERADICA_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw UsageError(
          "OPERADICA_MAX_ELEMENTS must be a positive integer, got '" +
          std::string(env) + "'");
    }
    guard.max_elements = static_cast<std::size_t>(value);
  }
  if (opt.max_elements > 0) {
    guard.max_elements = opt.max_elements;  // flag beats environment
  }
  return guard;
}

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

bool json_format(const Options& opt) {
  if (opt.format == "json") return true;
  if (opt.format == "text") return false;
  throw UsageError("unknown --format '" + opt.format +
                   "' (expected text or json)");
}

int run_enumerate(const Options& opt) {
  const operadica::OperadInfo info = operadica::lookup_operad(opt.operad);
  const auto slice = operadica::operad_slice(info, opt.arity,
                                             resolve_guard(opt));
  if (json_format(opt)) {
    json payload;
    payload["operad"] = info.name;
    payload["arity"] = opt.arity;
    payload["elements"] = slice;
    payload["status"] = "ok";
    emit(payload);
  } else {
    for (const operadica::Letters& letters : slice) {
      std::cout << operadica::letters_to_text(letters) << "\n";
    }
  }
  return kExitPass;
}

int run_count(const Options& opt) {
  const operadica::OperadInfo info = operadica::lookup_operad(opt.operad);
  const int max_arity = opt.max_arity > 0 ? opt.max_arity : 6;
  const auto counts = operadica::operad_counts(info, max_arity,
                                               resolve_guard(opt));
  const auto oracle = operadica::operad_oracle(info, max_arity);
  const bool match = counts == oracle;
  if (json_format(opt)) {
    json payload;
    payload["counts"] = counts;
    payload["oracle"] = oracle;
    payload["match"] = match;
    emit(payload);
  } else {
    for (int n = 1; n <= max_arity; ++n) {
      std::cout << "arity " << n << ": counted "
                << counts[static_cast<std::size_t>(n - 1)] << ", oracle "
                << oracle[static_cast<std::size_t>(n - 1)] << "\n";
    }
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
  }
  return match ? kExitPass : kExitFail;
}

int run_membership(const Options& opt) {
  const operadica::OperadInfo info = operadica::lookup_operad(opt.operad);
  const operadica::Word word(info.monoid, operadica::parse_letters(opt.word));
  const operadica::MembershipResult result =
      operadica::operad_membership(info, word, resolve_guard(opt));
  if (json_format(opt)) {
    json payload;
    payload["operad"] = info.name;
    payload["word"] = word.letters();
    payload["member"] = result.member;
    payload["clause"] = result.clause;
    payload["position"] = result.position;
    payload["status"] = result.member ? "ok" : "fail";
    emit(payload);
  } else if (result.member) {
    std::cout << "true\n";
  } else {
    std::cout << "false (clause \"" << result.clause << "\" violated";
    if (result.position > 0) {
      std::cout << " at position " << result.position;
    }
    std::cout << ")\n";
  }
  return result.member ? kExitPass : kExitFail;
}

int run_check_axioms(const Options& opt) {
  const operadica::OperadInfo info = operadica::lookup_operad(opt.operad);
  const int max_arity = opt.max_arity > 0 ? opt.max_arity
                        : opt.samples > 0 ? 6
                                          : 3;
  const operadica::AxiomReport report =
      operadica::check_operad_axioms(info.monoid, opt.samples, opt.seed,
                                     max_arity);
  if (json_format(opt)) {
    json payload;
    payload["monoid"] = report.monoid;
    payload["mode"] = report.mode;
    payload["max_arity"] = report.max_arity;
    payload["samples"] = report.samples;
    json checks = json::array();
    for (const operadica::AxiomCheck& check : report.checks) {
      json row;
      row["axiom"] = check.axiom;
      row["cases"] = check.cases;
      row["passed"] = check.passed;
      row["counterexample"] = check.counterexample;
      checks.push_back(std::move(row));
    }
    payload["checks"] = std::move(checks);
    payload["status"] = report.all_passed() ? "pass" : "fail";
    emit(payload);
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int run_check_presentation(const Options& opt) {
  if (opt.preset.empty() == opt.relations_file.empty()) {
    throw UsageError(
        "check-presentation needs exactly one of --preset or --from <file>");
  }
  operadica::Presentation presentation = [&] {
    if (!opt.preset.empty()) {
      return operadica::presentation_preset(opt.preset);
    }
    std::ifstream in(opt.relations_file);
    if (!in) {
      throw UsageError("cannot read relations file '" + opt.relations_file +
                       "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return operadica::parse_presentation(text.str(), opt.relations_file);
  }();
  const std::string operad_name =
      !opt.operad.empty() ? opt.operad
      : !opt.preset.empty()
          ? operadica::preset_default_operad(opt.preset)
          : throw UsageError("--from needs an explicit --operad");
  const operadica::OperadInfo info = operadica::lookup_operad(operad_name);
  const int max_arity = opt.max_arity > 0 ? opt.max_arity : 5;
  const operadica::PresentationReport report = operadica::verify_presentation(
      presentation, operadica::require_family(info), max_arity,
      resolve_guard(opt));
  if (json_format(opt)) {
    json payload;
    payload["presentation"] = report.presentation;
    payload["operad"] = report.operad;
    json relations = json::array();
    for (const operadica::RelationCheck& check : report.relations) {
      json row;
      row["relation"] = check.relation;
      row["holds"] = check.holds;
      row["witness"] = check.witness;
      relations.push_back(std::move(row));
    }
    payload["relations"] = std::move(relations);
    json arities = json::array();
    for (const operadica::ArityCheck& check : report.arities) {
      json row;
      row["arity"] = check.arity;
      row["terms"] = check.terms;
      row["classes"] = check.classes;
      row["closure"] = check.closure;
      row["well_defined"] = check.well_defined;
      row["injective"] = check.injective;
      row["surjective"] = check.surjective;
      row["witness"] = check.witness;
      arities.push_back(std::move(row));
    }
    payload["arities"] = std::move(arities);
    payload["status"] = report.passed() ? "pass" : "fail";
    emit(payload);
  } else {
    std::cout << report.to_text();
  }
  return report.passed() ? kExitPass : kExitFail;
}

int run_check_morphism(const Options& opt) {
  const operadica::OperadInfo from = operadica::lookup_operad(opt.from);
  const operadica::OperadInfo to = operadica::lookup_operad(opt.to);
  const operadica::MonoidMorphism theta =
      operadica::parse_map(opt.map, from.monoid);
  const int max_arity = opt.max_arity > 0 ? opt.max_arity : 5;
  const operadica::MorphismComparison report = operadica::compare_image(
      from, theta, to, max_arity, resolve_guard(opt));
  bool passed = false;
  if (opt.expect == "equal") {
    passed = report.equal;
  } else if (opt.expect == "subset") {
    passed = report.contained;
  } else {
    throw UsageError("unknown --expect '" + opt.expect +
                     "' (expected equal or subset)");
  }
  if (json_format(opt)) {
    json payload;
    payload["from"] = report.from;
    payload["to"] = report.to;
    payload["map"] = report.map;
    payload["max_arity"] = report.max_arity;
    payload["image_counts"] = report.image_counts;
    payload["target_counts"] = report.target_counts;
    payload["contained"] = report.contained;
    payload["equal"] = report.equal;
    payload["expect"] = opt.expect;
    payload["witness"] = report.witness;
    payload["status"] = passed ? "pass" : "fail";
    emit(payload);
  } else {
    std::cout << report.to_text() << "expected: " << opt.expect << "\n"
              << "status: " << (passed ? "pass" : "fail") << "\n";
  }
  return passed ? kExitPass : kExitFail;
}

int run_bijection(const Options& opt) {
  const std::string name = !opt.family.empty() ? opt.family : opt.operad;
  if (name.empty()) {
    throw UsageError("bijection needs --family <name>");
  }
  const operadica::OperadInfo info = operadica::lookup_operad(name);
  if (opt.word_given == opt.arity_given) {
    throw UsageError("bijection needs exactly one of --word or --arity");
  }
  if (opt.word_given) {
    const operadica::Word word(info.monoid,
                               operadica::parse_letters(opt.word));
    const std::string rendered = operadica::render(
        operadica::word_to_object(info.id, info.k, word));
    if (json_format(opt)) {
      json payload;
      payload["family"] = info.name;
      payload["word"] = word.letters();
      payload["object"] = rendered;
      payload["status"] = "ok";
      emit(payload);
    } else {
      std::cout << rendered << "\n";
    }
    return kExitPass;
  }
  const operadica::BijectivityReport report = operadica::bijectivity_report(
      info.id, info.k, operadica::require_family(info), opt.arity,
      resolve_guard(opt));
  if (json_format(opt)) {
    json payload;
    payload["family"] = report.family;
    payload["arity"] = report.arity;
    payload["members"] = report.members;
    payload["distinct_objects"] = report.distinct_objects;
    payload["oracle"] = report.oracle;
    payload["injective"] = report.injective;
    payload["full_image"] = report.full_image;
    payload["witness"] = report.collision_witness;
    payload["status"] = report.passed() ? "pass" : "fail";
    emit(payload);
  } else {
    std::cout << report.to_text();
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "operadica: word operads over monoids — enumeration, counting, "
      "characterizations, presentations and bijections"};
  app.require_subcommand(1);

  Options opt;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->capture_default_str();
  };
  const auto add_guard = [&](CLI::App* cmd) {
    cmd->add_option("--max-elements", opt.max_elements,
                    "resource guard: largest slice the run may build "
                    "(overrides OPERADICA_MAX_ELEMENTS)");
  };

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list all members of one arity");
  enumerate->add_option("--operad", opt.operad, "operad name")->required();
  enumerate->add_option("--arity", opt.arity, "arity to enumerate")
      ->capture_default_str();
  add_format(enumerate);
  add_guard(enumerate);

  CLI::App* count = app.add_subcommand(
      "count", "compare member counts against the counting oracle");
  count->add_option("--operad", opt.operad, "operad name")->required();
  count->add_option("--max-arity", opt.max_arity,
                    "largest arity to count (default 6)");
  add_format(count);
  add_guard(count);

  CLI::App* membership = app.add_subcommand(
      "membership", "test one word, reporting the violated clause if any");
  membership->add_option("--operad", opt.operad, "operad name")->required();
  membership
      ->add_option("--word", opt.word, "comma-separated letters, e.g. 0,1,0")
      ->required();
  add_format(membership);
  add_guard(membership);

  CLI::App* check_axioms = app.add_subcommand(
      "check-axioms", "verify the operad laws over an operad's monoid");
  check_axioms->add_option("--operad", opt.operad,
                           "operad or monoid spec naming the carrier")
      ->required();
  check_axioms->add_option(
      "--max-arity", opt.max_arity,
      "largest arity tested (default 3 exhaustive, 6 sampled)");
  check_axioms->add_option("--samples", opt.samples,
                           "random instances per law; 0 = exhaustive")
      ->capture_default_str();
  check_axioms->add_option("--seed", opt.seed, "random seed for sampling")
      ->capture_default_str();
  add_format(check_axioms);
  add_guard(check_axioms);

  CLI::App* check_presentation = app.add_subcommand(
      "check-presentation",
      "verify generators-and-relations against an operad");
  check_presentation->add_option("--preset", opt.preset,
                                 "built-in presentation name");
  check_presentation->add_option("--from", opt.relations_file,
                                 "relations file in prefix notation");
  check_presentation->add_option(
      "--operad", opt.operad,
      "operad to compare against (defaults to the preset's own)");
  check_presentation->add_option("--max-arity", opt.max_arity,
                                 "largest arity compared (default 5)");
  add_format(check_presentation);
  add_guard(check_presentation);

  CLI::App* check_morphism = app.add_subcommand(
      "check-morphism", "compare the image of one operad inside another");
  check_morphism->add_option("--from", opt.from, "source operad")->required();
  check_morphism->add_option("--to", opt.to, "target operad")->required();
  check_morphism
      ->add_option("--map", opt.map, "letter map: identity or mod:<k>")
      ->capture_default_str();
  check_morphism->add_option("--expect", opt.expect,
                             "pass condition: equal or subset")
      ->capture_default_str();
  check_morphism->add_option("--max-arity", opt.max_arity,
                             "largest arity compared (default 5)");
  add_format(check_morphism);
  add_guard(check_morphism);

  CLI::App* bijection = app.add_subcommand(
      "bijection",
      "map words to combinatorial objects, or audit a whole arity");
  bijection->add_option("--family,--operad", opt.family, "family name")
      ->required();
  bijection->add_option("--word", opt.word, "word to map");
  bijection->add_option("--arity", opt.arity,
                        "audit injectivity and image size at this arity");
  add_format(bijection);
  add_guard(bijection);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  opt.word_given = bijection->count("--word") > 0;
  opt.arity_given = bijection->count("--arity") > 0;

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(count)) return run_count(opt);
    if (app.got_subcommand(membership)) return run_membership(opt);
    if (app.got_subcommand(check_axioms)) return run_check_axioms(opt);
    if (app.got_subcommand(check_presentation)) {
      return run_check_presentation(opt);
    }
    if (app.got_subcommand(check_morphism)) return run_check_morphism(opt);
    if (app.got_subcommand(bijection)) return run_bijection(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
