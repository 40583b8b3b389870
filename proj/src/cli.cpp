#include "fgh/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fgh/boxes.hpp"
#include "fgh/coding.hpp"
#include "fgh/glp.hpp"
#include "fgh/hierarchy.hpp"
#include "fgh/printer.hpp"
#include "fgh/proof.hpp"
#include "fgh/search.hpp"
#include "fgh/selfref.hpp"
#include "fgh/semantics.hpp"
#include "fgh/suites.hpp"

namespace fgh {

namespace {

using nlohmann::json;

json class_info(const FormulaPtr& f) {
  json j;
  j["least_class"] = to_string(classify(f));
  json ms = json::array();
  for (const auto& c : memberships(f)) ms.push_back(to_string(c));
  j["memberships"] = ms;
  return j;
}

FormulaPtr parse_or_throw(const std::string& text) { return parse_formula(text).ast; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json model_to_json(const KripkeModel& m) {
  json j;
  j["worlds"] = m.worlds;
  json edges = json::array();
  for (auto [a, b] : m.edges) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  json val = json::object();
  for (const auto& [name, ws] : m.valuation) {
    json lst = json::array();
    for (int w : ws) lst.push_back(w);
    val[name] = lst;
  }
  j["valuation"] = val;
  j["refutes_at"] = 0;
  return j;
}

json proof_report_json(const std::vector<std::string>& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back(d);
  return out;
}

uint64_t env_seed() {
  if (const char* s = std::getenv("FGH_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw EvalError("FGH_SEED is not a number");
    }
  }
  return SuiteOptions{}.seed;
}

struct Args {
  std::string formula, sigma, lower, upper, goal, theory = "toyEA";
  std::string file, modal, kind, suite, out;
  std::vector<std::string> assigns;
  std::string nat_arg;
  uint64_t fuel = 64;
  uint64_t budget = 10000;
  int level = 0;
  int oracle_level = -1;
  long samples = -1;
  uint64_t seed = 0;
  bool seed_set = false;
  std::string lock_path = "encoding.lock";
};

}  // namespace

std::string CommandResult::rendered() const {
  return pretty ? envelope.dump(2) + "\n" : envelope.dump() + "\n";
}

CommandResult dispatch(const std::vector<std::string>& argv) {
  CommandResult res;
  json payload = json::object();
  std::vector<std::string> diagnostics;

  CLI::App app{"workbench for provability fixpoints and graded provability predicates"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  Args a;

  auto* c_classify = app.add_subcommand("classify", "hierarchy class of a formula");
  c_classify->add_option("formula", a.formula)->required();

  auto* c_eval = app.add_subcommand("eval", "fuel-bounded evaluation of a sentence");
  c_eval->add_option("formula", a.formula)->required();
  c_eval->add_option("--fuel", a.fuel);

  auto* c_encode = app.add_subcommand("encode", "Goedel code of a formula or term");
  c_encode->add_option("formula", a.formula)->required();

  auto* c_decode = app.add_subcommand("decode", "decode a Goedel code");
  c_decode->add_option("nat", a.nat_arg)->required()->check([](const std::string& s) {
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::string("not a number");
    return std::string();
  });

  auto* c_rosser = app.add_subcommand("rosser", "Rosser sentence of a theory");
  c_rosser->add_option("--theory", a.theory);

  auto* c_fgh = app.add_subcommand("fgh-fixpoint", "FGH fixpoint for a sigma sentence");
  c_fgh->add_option("--sigma", a.sigma)->required();
  c_fgh->add_option("--level", a.level);
  c_fgh->add_option("--theory", a.theory);

  auto* c_dual = app.add_subcommand("dual", "dual fixpoints");
  c_dual->add_option("kind", a.kind)->required()->check(CLI::IsMember({"leq", "notless"}));
  c_dual->add_option("--sigma", a.sigma)->required();
  c_dual->add_option("--theory", a.theory);

  auto* c_dense = app.add_subcommand("dense", "a sentence strictly between two others");
  c_dense->add_option("--lower", a.lower)->required();
  c_dense->add_option("--upper", a.upper)->required();
  c_dense->add_option("--theory", a.theory);

  auto* c_check = app.add_subcommand("check-proof", "check a JSON-lines proof file");
  c_check->add_option("file", a.file)->required();
  c_check->add_option("--theory", a.theory);
  c_check->add_option("--oracle-level", a.oracle_level);
  c_check->add_option("--fuel", a.fuel);

  auto* c_search = app.add_subcommand("search", "bounded proof search");
  c_search->add_option("--goal", a.goal)->required();
  c_search->add_option("--budget", a.budget);
  c_search->add_option("--theory", a.theory);
  c_search->add_option("--oracle-level", a.oracle_level);
  c_search->add_option("--out", a.out);

  auto* c_pred = app.add_subcommand("predicate", "provability predicate formulas");
  c_pred->add_option("kind", a.kind)
      ->required()
      ->check(CLI::IsMember({"box", "oracle-box", "boxbox", "boxbox-old", "omega-box"}));
  c_pred->add_option("--level", a.level);
  c_pred->add_option("--theory", a.theory);

  auto* c_gl = app.add_subcommand("gl", "GL decision procedure");
  auto* c_gl_decide = c_gl->add_subcommand("decide", "decide a single-level formula");
  c_gl_decide->add_option("formula", a.modal)->required();

  auto* c_glp = app.add_subcommand("glp", "polymodal proofs and realizations");
  auto* c_glp_check = c_glp->add_subcommand("check", "check a modal proof file");
  c_glp_check->add_option("file", a.file)->required();
  auto* c_glp_realize = c_glp->add_subcommand("realize", "arithmetical realization");
  c_glp_realize->add_option("formula", a.modal)->required();
  c_glp_realize->add_option("--theory", a.theory);
  c_glp_realize->add_option("--assign", a.assigns, "atom=<formula>, repeatable");

  auto* c_suite = app.add_subcommand("suite", "run a bundled property suite");
  c_suite->add_option("name", a.suite)->required();
  c_suite->add_option("--seed", a.seed)->each([&](const std::string&) { a.seed_set = true; });
  c_suite->add_option("--samples", a.samples);
  c_suite->add_option("--lock", a.lock_path);

  std::vector<char*> cargv;
  std::vector<std::string> storage;
  storage.push_back("fgh");
  for (const auto& s : argv) storage.push_back(s);
  for (auto& s : storage) cargv.push_back(s.data());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    res.exit_code = 0;
    res.envelope = {{"status", "ok"}, {"payload", {{"help", app.help()}}},
                    {"diagnostics", json::array()}};
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.envelope = {{"status", "error"},
                    {"payload", {{"usage_error", e.what()}}},
                    {"diagnostics", json::array({std::string(e.what())})}};
    return res;
  }
  res.pretty = pretty;

  const TheoryRegistry& reg = TheoryRegistry::builtin();
  try {
    if (*c_classify) {
      ParseResult pr = parse_formula(a.formula);
      payload = class_info(pr.ast);
      diagnostics = pr.warnings;
    } else if (*c_eval) {
      ParseResult pr = parse_formula(a.formula);
      Verdict v = eval_with_fuel(pr.ast, a.fuel, reg);
      payload["verdict"] = to_string(v.value);
      payload["fuel_used"] = v.fuel_used;
      diagnostics = pr.warnings;
    } else if (*c_encode) {
      try {
        payload["code"] = encode(parse_or_throw(a.formula)).str();
        payload["sort"] = "formula";
      } catch (const ParseError&) {
        payload["code"] = encode(parse_term(a.formula)).str();
        payload["sort"] = "term";
      }
    } else if (*c_decode) {
      Nat g(a.nat_arg);
      try {
        payload["formula"] = render(decode_formula(g));
        payload["sort"] = "formula";
      } catch (const DecodeError&) {
        payload["term"] = render(decode_term(g));
        payload["sort"] = "term";
      }
    } else if (*c_rosser) {
      FormulaPtr rho = rosser_sentence(reg.resolve(a.theory));
      payload["formula"] = render(rho);
      payload["class"] = class_info(rho);
    } else if (*c_fgh) {
      TheorySpec t = reg.resolve(a.theory);
      BoxMaker box = a.level == 0 ? BoxMaker::plain(t) : BoxMaker::oracle(t, a.level);
      FormulaPtr sigma = parse_or_throw(a.sigma);
      FormulaPtr rho = fgh_fixpoint(sigma, box);
      payload["formula"] = render(rho);
      payload["class"] = class_info(rho);
      payload["sigma_class"] = class_info(sigma);
    } else if (*c_dual) {
      TheorySpec t = reg.resolve(a.theory);
      FormulaPtr sigma = parse_or_throw(a.sigma);
      FormulaPtr rho = a.kind == "leq" ? dual_fixpoint_leq(sigma, t)
                                       : dual_fixpoint_not_less(sigma, t);
      payload["formula"] = render(rho);
      payload["class"] = class_info(rho);
    } else if (*c_dense) {
      TheorySpec t = reg.resolve(a.theory);
      FormulaPtr mid =
          dense_between(parse_or_throw(a.lower), parse_or_throw(a.upper), t, reg);
      payload["formula"] = render(mid);
      payload["class"] = class_info(mid);
    } else if (*c_check) {
      TheorySpec t = reg.resolve(a.theory);
      Proof p = proof_from_jsonl(read_input(a.file));
      if (a.oracle_level < 0) {
        CheckReport rep = check_proof(t, p, reg);
        payload["ok"] = rep.ok;
        payload["status"] = rep.ok ? "True" : "False";
        payload["diagnostics"] = proof_report_json(rep.diagnostics);
        if (!rep.ok) res.exit_code = 1;
      } else {
        OracleCheckReport rep = check_oracle_proof(t, a.oracle_level, p, a.fuel, reg);
        payload["status"] = to_string(rep.status);
        payload["diagnostics"] = proof_report_json(rep.diagnostics);
        if (rep.status == Truth::False) res.exit_code = 1;
      }
      if (p.conclusion()) payload["conclusion"] = render(p.conclusion());
    } else if (*c_search) {
      TheorySpec t = reg.resolve(a.theory);
      auto found =
          bounded_search(t, parse_or_throw(a.goal), a.budget, reg, a.oracle_level, a.fuel);
      payload["found"] = found.has_value();
      if (found) {
        std::string jsonl = proof_to_jsonl(*found);
        payload["lines"] = found->lines.size();
        if (!a.out.empty()) {
          std::ofstream os(a.out);
          os << jsonl;
          payload["written_to"] = a.out;
        } else {
          payload["proof_jsonl"] = jsonl;
        }
      } else {
        res.exit_code = 1;
        diagnostics.push_back("NotFound within budget " + std::to_string(a.budget));
      }
    } else if (*c_pred) {
      TheorySpec t = reg.resolve(a.theory);
      FormulaPtr f;
      if (a.kind == "box") f = box_formula(t);
      else if (a.kind == "oracle-box") f = oracle_box_formula(t, a.level);
      else if (a.kind == "boxbox") f = boxbox_formula(t, a.level);
      else if (a.kind == "boxbox-old") f = boxbox_old_formula(t, a.level);
      else f = omega_box_formula(t, a.level);
      payload["formula"] = render(f);
      payload["class"] = class_info(f);
    } else if (*c_gl_decide) {
      GLDecision d = gl_decide(parse_modal(a.modal));
      payload["valid"] = d.valid;
      if (!d.valid) payload["countermodel"] = model_to_json(*d.countermodel);
    } else if (*c_glp_check) {
      ModalProof p = modal_proof_from_jsonl(read_input(a.file));
      ModalCheckReport rep = glp_check_proof(p);
      payload["ok"] = rep.ok;
      payload["diagnostics"] = proof_report_json(rep.diagnostics);
      if (p.conclusion()) payload["conclusion"] = render_modal(p.conclusion());
      if (!rep.ok) res.exit_code = 1;
    } else if (*c_glp_realize) {
      TheorySpec t = reg.resolve(a.theory);
      std::map<std::string, FormulaPtr> assignment;
      for (const auto& kv : a.assigns) {
        size_t eq_pos = kv.find('=');
        if (eq_pos == std::string::npos)
          throw EvalError("--assign expects atom=<formula>: " + kv);
        assignment[kv.substr(0, eq_pos)] = parse_or_throw(kv.substr(eq_pos + 1));
      }
      FormulaPtr f = realize(parse_modal(a.modal), t, assignment);
      payload["formula"] = render(f);
      payload["class"] = class_info(f);
    } else if (*c_suite) {
      if (!is_suite_name(a.suite)) throw EvalError("unknown suite: " + a.suite);
      SuiteOptions so;
      so.seed = a.seed_set ? a.seed : env_seed();
      so.samples = a.samples;
      so.lock_path = a.lock_path;
      SuiteResult sr = run_suite(a.suite, so);
      payload["suite"] = sr.name;
      payload["pass"] = sr.pass;
      payload["samples"] = sr.samples;
      payload["certified"] = sr.certified;
      payload["failures"] = sr.failures;
      payload["detail"] = sr.detail;
      payload["elapsed_s"] = sr.elapsed_s;
      if (!sr.pass) res.exit_code = 1;
    }
  } catch (const ParseError& e) {
    res.exit_code = 1;
    res.envelope = {{"status", "error"},
                    {"payload", {{"error", e.what()}, {"offset", e.offset}}},
                    {"diagnostics", json::array({std::string(e.what())})}};
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.envelope = {{"status", "error"},
                    {"payload", {{"error", e.what()}}},
                    {"diagnostics", json::array({std::string(e.what())})}};
    return res;
  }

  res.envelope = {{"status", res.exit_code == 0 ? "ok" : "error"},
                  {"payload", payload},
                  {"diagnostics", diagnostics}};
  return res;
}

}  // namespace fgh
