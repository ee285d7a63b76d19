#include "bracekit/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>

#include "bracekit/cli/expr.hpp"
#include "bracekit/structure.hpp"

namespace bracekit::cli {

namespace {

json labels_of(const FiniteGroup& g, std::span<const Elem> elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(g.label(e));
  return out;
}

json subgroup_json(const Subgroup& s) {
  return json{{"order", s.order()}, {"elements", labels_of(s.parent(), s.elements())}};
}

using Namer = std::function<std::string(Elem)>;

Namer namer(const FiniteGroup& g) {
  return [&g](Elem a) { return g.label(a); };
}

Namer namer(const SetSolution& s) {
  return [&s](Elem a) {
    return a < s.labels.size() ? s.labels[a] : std::to_string(a);
  };
}

template <std::size_t K>
json witness(const Namer& name, const std::optional<std::array<Elem, K>>& w) {
  if (!w) return nullptr;
  json labels = json::array();
  for (Elem e : *w) labels.push_back(name(e));
  return json{{"indices", std::vector<Elem>(w->begin(), w->end())},
              {"labels", labels}};
}

json brace_verification_json(const Brace& b, const BraceReport& r) {
  Namer g = namer(b.multiplicative());
  json j{{"additive_group", r.additive_group},
         {"multiplicative_group", r.multiplicative_group},
         {"same_identity", r.same_identity},
         {"additive_commutative", r.additive_commutative},
         {"left_axiom", r.left_axiom},
         {"skew_axiom", r.skew_axiom},
         {"two_sided", r.two_sided},
         {"is_left_brace", r.is_left_brace()},
         {"is_skew_brace", r.is_skew_brace()}};
  if (!r.additive_failure.empty()) j["additive_failure"] = r.additive_failure;
  if (!r.multiplicative_failure.empty())
    j["multiplicative_failure"] = r.multiplicative_failure;
  if (r.same_identity) {
    j["commutativity_witness"] = witness(g, r.commutativity_witness);
    j["left_witness"] = witness(g, r.left_witness);
    j["skew_witness"] = witness(g, r.skew_witness);
    j["two_sided_witness"] = witness(g, r.two_sided_witness);
  }
  return j;
}

json ybe_json(const SetSolution& s, const YbeReport& r) {
  Namer names = namer(s);
  json j{{"braid", r.braid},
         {"involutive", r.involutive},
         {"nondegenerate", r.nondegenerate},
         {"braid_witness", witness(names, r.braid_witness)},
         {"involutive_witness", witness(names, r.involutive_witness)}};
  if (!r.nondegenerate_failure.empty())
    j["nondegenerate_failure"] = r.nondegenerate_failure;
  return j;
}

json permutation_group_json(const SetSolution& s) {
  try {
    PermutationGroupReport p = permutation_group(s);
    return json{{"order", p.order},
                {"solvable", p.solvable},
                {"derived_series_orders", p.derived_series_orders}};
  } catch (const PreconditionError& e) {
    return json{{"error", e.what()}};
  }
}

json decomposition_json(const Decomposition& d) {
  json n = json::array(), m = json::array(), h = json::array();
  for (const Subgroup& s : d.N) n.push_back(subgroup_json(s));
  for (const Subgroup& s : d.M) m.push_back(subgroup_json(s));
  for (const Subgroup& s : d.H) h.push_back(subgroup_json(s));
  return json{{"k", d.k}, {"N", n}, {"M", m}, {"H", h}};
}

json decomposition_report_json(const DecompositionReport& r) {
  return json{{"chain", r.chain},
              {"products", r.products},
              {"factors", r.factors},
              {"normal_factors", r.normal_factors},
              {"central_layers", r.central_layers},
              {"ok", r.ok()},
              {"failures", r.failures}};
}

json analyze(const FiniteGroup& g) {
  Subgroup all = whole(g);
  json j{{"order", g.order()},
         {"abelian", is_abelian(g)},
         {"solvable", is_solvable(g)},
         {"nilpotent", is_nilpotent(g)}};
  auto cls = nilpotency_class(g);
  j["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
  j["center"] = subgroup_json(center(g));
  j["derived_subgroup"] = subgroup_json(derived_subgroup(all));
  json sylow = json::array();
  for (const SylowInfo& s : sylow_summary(g)) {
    sylow.push_back(json{{"prime", s.prime},
                         {"order", s.subgroup.order()},
                         {"nilpotency_class", s.nilpotency_class
                                                  ? json(*s.nilpotency_class)
                                                  : json(nullptr)},
                         {"normal", s.normal},
                         {"abelian", s.abelian}});
  }
  j["sylow"] = sylow;
  if (is_solvable(g)) {
    j["fitting"] = subgroup_json(fitting_subgroup(g));
    auto tower = sylow_tower(g);
    json t{{"exists", bool(tower)}};
    if (tower) {
      json orders = json::array();
      for (const Subgroup& s : tower->series) orders.push_back(s.order());
      t["primes"] = tower->primes;
      t["orders"] = orders;
    }
    j["sylow_tower"] = t;
  }
  return j;
}

Brace brace_for_solution(const json& input, const Options& opts,
                         json& report) {
  if (document_type(input) == "brace") {
    Brace b = brace_from_json(input, opts.max_order);
    report["fingerprint"] = fingerprint(b.order(), b.multiplicative().table());
    return certify(std::move(b));
  }
  FiniteGroup g = resolve(input, opts.max_order);
  report["fingerprint"] = fingerprint(g.order(), g.table());
  report["construction"] = opts.construction;
  return build_brace(g, opts.construction, opts.seed);
}

void run_build(const json& input, const Options& opts, json& report) {
  FiniteGroup g = resolve(input, opts.max_order);
  report["fingerprint"] = fingerprint(g.order(), g.table());
  report["construction"] = opts.construction;
  Brace b = build_brace(g, opts.construction, opts.seed);
  BraceReport v = verify_brace(b);
  report["brace"] = brace_to_json(b);
  report["verification"] = brace_verification_json(b, v);
  report["additive_abelian"] = is_abelian(b.additive());
  report["additive_nilpotent"] = is_nilpotent(b.additive());
  if (b.kind() == BraceKind::left) report["socle_order"] = socle(b).order();
  if (opts.construction.rfind("main", 0) == 0) {
    Decomposition d = decompose(g, opts.seed);
    json summary = json::array();
    for (const Subgroup& n : d.N) summary.push_back(n.order());
    report["decomposition"] = json{{"k", d.k}, {"factor_orders", summary}};
  }
  if (g.order() <= opts.guard_aut &&
      (opts.construction == "class2" || opts.construction == "trivial")) {
    AutPreservationReport a = check_aut_preservation(g, b, opts.guard_aut);
    json aj{{"automorphisms", a.automorphisms},
            {"preserving", a.preserving},
            {"all_preserve", a.all_preserve()}};
    if (a.witness_pair) aj["witness_pair"] = witness(namer(g), a.witness_pair);
    report["automorphism_check"] = aj;
  }
  json evals = json::array();
  for (const std::string& e : opts.evals) {
    Elem v = evaluate(b, e);
    evals.push_back(json{{"expr", e}, {"index", v}, {"value", b.label(v)}});
  }
  if (!evals.empty()) report["evaluations"] = evals;
  if (!v.holds(b.kind()))
    throw VerificationError("constructed brace fails its axioms");
}

void run_ybe(const json& input, const Options& opts, json& report) {
  SetSolution s;
  if (document_type(input) == "solution") {
    s = solution_from_json(input, opts.max_order);
    report["fingerprint"] = fingerprint(s.size, s.sigma);
  } else {
    Brace b = brace_for_solution(input, opts, report);
    s = b.kind() == BraceKind::left ? solution_from_left_brace(b)
                                    : solution_from_skew_brace(b);
    report["brace_kind"] = to_string(b.kind());
  }
  YbeReport r = check_ybe(s);
  report["solution"] = solution_to_json(s);
  report["check"] = ybe_json(s, r);
  report["permutation_group"] = permutation_group_json(s);
  if (!r.braid || !r.nondegenerate)
    throw VerificationError("solution fails the braid relation or non-degeneracy");
}

void run_verify(const json& input, const Options& opts, json& report) {
  const std::string type = document_type(input);
  report["document"] = type;
  if (type == "brace") {
    Brace b = brace_from_json(input, opts.max_order);
    report["fingerprint"] = fingerprint(b.order(), b.multiplicative().table());
    report["kind"] = to_string(b.kind());
    BraceReport v = verify_brace(b);
    report["verification"] = brace_verification_json(b, v);
    if (!v.holds(b.kind()))
      throw VerificationError("document fails the " + to_string(b.kind()) +
                              " brace axioms");
  } else if (type == "solution") {
    SetSolution s = solution_from_json(input, opts.max_order);
    report["fingerprint"] = fingerprint(s.size, s.sigma);
    YbeReport r = check_ybe(s);
    report["check"] = ybe_json(s, r);
    if (!r.braid || !r.nondegenerate)
      throw VerificationError("solution fails the braid relation or non-degeneracy");
  } else {
    FiniteGroup g = resolve(input, opts.max_order);
    report["fingerprint"] = fingerprint(g.order(), g.table());
    report["order"] = g.order();
  }
}

void run_search(const json& input, const Options& opts, json& report) {
  FiniteGroup g = resolve(input, opts.max_order);
  report["fingerprint"] = fingerprint(g.order(), g.table());
  std::vector<Brace> found = search_left_braces(g, opts.guard_search);
  std::vector<std::size_t> classes = brace_isomorphism_classes(found);
  json list = json::array();
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Brace& b = found[i];
    bool trivial = std::equal(b.additive().table().begin(), b.additive().table().end(),
                              g.table().begin());
    list.push_back(json{{"add", std::vector<Elem>(b.additive().table().begin(),
                                                  b.additive().table().end())},
                        {"trivial", trivial},
                        {"class", classes[i]}});
  }
  report["count"] = found.size();
  report["isomorphism_classes"] =
      classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  report["braces"] = list;
}

}  // namespace

json load_input(const std::string& arg) {
  auto parse = [&](std::istream& in) {
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw InputError("cannot parse '" + arg + "' as JSON: " + e.what());
    }
  };
  if (arg == "-") return parse(std::cin);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    if (!f) throw InputError("cannot open '" + arg + "'");
    return parse(f);
  }
  return json(arg);
}

Brace build_brace(const FiniteGroup& g, const std::string& c, std::uint64_t seed) {
  if (c == "trivial") return trivial_brace(g);
  if (c == "trivial-skew") return trivial_skew_brace(g);
  if (c == "class2") return class2_brace(g);
  if (c == "tower") return tower_brace(g, seed);
  if (c == "tower-skew") return tower_skew_brace(g, seed);
  if (c == "main" || c == "main-even" || c == "main-skew") {
    require_class_two_sylows(g);
    // Parity is checked before the (more expensive) decomposition.
    if (c == "main-even" && g.order() % 2)
      throw PreconditionError("main_even_brace: group has odd order");
    if (c != "main-skew" && g.order() % 2 == 0 &&
        !is_abelian(sylow_subgroup(whole(g), 2)))
      throw PreconditionError(
          "main_brace: Sylow 2-subgroup is non-abelian (requires odd order or "
          "abelian Sylow 2-subgroups)");
    Decomposition d = decompose(g, seed);
    if (c == "main") return main_brace(g, d);
    if (c == "main-even") return main_even_brace(g, d);
    return main_skew_brace(g, d);
  }
  throw InputError("unknown construction '" + c + "'");
}

namespace {

// A report emitted by build or ybe stands for the document it carries.
const json& unwrap_report(const json& input) {
  if (!input.is_object() || !input.contains("command")) return input;
  if (input.contains("solution")) return input.at("solution");
  if (input.contains("brace")) return input.at("brace");
  throw InputError("report carries no brace or solution document");
}

}  // namespace

Outcome run(const std::string& command, const json& raw_input, const Options& opts) {
  Outcome out;
  json& report = out.report;
  report["command"] = command;
  report["seed"] = opts.seed;
  auto start = std::chrono::steady_clock::now();
  try {
    const json& input = unwrap_report(raw_input);
    if (command == "analyze") {
      FiniteGroup g = resolve(input, opts.max_order);
      report["fingerprint"] = fingerprint(g.order(), g.table());
      report["analysis"] = analyze(g);
    } else if (command == "decompose") {
      FiniteGroup g = resolve(input, opts.max_order);
      report["fingerprint"] = fingerprint(g.order(), g.table());
      Decomposition d = decompose(g, opts.seed);
      DecompositionReport r = verify_decomposition(d);
      report["decomposition"] = decomposition_json(d);
      report["verification"] = decomposition_report_json(r);
      if (!r.ok()) throw VerificationError("decomposition fails verification");
    } else if (command == "build") {
      run_build(input, opts, report);
    } else if (command == "ybe") {
      run_ybe(input, opts, report);
    } else if (command == "search") {
      run_search(input, opts, report);
    } else if (command == "verify") {
      run_verify(input, opts, report);
    } else {
      throw InputError("unknown command '" + command + "'");
    }
    report["status"] = "ok";
  } catch (const InputError& e) {
    report["status"] = "input_error";
    report["error"] = e.what();
    out.exit_code = kInput;
  } catch (const PreconditionError& e) {
    report["status"] = "precondition_failed";
    report["error"] = e.what();
    out.exit_code = kPrecondition;
  } catch (const VerificationError& e) {
    report["status"] = "verification_failed";
    report["error"] = e.what();
    out.exit_code = kVerification;
  } catch (const json::exception& e) {
    report["status"] = "input_error";
    report["error"] = std::string("malformed document: ") + e.what();
    out.exit_code = kInput;
  } catch (const std::exception& e) {
    report["status"] = "verification_failed";
    report["error"] = std::string("internal error: ") + e.what();
    out.exit_code = kVerification;
  }
  if (opts.timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return out;
}

}  // namespace bracekit::cli
