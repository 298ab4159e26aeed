// Command line front end for the topoadv library: enumeration, subdivision,
// geometrization, conditions, the decision procedure, and mesh export.
//
// Exit codes: 0 success (decide: solvable), 1 decide: unsolvable, 2 budget
// exhausted, 64 usage error, 65 malformed input, 70 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topoadv/errors.hpp"
#include "topoadv/io.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using namespace topoadv;

std::uint64_t env_budget(std::uint64_t fallback) {
  const char* raw = std::getenv("TOPOADV_BUDGET");
  if (!raw) return fallback;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw UsageError("TOPOADV_BUDGET must be an unsigned integer");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Task specifier: "kset:<v1,v2,...>:k=<int>" or "file:<path>".
struct TaskSpec {
  ColorlessTask task;
  std::vector<std::string> values;  // empty for file tasks without kset form
  int k = 0;
};

TaskSpec parse_task(const std::string& spec) {
  TaskSpec out;
  if (spec.rfind("file:", 0) == 0) {
    const Json j = parse_json_file(spec.substr(5));
    out.task = task_from_json(j);
    if (j.is_object() && j.contains("kind") && j.at("kind") == "kset") {
      for (const auto& v : j.at("values")) out.values.push_back(v.get<std::string>());
      out.k = j.at("k").get<int>();
    }
    return out;
  }
  if (spec.rfind("kset:", 0) == 0) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3 || parts[2].rfind("k=", 0) != 0)
      throw UsageError("task shorthand is kset:<values>:k=<int>");
    out.values = split(parts[1], ',');
    try {
      out.k = std::stoi(parts[2].substr(2));
    } catch (const std::exception&) {
      throw UsageError("task shorthand needs an integer k");
    }
    out.task = make_kset(out.values, out.k);
    return out;
  }
  throw UsageError("unknown task specifier: " + spec);
}

// Condition specifier: "c1", "c2", "full" (with --n/--t/--k/--values), or
// "file:<path>".
Condition parse_condition(const std::string& spec, std::optional<int> n,
                          std::optional<int> t, int k,
                          const std::vector<std::string>& values) {
  if (spec.rfind("file:", 0) == 0)
    return condition_from_json(parse_json_file(spec.substr(5)));
  if (!n || !t) throw UsageError("condition shorthand '" + spec + "' needs --n and --t");
  if (values.empty())
    throw UsageError("condition shorthand '" + spec + "' needs a value table");
  if (spec == "c1") return condition_c1(*n, *t, k, values);
  if (spec == "c2") return condition_c2(*n, *t, k, values);
  if (spec == "full") return full_condition(*n, *t, values);
  throw UsageError("unknown condition specifier: " + spec);
}

Subdivision load_stage(const std::string& input, int base) {
  if (!input.empty() && base >= 0)
    throw UsageError("choose either --input or --base, not both");
  if (!input.empty()) return identity_stage(complex_from_json(parse_json_file(input)));
  if (base >= 0) return identity_stage(standard_chromatic_simplex(base));
  throw UsageError("one of --input or --base is required");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorial topology for round-based computability"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Output file (default: stdout)")->capture_default_str();

  // ims enum
  auto* ims = app.add_subcommand("ims", "Instant graph utilities");
  ims->require_subcommand(1);
  auto* ims_enum = ims->add_subcommand("enum", "Enumerate all instant graphs");
  int ims_n = 1;
  ims_enum->add_option("--n", ims_n, "Largest process id (participants 0..n)")->required();

  // chr subdivide
  auto* chr_cmd = app.add_subcommand("chr", "Chromatic subdivision");
  chr_cmd->require_subcommand(1);
  auto* chr_sub = chr_cmd->add_subcommand("subdivide", "Iterate the subdivision");
  std::string chr_input;
  int chr_base = -1, chr_rounds = 1;
  std::uint64_t facet_budget = 0;
  chr_sub->add_option("--input", chr_input, "Chromatic complex JSON file");
  chr_sub->add_option("--base", chr_base, "Standard chromatic simplex dimension");
  chr_sub->add_option("--rounds", chr_rounds, "Number of rounds (0 = unchanged)");
  chr_sub->add_option("--budget", facet_budget, "Facet budget override");
  std::vector<int> chr_frozen;
  chr_sub->add_option("--frozen", chr_frozen, "Terminated vertex ids (uses echr)");

  // geo prefix|limit|retract
  auto* geo = app.add_subcommand("geo", "Geometrization");
  geo->require_subcommand(1);
  auto* geo_prefix_cmd = geo->add_subcommand("prefix", "Run the averaging prefix");
  std::string geo_word;
  int geo_rounds = -1;
  geo_prefix_cmd->add_option("--word", geo_word, "Word or prefix JSON file")->required();
  geo_prefix_cmd->add_option("--rounds", geo_rounds,
                             "Letters to apply (default: the whole head)");
  auto* geo_limit_cmd = geo->add_subcommand("limit", "Limit point of a word");
  std::string limit_word, limit_eps = "1/1000000";
  geo_limit_cmd->add_option("--word", limit_word, "UP word JSON file")->required();
  geo_limit_cmd->add_option("--eps", limit_eps, "Rational diameter bound");
  auto* geo_retract_cmd = geo->add_subcommand("retract", "Chain retraction");
  std::string retract_point, retract_chain;
  geo_retract_cmd->add_option("--point", retract_point, "Point JSON file")->required();
  geo_retract_cmd
      ->add_option("--chain", retract_chain, "JSON array of simplices, smallest first")
      ->required();

  // task kset
  auto* task_cmd = app.add_subcommand("task", "Task builders");
  task_cmd->require_subcommand(1);
  auto* task_kset = task_cmd->add_subcommand("kset", "k-set agreement");
  std::string kset_values;
  int kset_k = 1;
  task_kset->add_option("--values", kset_values, "Comma-separated values")->required();
  task_kset->add_option("--k", kset_k, "Agreement bound")->required();

  // condition c1|c2|full|file
  auto* cond_cmd = app.add_subcommand("condition", "Condition builders");
  cond_cmd->require_subcommand(1);
  int cond_n = 0, cond_t = 0, cond_k = 1;
  std::string cond_values = "0,1", cond_path;
  for (const char* name : {"c1", "c2", "full"}) {
    auto* sub = cond_cmd->add_subcommand(name);
    sub->add_option("--n", cond_n, "Largest process id")->required();
    sub->add_option("--t", cond_t, "Resilience")->required();
    if (std::string(name) != "full")
      sub->add_option("--k", cond_k, "Agreement bound")->required();
    sub->add_option("--values", cond_values, "Comma-separated value table");
  }
  auto* cond_file = cond_cmd->add_subcommand("file", "Validate and re-emit");
  cond_file->add_option("--path", cond_path, "Condition JSON file")->required();

  // build-u
  auto* build_cmd = app.add_subcommand("build-u", "Condition complex");
  std::string bu_condition, bu_input, bu_values = "0,1";
  std::optional<int> bu_n, bu_t;
  int bu_k = 1, bu_skel = -1;
  build_cmd->add_option("--condition", bu_condition,
                        "c1|c2|full|file:<path> (colored form)");
  build_cmd->add_option("--input", bu_input, "Complex JSON file (colorless form)");
  build_cmd->add_option("--n", bu_n, "Largest process id (shorthand conditions)");
  build_cmd->add_option("--t", bu_t, "Resilience");
  build_cmd->add_option("--k", bu_k, "Agreement bound for c1/c2");
  build_cmd->add_option("--values", bu_values, "Value table for shorthand conditions");
  build_cmd->add_option("--skel", bu_skel, "Keep only chains of length <= skel+1 (kin)");

  // decide / maximal
  auto* decide_cmd = app.add_subcommand("decide", "Decide solvability on U");
  auto* maximal_cmd = app.add_subcommand("maximal", "Maximality of a condition");
  std::string dm_task, dm_condition;
  std::optional<int> dm_n, dm_t;
  std::uint64_t search_budget = 0;
  for (auto* cmd : {decide_cmd, maximal_cmd}) {
    cmd->add_option("--task", dm_task, "kset:<values>:k=<int> or file:<path>")
        ->required();
    cmd->add_option("--condition", dm_condition, "c1|c2|full|file:<path>")->required();
    cmd->add_option("--n", dm_n, "Largest process id (shorthand conditions)");
    cmd->add_option("--t", dm_t, "Resilience (shorthand conditions)");
    cmd->add_option("--budget", search_budget, "Search node budget override");
  }

  // export
  auto* export_cmd = app.add_subcommand("export", "Geometry export");
  std::string exp_input, exp_format = "obj";
  int exp_base = -1, exp_rounds = 1;
  export_cmd->add_option("--input", exp_input, "Subdivision or complex JSON file");
  export_cmd->add_option("--base", exp_base, "Standard chromatic simplex dimension");
  export_cmd->add_option("--rounds", exp_rounds, "Rounds when building from --base");
  export_cmd->add_option("--format", exp_format, "obj or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (ims_enum->parsed()) {
    if (ims_n < 0) throw UsageError("--n must be nonnegative");
    std::vector<int> participants;
    for (int p = 0; p <= ims_n; ++p) participants.push_back(p);
    const auto graphs = enumerate_ims(participants);
    Json out;
    out["count"] = graphs.size();
    Json arr = Json::array();
    for (const auto& g : graphs) arr.push_back(graph_to_json(g));
    out["graphs"] = std::move(arr);
    emit(to_pretty_string(out), out_path);
    return 0;
  }

  if (chr_sub->parsed()) {
    if (chr_rounds < 0) throw UsageError("--rounds must be nonnegative");
    const std::uint64_t budget =
        facet_budget > 0 ? facet_budget : env_budget(kDefaultFacetBudget);
    Subdivision stage = load_stage(chr_input, chr_base);
    const std::set<VertexId> frozen(chr_frozen.begin(), chr_frozen.end());
    for (int r = 0; r < chr_rounds; ++r)
      stage = frozen.empty() ? chr(stage, budget) : echr(frozen, stage, budget);
    emit(to_pretty_string(subdivision_to_json(stage)), out_path);
    return 0;
  }

  if (geo_prefix_cmd->parsed()) {
    const Json j = parse_json_file(geo_word);
    std::vector<InstantGraph> prefix;
    if (j.is_object() && j.contains("prefix")) {
      for (const auto& g : j.at("prefix")) prefix.push_back(graph_from_json(g));
    } else {
      const UPWord w = word_from_json(j);
      const int rounds = geo_rounds >= 0 ? geo_rounds : static_cast<int>(w.head.size());
      for (int r = 1; r <= rounds; ++r) prefix.push_back(w.letter(r));
    }
    if (prefix.empty()) throw InvalidInput("empty prefix");
    const GeoSimplex result =
        geo_prefix(prefix, unit_geo_simplex(prefix.front().participants));
    Json out = Json::object();
    for (const auto& [p, pt] : result) out[std::to_string(p)] = point_to_json(pt);
    emit(to_pretty_string(out), out_path);
    return 0;
  }

  if (geo_limit_cmd->parsed()) {
    const UPWord w = word_from_json(parse_json_file(limit_word));
    const GeoLimit lim = geo_limit(w, rat_from_string(limit_eps));
    Json out;
    out["center"] = point_to_json(lim.center);
    out["radius"] = rat_to_string(lim.radius);
    out["rounds"] = lim.rounds;
    emit(to_pretty_string(out), out_path);
    return 0;
  }

  if (geo_retract_cmd->parsed()) {
    const BaryPoint p = point_from_json(parse_json_file(retract_point));
    Json jchain;
    try {
      jchain = Json::parse(retract_chain);
    } catch (const Json::parse_error&) {
      throw UsageError("--chain must be a JSON array of simplices");
    }
    std::vector<Simplex> chain;
    for (const auto& js : jchain) {
      Simplex s;
      for (const auto& v : js) s.push_back(v.get<VertexId>());
      chain.push_back(normalized(s));
    }
    emit(to_pretty_string(point_to_json(chain_retract(p, chain))), out_path);
    return 0;
  }

  if (task_kset->parsed()) {
    const auto values = split(kset_values, ',');
    make_kset(values, kset_k);  // validates
    emit(to_pretty_string(task_to_json_kset(values, kset_k)), out_path);
    return 0;
  }

  if (cond_cmd->parsed()) {
    Condition c;
    if (cond_file->parsed()) {
      c = condition_from_json(parse_json_file(cond_path));
    } else {
      const std::string which = cond_cmd->get_subcommands().front()->get_name();
      c = parse_condition(which, cond_n, cond_t, cond_k, split(cond_values, ','));
    }
    emit(to_pretty_string(condition_to_json(c)), out_path);
    return 0;
  }

  if (build_cmd->parsed()) {
    UComplex u;
    if (!bu_condition.empty() && !bu_input.empty())
      throw UsageError("choose either --condition or --input, not both");
    if (!bu_condition.empty()) {
      u = build_u(parse_condition(bu_condition, bu_n, bu_t, bu_k, split(bu_values, ',')));
    } else if (!bu_input.empty()) {
      if (!bu_t) throw UsageError("--input needs --t");
      u = build_u(complex_from_json(parse_json_file(bu_input)), *bu_t);
    } else {
      throw UsageError("one of --condition or --input is required");
    }
    if (bu_skel >= 0) u.cpx = skeleton(u.cpx, bu_skel);
    emit(to_pretty_string(ucomplex_to_json(u)), out_path);
    return 0;
  }

  if (decide_cmd->parsed() || maximal_cmd->parsed()) {
    const TaskSpec ts = parse_task(dm_task);
    const Condition c = parse_condition(dm_condition, dm_n, dm_t, ts.k, ts.values);
    const ColorlessTask task = nonexpanding(ts.task);
    const std::uint64_t budget =
        search_budget > 0 ? search_budget : env_budget(kDefaultSearchBudget);
    if (decide_cmd->parsed()) {
      const DecideResult r = decide(task, build_u(c), budget);
      emit(to_pretty_string(decide_to_json(r)), out_path);
      switch (r.status) {
        case DecideStatus::Solvable:
          return 0;
        case DecideStatus::Unsolvable:
          return 1;
        case DecideStatus::Budget:
          return 2;
      }
    }
    const MaximalityResult r = is_maximal(task, c, budget);
    Json out;
    out["maximal"] = r.maximal;
    if (r.counterexample) {
      Json ce = Json::array();
      for (const auto& [p, v] : *r.counterexample) {
        Json pv;
        pv["proc"] = p;
        pv["value"] = c.values[v];
        ce.push_back(std::move(pv));
      }
      out["counterexample"] = std::move(ce);
    }
    out["budget_exceeded"] = r.budget_exceeded;
    emit(to_pretty_string(out), out_path);
    return r.budget_exceeded ? 2 : 0;
  }

  if (export_cmd->parsed()) {
    Subdivision stage;
    if (!exp_input.empty()) {
      const Json j = parse_json_file(exp_input);
      stage = identity_stage(complex_from_json(j));
      if (j.is_object() && j.contains("coords"))
        for (const auto& [key, pt] : j.at("coords").items())
          stage.coords[std::stoi(key)] = point_from_json(pt);
    } else {
      stage = load_stage("", exp_base);
      for (int r = 0; r < exp_rounds; ++r) stage = chr(stage, env_budget(kDefaultFacetBudget));
    }
    if (exp_format == "obj")
      emit(subdivision_to_obj(stage), out_path);
    else if (exp_format == "json")
      emit(to_pretty_string(subdivision_to_json(stage)), out_path);
    else
      throw UsageError("--format must be obj or json");
    return 0;
  }

  throw UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const InputOutsideCondition& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidInput& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
