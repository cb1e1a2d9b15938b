// Command line front end: complete, extend, verify, render.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "macneille/completion.hpp"
#include "macneille/errors.hpp"
#include "macneille/extensions.hpp"
#include "macneille/io.hpp"
#include "macneille/verify.hpp"

namespace {

using namespace macneille;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

struct CompleteArgs {
  std::string input;
  std::string poset;
  std::string out;
  std::string dot;
  std::string strategy = "auto";
  std::size_t size_cap = 0;
  bool allow_extrema = false;
};

int run_complete(const CompleteArgs& args) {
  const auto doc = io::parse_instance(read_file(args.input), {.allow_extrema = args.allow_extrema});
  const auto& base = doc.poset(args.poset).poset;
  CompletionOptions options;
  options.size_cap = args.size_cap > 0 ? args.size_cap : default_size_cap();
  if (args.strategy == "naive") {
    options.strategy = CompletionStrategy::Naive;
  } else if (args.strategy == "generated") {
    options.strategy = CompletionStrategy::Generated;
  }
  const auto lattice = dedekind_completion(base, options);
  write_output(args.out, io::completion_artifact(lattice).dump(2) + "\n");
  if (!args.dot.empty()) write_output(args.dot, io::completion_dot(lattice));
  return kExitOk;
}

struct ExtendArgs {
  std::string input;
  std::string op;
  std::string map;
  std::string subset;
  std::string selector;
  std::string bar_strategy = "optimized";
  std::string out;
  bool allow_extrema = false;
};

int run_extend(const ExtendArgs& args) {
  const auto doc = io::parse_instance(read_file(args.input), {.allow_extrema = args.allow_extrema});
  const auto op = operator_from_string(args.op);
  const auto& named_map = doc.map(args.map);
  const auto& named_subset = doc.subset(args.subset);
  if (named_subset.poset != named_map.domain) {
    throw ValidationError("subset '" + named_subset.name + "' lives in poset '" + named_subset.poset +
                          "', not in the map's domain '" + named_map.domain + "'");
  }
  const CofinalSelector* selector = nullptr;
  if (op == Operator::L) {
    if (args.selector.empty()) throw InvalidSelectorError("operator L requires --selector");
    const auto& named = doc.selector(args.selector);
    if (!named.poset.empty() && named.poset != named_map.domain) {
      throw ValidationError("selector '" + named.name + "' is defined over '" + named.poset + "'");
    }
    selector = &named.selector;
  } else if (!args.selector.empty()) {
    throw ValidationError("--selector is only meaningful for operator L");
  }
  const ExtensionResult result =
      op == Operator::Bar && args.bar_strategy == "naive"
          ? ExtensionResult{op, named_subset.members, phi_bar(named_map.map, named_subset.members, BarStrategy::Naive)}
          : extend(op, named_map.map, named_subset.members, selector);
  write_output(args.out, io::extension_artifact(result, named_map.map).dump(2) + "\n");
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> ids;
  verify::RunConfig config;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::string out;
  std::string replay;
  bool timing = false;
  bool list = false;
};

int run_verify(VerifyArgs args) {
  if (args.list) {
    for (const auto& info : verify::catalog()) {
      std::cout << info.id << (info.kind == verify::CheckKind::Control ? "  [control]  " : "  ") << info.statement
                << "\n";
    }
    return kExitOk;
  }
  if (!args.replay.empty()) {
    const auto witness = verify::witness_from_json(io::json::parse(read_file(args.replay)));
    const bool still_fails = verify::replay(witness);
    std::cout << witness.check_id << ": " << (still_fails ? "witness reproduces" : "witness no longer fails") << "\n";
    return still_fails ? 1 : kExitOk;
  }
  if (args.ids.empty()) args.ids.push_back("all");
  if (args.x_size > 0) args.config.x_min = args.config.x_max = args.x_size;
  if (args.y_size > 0) args.config.y_min = args.config.y_max = args.y_size;
  const auto reports = verify::run_checks(args.ids, args.config);
  write_output(args.out, verify::to_json(reports, args.timing).dump(2) + "\n");
  for (const auto& r : reports) {
    std::cerr << (r.passed() ? "PASS " : (r.inconclusive() ? "INCONCLUSIVE " : "FAIL ")) << r.check_id << " ("
              << r.label() << ", " << r.instances_run << " instances)\n";
  }
  return verify::exit_code(reports);
}

struct RenderArgs {
  std::string input;
  std::string poset;
  std::string dot;
  bool completion = false;
  bool allow_extrema = false;
};

int run_render(const RenderArgs& args) {
  const auto doc = io::parse_instance(read_file(args.input), {.allow_extrema = args.allow_extrema});
  const auto& named = doc.poset(args.poset);
  if (args.completion) {
    CompletionOptions options;
    options.size_cap = default_size_cap();
    write_output(args.dot, io::completion_dot(dedekind_completion(named.poset, options), named.name + "#"));
  } else {
    write_output(args.dot, io::poset_dot(named.poset, named.name));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dedekind-MacNeille completions and extensions of maps between finite posets"};
  app.require_subcommand(1);

  CompleteArgs complete;
  auto* c = app.add_subcommand("complete", "Compute the completion X# of a poset");
  c->add_option("input", complete.input, "Instance JSON file")->required();
  c->add_option("--poset", complete.poset, "Poset name (optional when the document has one poset)");
  c->add_option("--out", complete.out, "Write the completion JSON here instead of stdout");
  c->add_option("--dot", complete.dot, "Write the completion's Hasse diagram as DOT");
  c->add_option("--strategy", complete.strategy, "auto, naive or generated")
      ->check(CLI::IsMember({"auto", "naive", "generated"}));
  c->add_option("--size-cap", complete.size_cap, "Element cap (default 20, or POSET_SIZE_CAP)");
  c->add_flag("--allow-extrema", complete.allow_extrema, "Accept posets with a minimum or maximum");

  ExtendArgs ext;
  auto* e = app.add_subcommand("extend", "Apply an extension operator to a subset");
  e->add_option("input", ext.input, "Instance JSON file")->required();
  e->add_option("--operator", ext.op, "sharp, tilde, L or bar")->required()
      ->check(CLI::IsMember({"sharp", "tilde", "L", "bar"}));
  e->add_option("--map", ext.map, "Map name");
  e->add_option("--subset", ext.subset, "Subset name");
  e->add_option("--selector", ext.selector, "Cofinal selector name (operator L only)");
  e->add_option("--bar-strategy", ext.bar_strategy, "optimized or naive")
      ->check(CLI::IsMember({"optimized", "naive"}));
  e->add_option("--out", ext.out, "Write the result JSON here instead of stdout");
  e->add_flag("--allow-extrema", ext.allow_extrema, "Accept posets with a minimum or maximum");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run verification checks");
  v->add_option("ids", ver.ids, "Check ids, or 'all'");
  v->add_option("--seed", ver.config.seed, "Corpus seed");
  v->add_option("--exhaustive-max", ver.config.exhaustive_max, "Largest |X| enumerated exhaustively");
  v->add_option("--instances", ver.config.instances, "Generated instances per check");
  v->add_option("--x-size", ver.x_size, "Fix |X| for generated instances");
  v->add_option("--y-size", ver.y_size, "Fix |Y| for generated instances");
  v->add_option("--out", ver.out, "Write the JSON report here instead of stdout");
  v->add_option("--replay", ver.replay, "Re-run a failure witness JSON file");
  v->add_flag("--timing", ver.timing, "Include elapsed times in the report");
  v->add_flag("--list", ver.list, "List registered checks");

  RenderArgs ren;
  auto* r = app.add_subcommand("render", "Write the Hasse diagram of a poset as DOT");
  r->add_option("input", ren.input, "Instance JSON file")->required();
  r->add_option("--poset", ren.poset, "Poset name");
  r->add_option("--dot", ren.dot, "Output path (default stdout)");
  r->add_flag("--completion", ren.completion, "Render the completion lattice instead");
  r->add_flag("--allow-extrema", ren.allow_extrema, "Accept posets with a minimum or maximum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return run_complete(complete);
    if (*e) return run_extend(ext);
    if (*v) return run_verify(ver);
    if (*r) return run_render(ren);
  } catch (const macneille::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
