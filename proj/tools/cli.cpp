#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hpcc/batch.hpp"
#include "hpcc/hamiltonicity.hpp"
#include "io.hpp"

namespace hpcc::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::uint64_t seed = 0;
  std::uint32_t n = 8;
  std::uint32_t min_n = 4;
  double density = 0.5;
  double left_fraction = 0.5;
  std::size_t max_oracle = 0;
  std::size_t count = 1;
  std::uint32_t restricted = 0;
  bool serial = false;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return kParseError;
    case ErrorCode::InstanceTooLarge: return kInstanceTooLarge;
    default: return kValidationError;
  }
}

// An explicit flag wins over HPCC_MAX_ORACLE, which wins over the default.
std::size_t oracle_bound(const CLI::Option* flag, std::size_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("HPCC_MAX_ORACLE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw Error(ErrorCode::ParseError, std::string("HPCC_MAX_ORACLE is not a number: ") + env);
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxOracle;
}

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  OuterplanarStDigraph read_graph() {
    std::string text;
    if (opt_.input.empty() || opt_.input == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(opt_.input);
      if (!f) throw Error(ErrorCode::ParseError, "cannot read " + opt_.input);
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    return build_graph(io::parse_graph(text));
  }

  void emit_text(const std::string& text) {
    if (opt_.output.empty() || opt_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + opt_.output);
    f << text;
  }

  void emit(const json& doc) { emit_text(doc.dump(2) + "\n"); }

  void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    f << text;
  }

  int check() {
    const auto g = read_graph();
    emit({{"valid", true},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"left", g.left_count()},
          {"right", g.right_count()},
          {"hamiltonian", is_hamiltonian(g)}});
    return kOk;
  }

  int decompose_cmd() {
    const auto g = read_graph();
    emit(io::decomposition_to_json(g, decompose(g)));
    return kOk;
  }

  // Solves and re-verifies; a failed self-check is fatal.
  std::optional<CompletionSolution> solved(const OuterplanarStDigraph& g) {
    CompletionSolution sol = solve(g);
    const VerifyReport report = verify_solution(g, sol);
    if (!report.valid) {
      err_ << "self-check failed: " << report.problems.front() << "\n";
      return std::nullopt;
    }
    return sol;
  }

  int solve_cmd() {
    const auto g = read_graph();
    const auto sol = solved(g);
    if (!sol) return kSelfCheckFailed;
    emit(io::solution_to_json(g, *sol));
    return kOk;
  }

  std::optional<BookEmbedding> embedding(const OuterplanarStDigraph& g) {
    const auto sol = solved(g);
    if (!sol) return std::nullopt;
    BookEmbedding be = to_book_embedding(g, *sol);
    const EmbeddingReport report = validate_book_embedding(g, be);
    if (!report.valid) {
      err_ << "self-check failed: " << report.problems.front() << "\n";
      return std::nullopt;
    }
    return be;
  }

  int embed() {
    const auto g = read_graph();
    const auto be = embedding(g);
    if (!be) return kSelfCheckFailed;
    if (!opt_.svg.empty()) write_file(opt_.svg, io::render_svg(g, *be));
    emit(io::embedding_to_json(g, *be));
    return kOk;
  }

  int render() {
    const auto g = read_graph();
    const auto be = embedding(g);
    if (!be) return kSelfCheckFailed;
    const std::string svg = io::render_svg(g, *be);
    if (!opt_.svg.empty()) write_file(opt_.svg, svg);
    emit_text(svg);
    return kOk;
  }

  int oracle(std::size_t bound) {
    const auto g = read_graph();
    if (opt_.restricted > 0) {
      const auto r = brute_force_restricted(g, opt_.restricted, bound);
      json doc = r ? io::oracle_to_json(g, *r) : json{{"crossings", nullptr}};
      doc["max_per_edge"] = opt_.restricted;
      emit(doc);
      return kOk;
    }
    emit(io::oracle_to_json(g, brute_force_optimal(g, bound)));
    return kOk;
  }

  int compare(std::size_t bound, bool density_given) {
    if (!opt_.input.empty()) {
      const auto g = read_graph();
      const auto sol = solved(g);
      if (!sol) return kSelfCheckFailed;
      const auto best = brute_force_optimal(g, bound);
      const bool agree = best.crossings == sol->total_crossings;
      emit({{"solve", sol->total_crossings},
            {"oracle", best.crossings},
            {"reference", reference_optimal(g)},
            {"agree", agree}});
      return agree ? kOk : kCompareMismatch;
    }
    auto cases = compare_corpus(opt_.count, opt_.min_n, opt_.n, opt_.left_fraction, opt_.seed);
    if (density_given) {
      for (auto& c : cases) c.chord_density = opt_.density;
    }
    const auto results =
        compare_batch(cases, opt_.serial ? Execution::Serial : Execution::Parallel, bound);
    const json doc = io::compare_to_json(results);
    emit(doc);
    if (doc["mismatches"].get<std::size_t>() > 0) {
      err_ << doc["mismatches"].get<std::size_t>() << " mismatches\n";
      return kCompareMismatch;
    }
    return kOk;
  }

  int gen() {
    json list = json::array();
    for (std::size_t i = 0; i < opt_.count; ++i) {
      list.push_back(io::graph_to_json(
          generate({opt_.n, opt_.left_fraction, opt_.density, opt_.seed + i})));
    }
    emit(opt_.count == 1 ? list[0] : list);
    return kOk;
  }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Crossing-optimal acyclic hamiltonian path completion for outerplanar st-digraphs",
               "hpcc"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "Instance JSON (default: stdin)");
    cmd->add_option("-o,--output", opt.output, "Output file (default: stdout)");
  };
  auto* check = app.add_subcommand("check", "Validate an instance");
  auto* decompose_cmd = app.add_subcommand("decompose", "List the st-polygon decomposition");
  auto* solve_cmd = app.add_subcommand("solve", "Compute a crossing-optimal completion");
  auto* embed = app.add_subcommand("embed", "Compute the matching 2-page book embedding");
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum over all linear extensions");
  auto* compare = app.add_subcommand("compare", "Check solve against the oracles");
  auto* gen = app.add_subcommand("gen", "Generate random instances");
  auto* render = app.add_subcommand("render", "Draw the optimal book embedding as SVG");
  for (auto* cmd : {check, decompose_cmd, solve_cmd, embed, oracle, compare, render}) add_io(cmd);
  gen->add_option("-o,--output", opt.output, "Output file (default: stdout)");

  embed->add_option("--svg", opt.svg, "Also write an SVG drawing");
  render->add_option("--svg", opt.svg, "Write the SVG here as well");
  CLI::Option* oracle_flag =
      oracle->add_option("--max-oracle", opt.max_oracle, "Largest instance for brute force");
  oracle->add_option("--restricted", opt.restricted,
                     "Only orders crossing each edge at most this often");
  CLI::Option* compare_oracle_flag =
      compare->add_option("--max-oracle", opt.max_oracle, "Largest instance for brute force");
  compare->add_option("--count", opt.count, "Number of generated instances")->capture_default_str();
  compare->add_option("--n", opt.n, "Largest vertex count")->capture_default_str();
  compare->add_option("--min-n", opt.min_n, "Smallest vertex count")->capture_default_str();
  compare->add_option("--seed", opt.seed, "Seed of the first instance")->capture_default_str();
  CLI::Option* density_flag =
      compare->add_option("--density", opt.density, "Fixed chord density (default: cycle)");
  compare->add_option("--left-fraction", opt.left_fraction, "Share of left vertices");
  compare->add_flag("--serial", opt.serial, "Run on one thread");
  gen->add_option("--n", opt.n, "Vertex count")->capture_default_str();
  gen->add_option("--density", opt.density, "Chord density")->capture_default_str();
  gen->add_option("--left-fraction", opt.left_fraction, "Share of left vertices")
      ->capture_default_str();
  gen->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  gen->add_option("--count", opt.count, "Number of instances")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  Runner r(opt, in, out, err);
  try {
    if (*check) return r.check();
    if (*decompose_cmd) return r.decompose_cmd();
    if (*solve_cmd) return r.solve_cmd();
    if (*embed) return r.embed();
    if (*render) return r.render();
    if (*oracle) return r.oracle(oracle_bound(oracle_flag, opt.max_oracle));
    if (*compare) {
      if (opt.count == 0) opt.count = 1000;
      return r.compare(oracle_bound(compare_oracle_flag, opt.max_oracle),
                       density_flag->count() > 0);
    }
    if (*gen) return r.gen();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kSelfCheckFailed;
  }
  return kOk;
}

}  // namespace hpcc::cli
