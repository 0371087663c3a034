// Command-line front end: parse a model, run the reachability analysis,
// report the parametric unsafe region and its complement.
//
//   hrd analyze model.lha [--ordering K] [--direction D] [--pspsc]
//                         [--max-iterations N] [--output text|json] [--stats]
//   hrd --generate fischer:2 [out.lha]
//
// Exit codes: 0 converged, 1 usage error, 2 parse or validation error,
// 3 iteration cap reached.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hrd/compile.hpp"
#include "hrd/engine.hpp"
#include "hrd/generators.hpp"
#include "hrd/output.hpp"

namespace {

int run_generate(const std::string& which, std::string out_path) {
  std::string err;
  auto gen = hrd::generate(which, &err);
  if (!gen) {
    std::cerr << "hrd: " << err << "\n";
    return 1;
  }
  if (out_path.empty()) out_path = gen->name + ".lha";
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "hrd: cannot write '" << out_path << "'\n";
    return 2;
  }
  for (const std::string& note : gen->notes) out << "# " << note << "\n";
  out << hrd::print_model(gen->ast);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

int run_analyze(const std::string& path, const hrd::AnalysisConfig& cfg,
                const std::string& format, bool stats) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "hrd: cannot read '" << path << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  std::vector<hrd::Diagnostic> diags;
  auto ast = hrd::parse_model(buf.str(), diags);
  if (!ast) {
    std::cerr << hrd::render_diagnostics(diags);
    return 2;
  }
  auto ctx = hrd::compile_model(*ast, cfg.ordering, diags);
  if (!ctx) {
    std::cerr << hrd::render_diagnostics(diags);
    return 2;
  }

  hrd::AnalysisConfig run_cfg = cfg;
  run_cfg.emit_stats = stats;
  hrd::Engine engine(*ctx, run_cfg, &std::cerr);
  hrd::AnalysisResult result = engine.run();

  hrd::OutputDocument doc = hrd::make_document(*ctx, result);
  std::cout << (format == "json" ? hrd::to_json_text(doc) : hrd::to_text(doc));
  return result.status == hrd::AnalysisStatus::converged ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric safety analysis of linear hybrid automata"};
  app.require_subcommand(0, 1);

  std::string generate_spec;
  app.add_option("--generate", generate_spec,
                 "Write a benchmark model (fischer:N, reactor:N, railroad:N, csma:N) and exit");

  std::string gen_out;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a model file");
  std::string model_path;
  analyze->add_option("file", model_path, "Model file")->required();

  hrd::AnalysisConfig cfg;
  std::map<std::string, hrd::OrderingKind> ordering_names{
      {"dictionary", hrd::OrderingKind::dictionary},
      {"coefficient", hrd::OrderingKind::coefficient},
      {"magnitude", hrd::OrderingKind::magnitude},
  };
  std::map<std::string, hrd::Direction> direction_names{
      {"backward", hrd::Direction::backward},
      {"forward", hrd::Direction::forward},
  };
  std::string format = "text";
  bool stats = false;
  std::uint64_t max_iterations = 0;

  analyze->add_option("--ordering", cfg.ordering, "Atom ordering")
      ->transform(CLI::CheckedTransformer(ordering_names, CLI::ignore_case));
  analyze->add_option("--direction", cfg.direction, "Exploration direction")
      ->transform(CLI::CheckedTransformer(direction_names, CLI::ignore_case));
  analyze->add_flag("--pspsc", cfg.pspsc,
                    "Prune partial solutions as they are found (backward only)");
  analyze->add_option("--max-iterations", max_iterations,
                      "Iteration cap, 0 means unbounded");
  analyze->add_option("--output", format, "Result format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--stats", stats, "Per-iteration statistics on stderr");

  // Only meaningful together with --generate: where to write the model.
  app.add_option("out", gen_out, "Output path for --generate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  if (!generate_spec.empty()) return run_generate(generate_spec, gen_out);

  if (!analyze->parsed()) {
    std::cerr << "hrd: expected 'analyze <file>' or '--generate family:N'\n";
    return 1;
  }
  if (cfg.pspsc && cfg.direction == hrd::Direction::forward) {
    std::cerr << "hrd: --pspsc only works with backward exploration\n";
    return 1;
  }
  cfg.max_iterations = max_iterations;
  return run_analyze(model_path, cfg, format, stats);
}
