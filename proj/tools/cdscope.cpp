#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdscope/errors.hpp"
#include "cdscope/report.hpp"

namespace {

using namespace cdscope;

int cmd_analyze(const std::string& expr, const std::string& format,
                const Limits& limits) {
  Analysis a = analyze_group(evaluate_text(expr, limits), limits);
  if (format == "json")
    std::cout << analysis_to_json(a).dump(2) << "\n";
  else
    std::cout << analysis_to_table(a);
  return 0;
}

int cmd_lattice(const std::string& expr, const std::string& format,
                const std::string& annotate, const Limits& limits) {
  Analysis a = analyze_group(evaluate_text(expr, limits), limits);
  Annotate ann = annotate == "fiber" ? Annotate::Fiber : Annotate::Measure;
  if (format == "json")
    std::cout << lattice_to_json(a, ann).dump(2) << "\n";
  else
    std::cout << lattice_to_dot(a, ann);
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& corpus_path,
               const Limits& limits) {
  CorpusSpec spec = corpus_path.empty() ? default_corpus()
                                        : load_corpus_file(corpus_path, limits);
  return verify_over_corpus(theorem, spec, limits, std::cout);
}

int cmd_corpus(const std::string& path, int jobs, const std::string& out_path,
               const Limits& limits) {
  CorpusSpec spec = load_corpus_file(path, limits);
  CorpusRunResult result = run_corpus(spec, jobs, limits);
  std::string text = corpus_to_json(result).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write output file '" + out_path + "'");
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chermak-Delgado measure and lattice analyzer"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--max-order", limits.max_order,
                 "largest group order to materialize")
      ->capture_default_str();

  std::string expr, format = "table", annotate = "measure";
  auto* analyze = app.add_subcommand("analyze", "analyze one group expression");
  analyze->add_option("expr", expr, "group expression, e.g. \"D(8)\"")->required();
  analyze->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string lat_expr, lat_format = "dot", lat_annotate = "measure";
  auto* lattice = app.add_subcommand("lattice", "emit the Hasse diagram");
  lattice->add_option("expr", lat_expr, "group expression")->required();
  lattice->add_option("--format", lat_format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  lattice->add_option("--annotate", lat_annotate, "measure|fiber")
      ->check(CLI::IsMember({"measure", "fiber"}));

  std::string theorem, corpus_opt;
  auto* verify = app.add_subcommand("verify", "run one verifier over a corpus");
  verify->add_option("theorem", theorem,
                     "increasing|centralizers|poset|decreasing-trivial|"
                     "image-bound|cheng-iff|sylow|product|quasi|subnormal")
      ->required();
  verify->add_option("--corpus", corpus_opt, "corpus file (default: built-in)");

  std::string corpus_path, out_path;
  int jobs = 1;
  auto* corpus = app.add_subcommand("corpus", "run every verifier over a corpus file");
  corpus->add_option("path", corpus_path, "corpus file")->required();
  corpus->add_option("--jobs", jobs, "concurrent workers")->check(CLI::PositiveNumber);
  corpus->add_option("--out", out_path, "aggregate JSON output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(expr, format, limits);
    if (app.got_subcommand(lattice))
      return cmd_lattice(lat_expr, lat_format, lat_annotate, limits);
    if (app.got_subcommand(verify)) return cmd_verify(theorem, corpus_opt, limits);
    if (app.got_subcommand(corpus))
      return cmd_corpus(corpus_path, jobs, out_path, limits);
  } catch (const cdscope::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const cdscope::SizeError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const cdscope::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
