#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "gcx/report.hpp"

namespace {

bool want_color() {
  if (const char* env = std::getenv("GCX_COLOR")) {
    const std::string v = env;
    if (v == "0" || v == "never" || v == "off" || v == "false" || v == "no") return false;
    if (v == "always") return true;
  }
  return isatty(STDOUT_FILENO) != 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized complex cohomology of Lie algebra models"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  gcx::RunConfig config;
  CLI::App* check = app.add_subcommand("check", "analyze a model file or a directory of .gcx files");
  check->add_option("input", input, "model file or corpus directory")->required();
  check->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--max-page", config.max_page, "spectral pages to print")->check(CLI::Range(1, 1000));
  check->add_flag("--oracle", config.oracle, "check the lemma by explicit subspace equality");
  check->add_option("--jobs", config.jobs, "models processed in parallel")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gcx::exit_parse;
  }
  config.format = format == "json" ? gcx::ReportFormat::json : gcx::ReportFormat::text;
  config.color = config.format == gcx::ReportFormat::text && want_color();

  const std::filesystem::path path(input);
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    const gcx::CorpusSummary s = gcx::run_corpus(path, config);
    std::cout << gcx::render(s, config);
    return s.status;
  }
  const gcx::RunResult r = gcx::run_model(path, config);
  if (r.report)
    std::cout << gcx::render(r, config);
  else if (config.format == gcx::ReportFormat::json)
    std::cout << gcx::render(r, config);
  else
    std::cerr << r.error << "\n";
  return r.status;
}
