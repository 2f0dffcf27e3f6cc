#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catfuse/cli.hpp"

namespace cli = catfuse::cli;

int main(int argc, char** argv) {
  CLI::App app{"Typed sensor data, vectorization and sheaf consistency checks"};
  app.require_subcommand(1);
  cli::Streams io{std::cout, std::cerr};
  int rc = 0;

  std::string path;

  auto* validate = app.add_subcommand("validate", "Check a complex, sheaf or scenario file");
  validate->add_option("file", path, "complex, sheaf or scenario JSON")->required();
  validate->callback([&] { rc = cli::cmd_validate(path, io); });

  cli::ElementsOptions eopt;
  auto* elements = app.add_subcommand("elements", "List the elements of a typed object");
  elements->add_option("file", path, "object JSON")->required();
  elements->add_option("--window", eopt.window, "semiring window lo:hi[:denominator]");
  elements->add_option("--grid", eopt.grid, "measure weight grid, e.g. 0,1/2,1");
  elements->callback([&] { rc = cli::cmd_elements(path, eopt, io); });

  std::optional<std::string> vwindow;
  auto* vectorize = app.add_subcommand("vectorize", "Print the vector-space image of a typed object");
  vectorize->add_option("file", path, "object JSON")->required();
  vectorize->add_option("--window", vwindow, "semiring window lo:hi[:denominator]");
  vectorize->callback([&] { rc = cli::cmd_vectorize(path, vwindow, io); });

  std::string functor_id;
  cli::FunctorCheckOptions fopt;
  auto* fcheck = app.add_subcommand("functor-check", "Check identity and composition laws on samples");
  fcheck->add_option("functor", functor_id, "F_SO, BOOL->SET, ..., or <CATEGORY>->FVECT")->required();
  fcheck->add_option("samples", path, "samples JSON")->required();
  fcheck->add_option("--product-bound", fopt.config.product_bound, "largest product state space for F_SP");
  fcheck->add_option("--mass-bound", fopt.config.mass_bound, "largest total integer mass for F_MS");
  fcheck->callback([&] { rc = cli::cmd_functor_check(functor_id, path, fopt, io); });

  cli::IntegrateOptions iopt;
  auto* integrate = app.add_subcommand("integrate", "Run a scenario and test for a global section");
  integrate->add_option("scenario", path, "scenario JSON")->required();
  integrate->add_option("--tolerance", iopt.tolerance, "section tolerance (overrides the scenario)")
      ->check(CLI::NonNegativeNumber);
  integrate->add_flag("--json", iopt.json, "machine-readable output");
  integrate->callback([&] { rc = cli::cmd_integrate(path, iopt, io); });

  cli::DemoOptions dopt;
  std::vector<std::string> article;
  auto* demo = app.add_subcommand("demo", "Camera and newspaper example with stubbed analytics");
  demo->add_option("--score", dopt.score, "classifier confidence in [0,1]");
  demo->add_option("--violent-count", dopt.violent, "violent words in the synthetic article")
      ->check(CLI::NonNegativeNumber);
  demo->add_option("--calm-count", dopt.calm, "calm words in the synthetic article")->check(CLI::NonNegativeNumber);
  auto* article_opt = demo->add_option("--article", article, "article tokens (replaces the counts)");
  demo->add_option("--tolerance", dopt.tolerance, "section tolerance")->check(CLI::NonNegativeNumber);
  demo->add_flag("--json", dopt.json, "machine-readable output");
  demo->callback([&] {
    if (article_opt->count() > 0) dopt.article = article;
    rc = cli::cmd_demo(dopt, io);
  });

  cli::CatalogOptions copt;
  auto* catalog = app.add_subcommand("catalog", "Check the construct catalog against its fixtures");
  catalog->add_option("--fixtures", copt.fixtures, "fixtures directory")->check(CLI::ExistingDirectory);
  catalog->add_flag("--markdown", copt.markdown, "print the markdown index");
  catalog->callback([&] { rc = cli::cmd_catalog(copt, io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kBadInput;
  }
  return rc;
}
