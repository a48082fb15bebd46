#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "farm/run.hpp"

int main(int argc, char** argv) {
  farm::RunOptions options;

  CLI::App app{
      "farm — mines fuzzy multidimensional association rules from a "
      "categorical CSV table"};
  app.add_option("--input", options.input, "input CSV file")->required();
  app.add_option("--lambda", options.lambda,
                 "maximum category count for a dimension to qualify (>= 2)")
      ->required();
  app.add_option("--min-support", options.min_support,
                 "per-level minimum supports; position i applies to "
                 "(i+1)-itemsets and the last value repeats")
      ->required()
      ->delimiter(',');
  app.add_option("--min-confidence", options.min_confidence,
                 "minimum rule confidence in [0, 1]")
      ->capture_default_str();
  app.add_option("--max-k", options.max_k,
                 "optional cap on the itemset size");
  app.add_option("--format", options.format, "report format: json|csv|text")
      ->capture_default_str();
  app.add_flag("--oracle", options.oracle,
               "cross-check the run against the exact brute-force miner");
  app.add_flag("--tid-column", options.tid_column,
               "treat the first CSV column as transaction ids");
  app.add_option("--workers", options.workers,
                 "worker threads for candidate scoring")
      ->capture_default_str();
  app.add_flag("--inject-miner-fault", options.inject_miner_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    return farm::run(options, std::cout, std::cerr);
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 1;
  }
}
