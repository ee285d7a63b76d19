#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bracekit/cli/app.hpp"

namespace cli = bracekit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify braces, skew braces and Yang-Baxter solutions"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string input;
  std::string out_path;

  for (const std::string& name : cli::commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", input,
                    "JSON document (file path, '-' for stdin) or preset such as "
                    "paper_7_3, heisenberg(3), direct(alt(4),paper_7_3)")
        ->required();
    sub->add_option("--seed", opts.seed, "Selects among Sylow systems and complements");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_option("--max-order", opts.max_order, "Order cap for input groups");
    sub->add_flag("--timing", opts.timing, "Add wall-clock timing to the report");
    if (name == "build" || name == "ybe") {
      sub->add_option("--construction", opts.construction)
          ->check(CLI::IsMember(cli::constructions()));
    }
    if (name == "build") {
      sub->add_option("--guard-aut", opts.guard_aut,
                      "Largest order for the automorphism check");
      sub->add_option("--eval", opts.evals,
                      "Evaluate an expression such as '(0,1)(1,0)+(0,1)(1,0)'");
    }
    if (name == "search")
      sub->add_option("--guard-search", opts.guard_search,
                      "Largest order for the exhaustive search");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  cli::Outcome outcome;
  try {
    outcome = cli::run(command, cli::load_input(input), opts);
  } catch (const bracekit::InputError& e) {
    outcome.report = {{"command", command}, {"status", "input_error"}, {"error", e.what()}};
    outcome.exit_code = cli::kInput;
  }

  const std::string text = outcome.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return cli::kInput;
    }
    f << text;
  }
  if (outcome.exit_code != cli::kOk && outcome.report.contains("error"))
    std::cerr << "bracekit: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}
