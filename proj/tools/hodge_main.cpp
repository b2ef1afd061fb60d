#include "hodge/dsl/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Common {
  std::string format = "text";
  bool assume_trivial_monodromy = false;
  std::uint64_t seed = 20240601;
};

void add_common(CLI::App* cmd, Common& c, bool monodromy) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", c.seed, "Seed for randomized checks");
  if (monodromy) {
    cmd->add_flag("--assume-trivial-monodromy", c.assume_trivial_monodromy,
                  "Treat every stratum and fibration as having trivial monodromy");
  }
}

hodge::dsl::RunOptions options(const Common& c) {
  hodge::dsl::RunOptions o;
  o.format = c.format == "json" ? hodge::dsl::OutputFormat::json : hodge::dsl::OutputFormat::text;
  o.assume_trivial_monodromy = c.assume_trivial_monodromy;
  o.seed = c.seed;
  return o;
}

int emit(const hodge::dsl::RunOutput& out) {
  std::cout << out.output << std::flush;
  return out.exit_code;
}

int run_file(const std::string& path, hodge::dsl::RunOptions opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hodge: cannot read " << path << "\n";
    return hodge::dsl::kExitParse;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return emit(hodge::dsl::run_source(buf.str(), opts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge-theoretic genera of varieties, maps and bundles"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string suite;

  auto* eval = app.add_subcommand("eval", "Run every query in a script");
  eval->add_option("file", file, "Script file")->required();
  add_common(eval, common, true);

  auto* verify = app.add_subcommand("verify", "Run a built-in verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"paper-examples", "properties", "cross-checks", "all"}));
  add_common(verify, common, false);

  // Shortcuts that run a script but only its queries of one kind.
  std::vector<std::pair<std::string, CLI::App*>> filtered;
  for (const char* verb : {"rh", "ghrr", "meyer", "am", "class", "strat", "genus"}) {
    auto* cmd = app.add_subcommand(verb, std::string("Run only the '") + verb + "' queries of a script");
    cmd->add_option("file", file, "Script file")->required();
    add_common(cmd, common, true);
    filtered.emplace_back(verb, cmd);
  }

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_file(file, options(common));
  if (verify->parsed()) return emit(hodge::dsl::run_source("verify " + suite + "\n", options(common)));
  for (const auto& [verb, cmd] : filtered) {
    if (cmd->parsed()) {
      auto opts = options(common);
      opts.verbs = std::set<std::string>{verb};
      return run_file(file, opts);
    }
  }
  return 0;
}
