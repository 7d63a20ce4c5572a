#include <iostream>

#include <CLI11.hpp>

#include "qha/commands.hpp"

int main(int argc, char** argv) {
  qha::CommandOptions o;
  CLI::App app{"exact computations in quiver Hopf algebras"};
  std::string commands;
  for (const auto& c : qha::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", o.command, "one of: " + commands)->required();
  app.add_option("literals", o.literals, "element literals for multiply");
  app.add_option("--config", o.config_path, "JSON config (// comments allowed)");
  app.add_option("--cartan", o.cartan_path, "Cartan input {\"A\": [[2,-1],[-1,2]], \"d\": [1,1]}");
  app.add_option("--cutoff,--degree", o.cutoff, "degree cutoff");
  app.add_option("--bound", o.bound, "enumeration bound or number of random samples");
  app.add_option("--seed", o.seed, "seed for randomized property tests");
  app.add_option("--m", o.m, "m for qfact, r for serre");
  app.add_option("--algebra", o.algebra, "copath, bimodule, semipath, taft, braided or biproduct");
  app.add_option("--flavor", o.flavor, "tensor, symmetric or linear");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return qha::run_cli(o, std::cout, std::cerr);
}
