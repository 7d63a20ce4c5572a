#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qha/config.hpp"
#include "qha/report.hpp"

namespace qha {

struct CommandOptions {
  std::string command;
  std::optional<std::string> config_path, cartan_path;
  std::optional<long> cutoff, bound, seed, m;
  std::optional<std::string> algebra, flavor;
  std::string format = "text";
  std::vector<std::string> literals;
};

std::vector<std::string> command_names();
// command line values override config params
Report run_command(const CommandOptions& opts, const JobConfig& config);
// 0 when every check passes, 1 on a failed check, 2 on schema or input errors
int run_cli(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qha
