#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qha/group.hpp"
#include "qha/quantum_group.hpp"
#include "qha/structure.hpp"

namespace qha {

// any input that does not match the config schema; the CLI exits with status 2
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::optional<Group> group;
  std::optional<RSC> rsc;
  // explicit coset representatives per RSC class, first entry 1
  std::vector<std::vector<Element>> cosets;
  std::optional<ESC> esc;
  std::optional<FLData> fl;
  Ramification ramification;
  long serre_r = 0;

  std::optional<long> cutoff, bound, seed, m;
  std::optional<std::string> algebra, flavor;
  std::vector<std::string> literals;
};

// JSON with // comments; groups, rsc, esc and cartan sections
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);
// {"A": [[2,-1],[-1,2]], "d": [1,1]} with an optional "q"
FLData parse_cartan(const std::string& text);

}  // namespace qha
