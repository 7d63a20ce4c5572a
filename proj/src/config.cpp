#include "qha/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qha {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { throw SchemaError(what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where + ": missing \"" + key + "\"");
  return j.at(key);
}

long as_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + ": expected an integer");
  return j.get<long>();
}

long positive(const json& j, const std::string& where) {
  const long v = as_long(j, where);
  if (v <= 0) schema(where + ": must be positive");
  return v;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<long> long_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of integers");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(as_long(x, where));
  return out;
}

Scalar scalar_of(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  try {
    return Scalar::parse(as_string(j, where));
  } catch (const std::invalid_argument& e) {
    schema(where + ": " + e.what());
  }
}

Element element_of(const Group& G, const json& j, const std::string& where) {
  try {
    return G.parse(as_string(j, where));
  } catch (const std::invalid_argument& e) {
    schema(where + ": " + e.what());
  }
}

Group parse_group(const json& j) {
  const std::string kind = as_string(need(j, "kind", "group"), "group.kind");
  try {
    if (kind == "abelian") {
      const auto f = long_list(need(j, "factors", "group"), "group.factors");
      for (long x : f)
        if (x <= 0) schema("group.factors: must be positive");
      return Group::abelian(f);
    }
    if (kind == "free_abelian") return Group::free_abelian(static_cast<int>(positive(need(j, "rank", "group"), "group.rank")));
    if (kind == "cayley") {
      const json& t = need(j, "table", "group");
      if (!t.is_array()) schema("group.table: expected an array of rows");
      std::vector<std::vector<int>> table;
      for (const auto& row : t) {
        std::vector<int> r;
        for (long x : long_list(row, "group.table")) r.push_back(static_cast<int>(x));
        table.push_back(std::move(r));
      }
      return Group::cayley(table);
    }
  } catch (const std::invalid_argument& e) {
    schema(std::string("group: ") + e.what());
  }
  schema("group.kind: unknown kind '" + kind + "'");
}

Character character_of(const Group& G, const json& chi, const std::string& where) {
  try {
    if (!G.finite()) {
      if (!chi.is_array()) schema(where + ": expected generator values");
      std::vector<Scalar> values;
      for (const auto& v : chi) values.push_back(scalar_of(v, where));
      return Character::from_generator_values(G, values);
    }
    if (G.kind() == Group::Kind::abelian) return Character::from_exponents(G, long_list(chi, where));
    return Character::on_subgroup(G, G.elements(), long_list(chi, where));
  } catch (const std::invalid_argument& e) {
    schema(where + ": " + e.what());
  }
}

void parse_rsc(const json& j, JobConfig& c) {
  if (!c.group) schema("rsc: needs a group");
  const Group& G = *c.group;
  if (!G.finite()) schema("rsc: needs a finite group");
  const json& classes = need(j, "classes", "rsc");
  if (!classes.is_array()) schema("rsc.classes: expected an array");
  std::vector<std::pair<Element, std::vector<Character>>> data;
  std::vector<std::pair<Element, std::vector<Element>>> cosets;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const json& cl = classes[k];
    const std::string where = "rsc.classes[" + std::to_string(k) + "]";
    const Element rep = element_of(G, need(cl, "rep", where), where + ".rep");
    const long r = as_long(need(cl, "r", where), where + ".r");
    const json& chars = need(cl, "chars", where);
    if (!chars.is_array() || static_cast<long>(chars.size()) != r) schema(where + ": r must equal the number of chars");
    const auto z = G.centralizer(rep);
    std::vector<Character> cs;
    for (const auto& ch : chars) {
      try {
        cs.push_back(Character::on_subgroup(G, z, long_list(ch, where + ".chars")));
      } catch (const std::invalid_argument& e) {
        schema(where + ".chars: " + e.what());
      }
    }
    data.emplace_back(rep, std::move(cs));
    if (cl.contains("cosets")) {
      std::vector<Element> reps;
      for (const auto& x : cl.at("cosets")) reps.push_back(element_of(G, x, where + ".cosets"));
      cosets.emplace_back(rep, std::move(reps));
    }
  }
  try {
    c.rsc = make_rsc(G, data);
  } catch (const std::invalid_argument& e) {
    schema(std::string("rsc: ") + e.what());
  }
  c.cosets.assign(c.rsc->classes.size(), {});
  for (auto& [rep, reps] : cosets)
    for (std::size_t k = 0; k < c.rsc->classes.size(); ++k)
      if (c.rsc->classes[k].cls.contains(rep)) c.cosets[k] = reps;
}

void parse_esc(const json& j, JobConfig& c) {
  if (!c.group) schema("esc: needs a group");
  const Group& G = *c.group;
  const json& items = need(j, "items", "esc");
  if (!items.is_array() || items.empty()) schema("esc.items: expected a non-empty array");
  ESC e;
  e.group = G;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string where = "esc.items[" + std::to_string(k) + "]";
    e.g.push_back(element_of(G, need(items[k], "g", where), where + ".g"));
    e.chi.push_back(character_of(G, need(items[k], "chi", where), where + ".chi"));
  }
  try {
    e.validate();
  } catch (const std::invalid_argument& ex) {
    schema(std::string("esc: ") + ex.what());
  }
  c.esc = std::move(e);
}

FLData cartan_of(const json& j) {
  const json& A = need(j, "A", "cartan");
  if (!A.is_array() || A.empty()) schema("cartan.A: expected a square integer matrix");
  std::vector<std::vector<long>> rows;
  for (const auto& row : A) rows.push_back(long_list(row, "cartan.A"));
  std::vector<long> d = j.contains("d") ? long_list(j.at("d"), "cartan.d") : std::vector<long>(rows.size(), 1);
  for (long x : d)
    if (x <= 0) schema("cartan.d: must be positive");
  const Scalar q = j.contains("q") ? scalar_of(j.at("q"), "cartan.q") : Scalar::q();
  try {
    return cartan_to_esc(rows, d, q);
  } catch (const std::invalid_argument& e) {
    schema(std::string("cartan: ") + e.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) schema("config must be an object");
  static const std::vector<std::string> known{"group", "rsc", "esc", "cartan", "ramification", "serre", "params", "scalar"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) schema("unknown key \"" + k + "\"");
  JobConfig c;
  if (j.contains("scalar")) {
    const std::string mode = as_string(j.at("scalar"), "scalar");
    if (mode != "rational" && mode != "cyclotomic" && mode != "rational_function") schema("scalar: unknown mode '" + mode + "'");
  }
  if (j.contains("group")) c.group = parse_group(j.at("group"));
  if (j.contains("rsc")) parse_rsc(j.at("rsc"), c);
  if (j.contains("esc")) parse_esc(j.at("esc"), c);
  if (j.contains("cartan")) {
    c.fl = cartan_of(j.at("cartan"));
    if (!c.group) c.group = c.fl->esc.group;
  }
  if (j.contains("ramification")) {
    if (!c.group) schema("ramification: needs a group");
    const json& r = j.at("ramification");
    if (!r.is_array()) schema("ramification: expected an array");
    for (const auto& x : r) {
      const long n = as_long(need(x, "r", "ramification"), "ramification.r");
      if (n < 0) schema("ramification.r: must be non-negative");
      c.ramification.emplace_back(element_of(*c.group, need(x, "rep", "ramification"), "ramification.rep"), static_cast<int>(n));
    }
  } else if (c.rsc) {
    for (const auto& cl : c.rsc->classes) c.ramification.emplace_back(cl.cls.rep, static_cast<int>(cl.r()));
  }
  if (j.contains("serre")) c.serre_r = positive(need(j.at("serre"), "r", "serre"), "serre.r");
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (!p.is_object()) schema("params: expected an object");
    for (const auto& [k, v] : p.items()) {
      if (k == "cutoff")
        c.cutoff = positive(v, "params.cutoff");
      else if (k == "bound")
        c.bound = positive(v, "params.bound");
      else if (k == "seed")
        c.seed = as_long(v, "params.seed");
      else if (k == "m")
        c.m = positive(v, "params.m");
      else if (k == "algebra")
        c.algebra = as_string(v, "params.algebra");
      else if (k == "flavor")
        c.flavor = as_string(v, "params.flavor");
      else if (k == "literals") {
        if (!v.is_array()) schema("params.literals: expected an array of strings");
        for (const auto& s : v) c.literals.push_back(as_string(s, "params.literals"));
      } else
        schema("params: unknown key \"" + k + "\"");
    }
  }
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

FLData parse_cartan(const std::string& text) {
  const json j = parse_json(text);
  return cartan_of(j.contains("cartan") ? j.at("cartan") : j);
}

}  // namespace qha
