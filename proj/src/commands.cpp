#include "qha/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "qha/bimodule.hpp"
#include "qha/braided.hpp"
#include "qha/copath.hpp"
#include "qha/qcomb.hpp"
#include "qha/quantum_group.hpp"
#include "qha/semipath.hpp"
#include "qha/taft.hpp"

namespace qha {

namespace {

struct Job {
  const CommandOptions& opts;
  const JobConfig& cfg;

  long cutoff(long fallback) const { return opts.cutoff.value_or(cfg.cutoff.value_or(fallback)); }
  long bound(long fallback) const { return opts.bound.value_or(cfg.bound.value_or(fallback)); }
  std::uint64_t seed() const { return static_cast<std::uint64_t>(opts.seed.value_or(cfg.seed.value_or(1))); }
  std::optional<std::string> algebra() const { return opts.algebra ? opts.algebra : cfg.algebra; }
  std::vector<std::string> literals() const { return opts.literals.empty() ? cfg.literals : opts.literals; }

  const ESC& esc() const {
    if (!cfg.esc) throw SchemaError("this command needs an \"esc\" section");
    return *cfg.esc;
  }
  RSC rsc() const {
    if (cfg.rsc) return *cfg.rsc;
    if (cfg.esc) return esc_to_crsc(*cfg.esc);
    throw SchemaError("this command needs an \"rsc\" or \"esc\" section");
  }
  HopfQuiver quiver(bool custom_cosets) const {
    const RSC r = rsc();
    if (!custom_cosets || !cfg.rsc) return HopfQuiver(r);
    std::vector<CosetSystem> cs;
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
      const auto& reps = k < cfg.cosets.size() ? cfg.cosets[k] : std::vector<Element>{};
      cs.push_back(reps.empty() ? CosetSystem(r.group, r.classes[k].cls) : CosetSystem(r.group, r.classes[k].cls, reps));
    }
    return HopfQuiver(r, cs);
  }
  bool has_custom_cosets() const {
    for (const auto& c : cfg.cosets)
      if (!c.empty()) return true;
    return false;
  }
  std::string default_algebra() const { return cfg.rsc ? "copath" : "taft"; }
};

void add_all_checks(Report& r, std::vector<CheckResult> cs) {
  for (auto& c : cs) r.add(std::move(c));
}

std::vector<Element> window_of(const Group& G) {
  if (G.finite()) return G.elements();
  std::vector<Element> w{G.identity()};
  for (int k = 0; k < G.rank(); ++k) {
    w.push_back(G.generator(k));
    w.push_back(G.inv(G.generator(k)));
  }
  return w;
}

Flavor flavor_of(const Job& job) {
  const std::string f = job.opts.flavor.value_or(job.cfg.flavor.value_or("linear"));
  if (f == "tensor") return Flavor::tensor;
  if (f == "symmetric") return Flavor::symmetric;
  if (f == "linear") return Flavor::linear;
  throw SchemaError("unknown flavor '" + f + "'");
}

void cmd_classify(const Job& job, Report& rep) {
  if (!job.cfg.group) throw SchemaError("classify needs a group");
  const Group& G = *job.cfg.group;
  const auto reps = classify_rsc(G, job.cfg.ramification, job.bound(200000));
  rep.info(std::to_string(reps.size()) + " classes");
  for (std::size_t k = 0; k < reps.size(); ++k) rep.info("  " + std::to_string(k + 1) + ": " + reps[k].str());
  CheckResult distinct{"representatives pairwise non-isomorphic", true, 0, ""};
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      ++distinct.checked;
      if (rsc_isomorphic(reps[a], reps[b])) distinct.fail(std::to_string(a + 1) + " ~ " + std::to_string(b + 1));
    }
  rep.add(distinct);
  if (job.cfg.rsc) {
    CheckResult found{"configured RSC matches exactly one representative", true, 1, ""};
    std::size_t hits = 0;
    for (const auto& r : reps)
      if (rsc_isomorphic(*job.cfg.rsc, r)) ++hits;
    if (hits != 1) found.fail(std::to_string(hits) + " matches");
    rep.add(found);
  }
}

void cmd_multiply(const Job& job, Report& rep) {
  const auto lits = job.literals();
  if (lits.size() != 2) throw SchemaError("multiply needs exactly two literals");
  const std::string alg = job.algebra().value_or(job.default_algebra());
  const auto cutoff = static_cast<std::size_t>(job.cutoff(4));
  if (alg == "copath") {
    const CopathAlgebra c(ArrowBimodule(job.quiver(true)), cutoff);
    const Path a = c.quiver().parse_path(lits[0]), b = c.quiver().parse_path(lits[1]);
    rep.info(c.render(single(a)) + " . " + c.render(single(b)) + " = " + c.render(c.multiply(a, b)));
  } else if (alg == "semipath") {
    const SemipathAlgebra s(ArrowBimodule(job.quiver(true)), cutoff);
    const TensorWord a = s.parse(lits[0]), b = s.parse(lits[1]);
    rep.info(s.render(a) + " . " + s.render(b) + " = " + s.render(s.multiply(a, b)));
  } else if (alg == "taft") {
    const TaftAlgebra t(job.esc());
    const TaftWord a = t.parse(lits[0]), b = t.parse(lits[1]);
    rep.info(t.render(a) + " . " + t.render(b) + " = " + t.render(t.multiply(t.normal_form(a), t.normal_form(b))));
  } else {
    throw SchemaError("multiply supports copath, semipath and taft, not '" + alg + "'");
  }
}

long top_degree(const TaftAlgebra& t, long fallback) {
  long top = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t.nilpotency(j) == 0) return fallback;
    top += t.nilpotency(j) - 1;
  }
  return top;
}

void cmd_basis(const Job& job, Report& rep) {
  const std::string alg = job.algebra().value_or("taft");
  if (alg == "taft") {
    const TaftAlgebra t(job.esc());
    const long d = job.cutoff(top_degree(t, 4));
    const auto b = t.diagram_basis(d);
    rep.info("diagram basis through degree " + std::to_string(d) + ": " + std::to_string(b.size()) + " elements");
    for (const auto& x : b) rep.info("  " + t.render(x));
    if (t.group().finite()) rep.info("PBW basis g * diagram: " + std::to_string(t.basis(d).size()) + " elements");
  } else if (alg == "semipath") {
    const SemipathAlgebra s(ArrowBimodule(job.quiver(true)), static_cast<std::size_t>(job.cutoff(2)));
    const auto b = coinvariants_basis(s, s.cutoff());
    rep.info("coinvariant basis through degree " + std::to_string(s.cutoff()) + ": " + std::to_string(b.size()) + " elements");
    for (const auto& x : b) rep.info("  " + s.render(x));
  } else if (alg == "braided") {
    const BraidedAlgebra r(job.esc(), flavor_of(job), static_cast<std::size_t>(job.cutoff(3)));
    for (std::size_t d = 0; d <= r.cutoff(); ++d) {
      std::string line = "degree " + std::to_string(d) + ":";
      for (const auto& w : r.basis(d)) line += " " + r.render(w);
      rep.info(line);
    }
  } else {
    throw SchemaError("basis supports taft, semipath and braided, not '" + alg + "'");
  }
}

void cmd_dimension(const Job& job, Report& rep) {
  const TaftAlgebra t(job.esc());
  std::string ns;
  for (std::size_t j = 0; j < t.size(); ++j) ns += (j ? ", " : "") + std::to_string(t.nilpotency(j));
  rep.info("nilpotency orders (0 = infinite): " + ns);
  const auto dim = t.dimension();
  if (!dim) {
    rep.info("dimension: infinite");
    return;
  }
  rep.info("dimension: " + std::to_string(*dim));
  CheckResult c{"formula |G| N_1 ... N_t equals PBW enumeration", true, 1, ""};
  const auto n = static_cast<long>(t.basis(top_degree(t, 0)).size());
  if (n != *dim) c.fail("enumerated " + std::to_string(n));
  rep.add(c);
}

void cmd_verify(const Job& job, Report& rep) {
  const std::string alg = job.algebra().value_or(job.default_algebra());
  const long degree = job.cutoff(3);
  if (alg == "copath") {
    const CopathAlgebra c(ArrowBimodule(job.quiver(true)), static_cast<std::size_t>(degree));
    add_all_checks(rep, verify_bialgebra(c, static_cast<int>(degree)));
  } else if (alg == "bimodule") {
    const ArrowBimodule b(job.quiver(false));
    rep.add(check_bimodule_axioms(b));
    rep.add(check_pointed(b));
    rep.add(check_w_round_trip(b));
    rep.add(check_dual_pairing(b));
    if (job.has_custom_cosets()) {
      const ArrowBimodule other(job.quiver(true));
      rep.add(check_bimodule_axioms(other));
      rep.add(check_intertwines(b, other, coset_change_iso(b, other)));
    }
  } else if (alg == "semipath") {
    const SemipathAlgebra s(ArrowBimodule(job.quiver(true)), static_cast<std::size_t>(degree));
    add_all_checks(rep, verify_semipath(s, window_of(s.group()), static_cast<int>(degree)));
    if (job.cfg.esc) add_all_checks(rep, check_diagram_tensor(*job.cfg.esc, static_cast<int>(degree)));
  } else if (alg == "taft") {
    const TaftAlgebra t(job.esc());
    add_all_checks(rep, verify_taft(t, static_cast<int>(degree)));
    add_all_checks(rep, check_embedding(t, static_cast<int>(degree)));
    rep.add(check_confluence(t, static_cast<int>(job.bound(200)), job.seed()));
    add_all_checks(rep, presentation_check(t.esc()));
  } else if (alg == "braided") {
    const BraidedAlgebra r(job.esc(), flavor_of(job), static_cast<std::size_t>(degree));
    rep.add(check_braid_relation(r));
    add_all_checks(rep, verify_braided(r, static_cast<int>(degree)));
    rep.add(check_relations_descend(r, static_cast<int>(degree)));
  } else if (alg == "biproduct") {
    ESC dual = job.esc();
    for (auto& c : dual.chi) c = c.inverse();
    const Biproduct b(BraidedAlgebra(dual, Flavor::linear, static_cast<std::size_t>(degree)));
    add_all_checks(rep, verify_biproduct(b, window_of(dual.group), static_cast<int>(degree)));
    add_all_checks(rep, check_biproduct_iso(TaftAlgebra(job.esc()), static_cast<int>(job.bound(100)), job.seed(), static_cast<int>(degree)));
  } else {
    throw SchemaError("verify supports copath, bimodule, semipath, taft, braided and biproduct, not '" + alg + "'");
  }
}

void cmd_nichols(const Job& job, Report& rep) { add_all_checks(rep, nichols_check(job.esc(), static_cast<int>(job.cutoff(4)))); }

void cmd_serre(const Job& job, Report& rep) {
  const ESC& e = job.esc();
  if (e.size() != 2) throw SchemaError("serre needs an esc with two items");
  const long r = job.cfg.serre_r > 0 ? job.cfg.serre_r : job.opts.m.value_or(1);
  rep.info("r = " + std::to_string(r));
  add_all_checks(rep, serre_primitive_check(SerreData{e, r}));
}

void cmd_uq(const Job& job, Report& rep) {
  FLData fl;
  if (job.opts.cartan_path) {
    std::ifstream in(*job.opts.cartan_path);
    if (!in) throw SchemaError("cannot read cartan file '" + *job.opts.cartan_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    fl = parse_cartan(ss.str());
  } else if (job.cfg.fl) {
    fl = *job.cfg.fl;
  } else {
    throw SchemaError("uq needs --cartan or a \"cartan\" section");
  }
  const FLReport v = validate_fl(fl);
  rep.info("type: " + v.type());
  for (std::size_t k = 0; k < v.pass.size(); ++k) {
    CheckResult c{"FL" + std::to_string(k + 1), v.pass[k], 1, ""};
    for (const auto& f : v.failures)
      if (f.rfind(c.name + ":", 0) == 0) c.witness = f;
    rep.add(c);
  }
  const QuantumGroup u(fl);
  std::string gens;
  for (const auto& g : u.generators()) gens += (gens.empty() ? "" : " ") + g;
  rep.info("generators: " + gens);
  rep.info("relations:");
  for (const auto& r : u.relations()) rep.info("  " + r.name + ": " + r.text);
  rep.add(check_xi_symmetry(fl));
  rep.add(verify_phi_kills_I(u, fl));
  add_all_checks(rep, psi_phi_roundtrip(u));
  if (fl.n == 1) rep.add(sl2_textbook_match(u));
}

void cmd_qfact(const Job& job, Report& rep) {
  const long m = job.opts.m.value_or(job.cfg.m.value_or(5));
  const int bound = static_cast<int>(job.bound(8));
  if (m > bound) throw SchemaError("m = " + std::to_string(m) + " exceeds the enumeration bound " + std::to_string(bound));
  const Scalar q = Scalar::q();
  const Scalar f = q_factorial(m, q, QConvention::gauss);
  const Scalar s = s_m_polynomial(static_cast<int>(m), q, bound);
  rep.info("(" + std::to_string(m) + ")_q! = " + f.str());
  rep.info("S_" + std::to_string(m) + "(q) = " + s.str());
  CheckResult id{"(m)_q! = q^(m(m-1)/2) S_m(q^-1)", true, 1, ""};
  if (!(f == q.pow(m * (m - 1) / 2) * s_m_polynomial(static_cast<int>(m), q.inverse(), bound))) id.fail("m = " + std::to_string(m));
  rep.add(id);
  CheckResult zeros{"S_m(zeta_n) = 0 exactly when n <= m, n = 2..6", true, 0, ""};
  for (int n = 2; n <= 6; ++n) {
    ++zeros.checked;
    const bool zero = s_m_polynomial(static_cast<int>(m), Scalar::zeta(n), bound).is_zero();
    if (zero != (n <= m)) zeros.fail("n = " + std::to_string(n));
  }
  rep.add(zeros);
}

const std::map<std::string, std::function<void(const Job&, Report&)>>& table() {
  static const std::map<std::string, std::function<void(const Job&, Report&)>> t{
      {"classify", cmd_classify}, {"multiply", cmd_multiply}, {"basis", cmd_basis}, {"dimension", cmd_dimension},
      {"verify", cmd_verify},     {"nichols", cmd_nichols},   {"serre", cmd_serre}, {"uq", cmd_uq},
      {"qfact", cmd_qfact},
  };
  return t;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

Report run_command(const CommandOptions& opts, const JobConfig& config) {
  const auto it = table().find(opts.command);
  if (it == table().end()) throw SchemaError("unknown command '" + opts.command + "'");
  Report rep;
  rep.command = opts.command;
  it->second(Job{opts, config}, rep);
  return rep;
}

int run_cli(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.format != "text" && opts.format != "json") throw SchemaError("format must be text or json");
    for (const auto& v : {opts.cutoff, opts.bound, opts.m})
      if (v && *v <= 0) throw SchemaError("bounds must be positive");
    const JobConfig cfg = opts.config_path ? load_config(*opts.config_path) : JobConfig{};
    const Report rep = run_command(opts, cfg);
    out << (opts.format == "json" ? rep.json() : rep.text());
    return rep.ok() ? 0 : 1;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "bound exceeded: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qha
