#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "blockcheck/asymmetric.hpp"
#include "blockcheck/blocking.hpp"
#include "blockcheck/cnf.hpp"
#include "blockcheck/dimacs.hpp"
#include "blockcheck/engine.hpp"
#include "blockcheck/error.hpp"
#include "blockcheck/oracle.hpp"
#include "blockcheck/qbf.hpp"
#include "blockcheck/random.hpp"
#include "blockcheck/reductions.hpp"
#include "blockcheck/trace_io.hpp"
#include "blockcheck/varelim.hpp"

namespace blockcheck::cli {
namespace {

// check verdicts
constexpr int kBlocked = 0;
constexpr int kNotBlocked = 1;
constexpr int kUnknown = 2;

// Number of random external assignments tried by --incomplete.
constexpr std::size_t kIncompleteSamples = 4096;

struct FileError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FileError("cannot write '" + path + "'");
  os << text;
}

std::string join(std::span<const Lit> lits) {
  if (lits.empty()) return "empty";
  std::string s;
  for (Lit l : lits) {
    if (!s.empty()) s += ',';
    s += std::to_string(l.to_dimacs());
  }
  return s;
}

std::string join(const PartialAssignment& t) { return join(t.literals()); }

// Options shared by subcommands that read a formula and pick a clause.
struct Input {
  std::string path;
  bool strict = false;
};

struct ClauseChoice {
  std::string literal;
  std::size_t index = 0;
  CLI::Option* literal_opt = nullptr;
  CLI::Option* index_opt = nullptr;

  void attach(CLI::App* sub) {
    literal_opt = sub->add_option("--clause", literal, "Clause under test as \"lits 0\"");
    index_opt = sub->add_option("--clause-index", index, "0-based clause index into the input");
    literal_opt->excludes(index_opt);
  }

  Clause resolve(const DimacsResult& parsed) const {
    if (literal_opt->count()) return parse_clause(literal);
    if (index_opt->count()) {
      if (index >= parsed.clauses_in_order.size())
        throw PreconditionError("clause index " + std::to_string(index) + " out of range (" +
                                std::to_string(parsed.clauses_in_order.size()) + " clauses)");
      return parsed.clauses_in_order[index];
    }
    throw PreconditionError("one of --clause or --clause-index is required");
  }
};

DimacsResult load(const Input& in, std::ostream& err) {
  auto parsed = parse_dimacs(read_file(in.path), {.strict = in.strict});
  for (const auto& w : parsed.warnings) err << "c warning: " << w << '\n';
  return parsed;
}

struct CheckArgs {
  Input input;
  ClauseChoice clause;
  std::string property;
  std::size_t k = 0;
  CLI::Option* k_opt = nullptr;
  std::size_t ext_cap = kDefaultExtCap;
  bool incomplete = false;
  std::uint64_t seed = 1;
};

std::optional<std::size_t> k_of(const CheckArgs& a) {
  if (a.k_opt->count()) return a.k;
  return std::nullopt;
}

// Samples external assignments when the exhaustive super-blocking check is
// over the cap. A failing sample refutes; otherwise the answer stays open.
int sample_super_blocking(const Formula& f, const Clause& c, const CheckArgs& a,
                          std::size_t ext_count, std::ostream& out, std::ostream& err) {
  const auto ext = external_variables(f, c);
  const auto env = resolution_environment_ids(f, c);
  Rng rng(a.seed);
  err << "c sampling " << kIncompleteSamples << " external assignments, seed " << a.seed << '\n';
  for (std::size_t i = 0; i < kIncompleteSamples; ++i) {
    PartialAssignment tau;
    for (Var v : ext) tau.assign(v, std::bernoulli_distribution(0.5)(rng));
    std::vector<Clause> candidates;
    for (ClauseId id : env)
      if (!tau.satisfies(f.clause(id))) candidates.push_back(f.clause(id));
    if (!find_blocking_set(candidates, c, k_of(a))) {
      out << "NOT-BLOCKED failing-tau " << join(tau) << '\n';
      return kNotBlocked;
    }
  }
  out << "UNKNOWN ext-cap-exceeded " << ext_count << '\n';
  return kUnknown;
}

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  const Formula& f = parsed.formula;
  const Clause c = a.clause.resolve(parsed);
  const std::string& p = a.property;

  try {
    if (p == "bc") {
      if (auto w = is_literal_blocked(f, c)) {
        out << "BLOCKED witness-literal " << w->literal->to_dimacs() << '\n';
        return kBlocked;
      }
      out << "NOT-BLOCKED\n";
      return kNotBlocked;
    }
    if (p == "setbc") {
      if (auto w = is_set_blocked(f, c, k_of(a))) {
        out << "BLOCKED witness-set " << join(w->set->lits()) << '\n';
        return kBlocked;
      }
      out << "NOT-BLOCKED\n";
      return kNotBlocked;
    }
    if (p == "supbc") {
      SuperBlockingResult r;
      try {
        r = is_super_blocked(f, c, {.max_size = k_of(a), .ext_cap = a.ext_cap, .keep_per_tau = true});
      } catch (const CapExceeded& e) {
        if (a.incomplete) return sample_super_blocking(f, c, a, e.count(), out, err);
        throw;
      }
      if (!r.blocked()) {
        out << "NOT-BLOCKED failing-tau " << join(*r.failing_tau) << '\n';
        return kNotBlocked;
      }
      out << "BLOCKED per-tau";
      for (const auto& e : r.witness->per_tau)
        out << ' ' << join(e.tau) << ':' << join(e.blocking_set.lits());
      out << '\n';
      return kBlocked;
    }
    if (p == "varelim") {
      if (sem_blocked_via_elimination(f, c)) {
        out << "BLOCKED eliminated-empty\n";
        return kBlocked;
      }
      out << "NOT-BLOCKED residual-clauses " << eliminate_local_variables(f, c).size() << '\n';
      return kNotBlocked;
    }
    if (p == "sem-oracle") {
      if (auto tau = semantic_blocking_counterexample(f, c)) {
        out << "NOT-BLOCKED counterexample " << join(*tau) << '\n';
        return kNotBlocked;
      }
      out << "BLOCKED\n";
      return kBlocked;
    }
    if (p == "redundant-oracle") {
      const bool r = is_redundant(f, c);
      out << (r ? "REDUNDANT\n" : "NOT-REDUNDANT\n");
      return r ? kBlocked : kNotBlocked;
    }
    const auto prop = parse_property(p);
    if (!prop) throw PreconditionError("unknown property '" + p + "'");
    const auto e = check_clause(f, c, *prop, {.property = *prop, .k = k_of(a), .ext_cap = a.ext_cap});
    if (!e) {
      out << "NOT-REDUNDANT\n";
      return kNotBlocked;
    }
    out << "REDUNDANT " << p;
    if (!e->witness.empty()) out << " witness " << join(e->witness);
    out << '\n';
    return kBlocked;
  } catch (const CapExceeded& e) {
    out << (p == "supbc" ? "UNKNOWN ext-cap-exceeded " : "UNKNOWN cap-exceeded ") << e.count() << '\n';
    err << "c " << e.what() << '\n';
    return kUnknown;
  }
}

std::vector<Property> parse_property_list(const std::string& text) {
  if (text.empty()) {
    auto all = all_properties();
    return {all.begin(), all.end()};
  }
  std::vector<Property> out;
  std::stringstream ss(text);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    auto p = parse_property(tag);
    if (!p) throw PreconditionError("unknown property '" + tag + "'");
    out.push_back(*p);
  }
  return out;
}

struct ClassifyArgs {
  Input input;
  std::string properties;
  std::size_t k = 0;
  CLI::Option* k_opt = nullptr;
  std::size_t ext_cap = kDefaultExtCap;
  std::size_t jobs = 1;
  std::string out_path;
};

int run_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  const auto props = parse_property_list(a.properties);
  EliminationConfig config{.ext_cap = a.ext_cap};
  if (a.k_opt->count()) config.k = a.k;
  const auto report = classify(parsed.formula, props, config, std::max<std::size_t>(1, a.jobs));

  std::ostringstream os;
  os << "clause";
  for (Property p : report.properties) os << '\t' << property_tag(p);
  os << '\n';
  for (std::size_t i = 0; i < report.clauses.size(); ++i) {
    os << report.clauses[i].to_string() << (report.clauses[i].empty() ? "0" : " 0");
    for (Cell cell : report.cells[i])
      os << '\t' << (cell == Cell::yes ? "yes" : cell == Cell::no ? "no" : "cap");
    os << '\n';
  }
  emit(a.out_path, os.str(), out);
  return 0;
}

struct EliminateArgs {
  Input input;
  std::string property;
  std::size_t k = 0;
  CLI::Option* k_opt = nullptr;
  std::size_t ext_cap = kDefaultExtCap;
  std::string order = "id";
  std::size_t rounds = 1000;
  bool compact = false;
  std::string out_path;
  std::string trace_path;
};

int run_eliminate(const EliminateArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  const auto prop = parse_property(a.property);
  if (!prop) throw PreconditionError("unknown property '" + a.property + "'");
  EliminationConfig config{.property = *prop,
                           .k = std::nullopt,
                           .ext_cap = a.ext_cap,
                           .order = a.order == "length" ? ClauseOrder::descending_length
                                                        : ClauseOrder::ascending_id,
                           .max_rounds = a.rounds,
                           .compact = a.compact};
  if (a.k_opt->count()) config.k = a.k;
  const auto result = eliminate_clauses(parsed.formula, config);
  err << "c removed " << result.trace.entries.size() << " of " << parsed.formula.size()
      << " clauses in " << result.rounds << " rounds\n";
  for (const auto& c : result.skipped) err << "c skipped (cap) " << c.to_string() << " 0\n";
  emit(a.out_path, write_dimacs(result.formula, parsed.declared_vars), out);
  if (!a.trace_path.empty()) emit(a.trace_path, write_trace(result.trace), out);
  return 0;
}

struct ReconstructArgs {
  Input input;
  std::string trace_path;
  std::string model_path;
  std::string out_path;
};

int run_reconstruct(const ReconstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  const auto trace = parse_trace(read_file(a.trace_path));
  const auto model = parse_model(read_file(a.model_path));
  const auto repaired = reconstruct_model(trace, parsed.formula, model);
  if (!satisfies(repaired, parsed.formula))
    throw ValidationError("reconstructed assignment does not satisfy the original formula");
  emit(a.out_path, write_model(repaired), out);
  return 0;
}

struct EncodeArgs {
  Input input;
  ClauseChoice clause;
  std::string out_path;
};

int run_encode(const EncodeArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  emit(a.out_path, write_qdimacs(encode_qbf(parsed.formula, a.clause.resolve(parsed))), out);
  return 0;
}

struct SolveArgs {
  Input input;
  std::string out_path;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = load(a.input, err);
  const auto model = find_model(parsed.formula);
  if (!model) {
    emit(a.out_path, "s UNSATISFIABLE\n", out);
    return 1;
  }
  emit(a.out_path, "s SATISFIABLE\n" + write_model(*model), out);
  return 0;
}

struct ReductionArgs {
  std::string kind;
  Input input;
  std::string out_path;
  std::string clause_path;
};

int run_reduction(const ReductionArgs& a, std::ostream& out, std::ostream& err) {
  ReductionInstance r;
  if (a.kind == "qbf2supbc") {
    r = forall_exists_to_superblocking(parse_qdimacs(read_file(a.input.path)));
  } else {
    const auto parsed = load(a.input, err);
    if (a.kind == "sat2setbc") r = sat_to_setblocking(parsed.formula);
    else r = unsat_to_1superblocking(parsed.formula);
  }
  std::ostringstream os;
  os << "c reduction " << a.kind << '\n';
  for (const auto& m : r.variables) os << "c map " << m.name << ' ' << Lit::pos(m.var).to_dimacs() << '\n';
  os << "c clause " << r.clause.to_string() << " 0\n";
  os << write_dimacs(r.formula, r.formula.max_var());
  emit(a.out_path, os.str(), out);

  std::string clause_path = a.clause_path;
  if (clause_path.empty() && !a.out_path.empty() && a.out_path != "-") clause_path = a.out_path + ".clause";
  if (!clause_path.empty()) emit(clause_path, r.clause.to_string() + " 0\n", out);
  return 0;
}

struct RandomArgs {
  std::string kind = "cnf";
  std::size_t vars = 6;
  std::size_t clauses = 10;
  std::size_t min_len = 1;
  std::size_t max_len = 3;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string out_path;
};

int run_random(const RandomArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = a.seed_opt->count() ? a.seed : std::random_device{}();
  err << "c seed " << seed << '\n';
  Rng rng(seed);
  std::ostringstream os;
  os << "c gen-random " << a.kind << " seed " << seed << '\n';
  if (a.kind == "qbf") {
    os << write_qdimacs(random_forall_exists(rng, a.vars, a.clauses));
  } else if (a.kind == "instance") {
    const auto inst = random_instance(rng, {.max_vars = a.vars, .max_clauses = a.clauses, .max_len = a.max_len});
    os << "c clause " << inst.clause.to_string() << " 0\n";
    os << write_dimacs(inst.formula, a.vars);
  } else {
    if (a.min_len > a.max_len || a.min_len == 0)
      throw PreconditionError("clause lengths must satisfy 1 <= min-len <= max-len");
    os << write_dimacs(random_cnf(rng, {.num_vars = a.vars,
                                        .num_clauses = a.clauses,
                                        .min_len = a.min_len,
                                        .max_len = a.max_len}),
                       a.vars);
  }
  emit(a.out_path, os.str(), out);
  return 0;
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("input", in.path, "DIMACS input file")->required();
  sub->add_flag("--strict", in.strict, "Reject header mismatches instead of warning");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clause redundancy checks, elimination and reconstruction for CNF formulas",
               "blockcheck"};
  app.require_subcommand(1);

  const std::vector<std::string> check_props = {
      "bc", "setbc", "supbc", "varelim", "sem-oracle", "redundant-oracle", "t", "s",
      "at", "as", "abc", "rt", "rs", "rat", "ras"};

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide one clause and print the verdict");
  add_input(c, check.input);
  check.clause.attach(c);
  c->add_option("--property", check.property)->required()->check(CLI::IsMember(check_props));
  check.k_opt = c->add_option("--k", check.k, "Largest blocking-set size")->check(CLI::PositiveNumber);
  c->add_option("--ext-cap", check.ext_cap, "Largest external-variable count for supbc");
  c->add_flag("--incomplete", check.incomplete, "Sample external assignments past the cap");
  c->add_option("--seed", check.seed, "Seed for --incomplete sampling");

  ClassifyArgs cls;
  auto* cl = app.add_subcommand("classify", "Membership matrix of every clause as TSV");
  add_input(cl, cls.input);
  cl->add_option("--property", cls.properties, "Comma-separated property tags (default: all)");
  cls.k_opt = cl->add_option("--k", cls.k)->check(CLI::PositiveNumber);
  cl->add_option("--ext-cap", cls.ext_cap);
  cl->add_option("--jobs", cls.jobs, "Worker threads");
  cl->add_option("--out", cls.out_path);

  EliminateArgs elim;
  auto* el = app.add_subcommand("eliminate", "Remove redundant clauses to a fixpoint");
  add_input(el, elim.input);
  el->add_option("--property", elim.property)->required();
  elim.k_opt = el->add_option("--k", elim.k)->check(CLI::PositiveNumber);
  el->add_option("--ext-cap", elim.ext_cap);
  el->add_option("--order", elim.order, "Scan order")->check(CLI::IsMember({"id", "length"}));
  el->add_option("--rounds", elim.rounds, "Round limit");
  el->add_flag("--compact", elim.compact, "Omit per-assignment supbc witnesses from the trace");
  el->add_option("--out", elim.out_path, "Simplified DIMACS (default: stdout)");
  el->add_option("--trace", elim.trace_path, "Trace file for reconstruction");

  ReconstructArgs rec;
  auto* re = app.add_subcommand("reconstruct", "Repair a model of the simplified formula");
  add_input(re, rec.input);
  re->add_option("--trace", rec.trace_path)->required();
  re->add_option("--model", rec.model_path)->required();
  re->add_option("--out", rec.out_path);

  EncodeArgs enc;
  auto* en = app.add_subcommand("encode-qbf", "QDIMACS encoding of semantic blocking");
  add_input(en, enc.input);
  enc.clause.attach(en);
  en->add_option("--out", enc.out_path);

  SolveArgs solve;
  auto* so = app.add_subcommand("solve-brute", "Brute-force satisfiability (exit 0 SAT, 1 UNSAT)");
  add_input(so, solve.input);
  so->add_option("--out", solve.out_path);

  ReductionArgs red;
  auto* gr = app.add_subcommand("gen-reduction", "Generate a hardness-reduction instance");
  gr->add_option("kind", red.kind)->required()->check(CLI::IsMember({"sat2setbc", "qbf2supbc", "unsat2ksupbc"}));
  add_input(gr, red.input);
  gr->add_option("--out", red.out_path);
  gr->add_option("--clause-out", red.clause_path, "Clause file (default: <out>.clause)");

  RandomArgs rnd;
  auto* ra = app.add_subcommand("gen-random", "Seeded random CNF, (F, C) instance or 2-QBF");
  ra->add_option("--kind", rnd.kind)->check(CLI::IsMember({"cnf", "instance", "qbf"}));
  ra->add_option("--vars", rnd.vars)->check(CLI::PositiveNumber);
  ra->add_option("--clauses", rnd.clauses)->check(CLI::PositiveNumber);
  ra->add_option("--min-len", rnd.min_len);
  ra->add_option("--max-len", rnd.max_len)->check(CLI::PositiveNumber);
  rnd.seed_opt = ra->add_option("--seed", rnd.seed);
  ra->add_option("--out", rnd.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return run_check(check, out, err);
    if (*cl) return run_classify(cls, out, err);
    if (*el) return run_eliminate(elim, out, err);
    if (*re) return run_reconstruct(rec, out, err);
    if (*en) return run_encode(enc, out, err);
    if (*so) return run_solve(solve, out, err);
    if (*gr) return run_reduction(red, out, err);
    if (*ra) return run_random(rnd, out, err);
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace blockcheck::cli
