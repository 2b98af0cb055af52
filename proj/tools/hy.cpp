// Command-line front end: tables, induced W-graphs, cells and verification.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hy/hy.hpp"

namespace {

using namespace hy;

constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

/// Usage and input problems, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string system_path;
  std::string J = "";
  bool J_given = false;
  std::string module = "trivial";
  unsigned jobs = default_jobs(1);
  std::optional<int> max_length;
  std::string descent = "smallest";
};

struct Context {
  std::shared_ptr<const CoxeterGroup> group;
  GeneratorSet J;
  OmegaModule<Integer> module;
  TableOptions options;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("error writing '" + path + "'");
}

GeneratorSet parse_set(const std::string& text, int rank) {
  try {
    return parse_generator_list(text, rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Context load_context(const Common& c) {
  const CoxeterSystem sys = load_system(c.system_path);
  auto group = std::make_shared<const CoxeterGroup>(sys, c.max_length);
  GeneratorSet J = parse_set(c.J, sys.rank());
  std::optional<OmegaModule<Integer>> m;
  if (c.module == "sign") {
    m = sign_module<Integer>(sys, J);
  } else if (c.module == "trivial") {
    m = trivial_module<Integer>(sys, J);
  } else if (c.module == "regular") {
    m = J.size() == 0 ? trivial_module<Integer>(sys, J) : kl_module<Integer>(group, J, c.jobs);
  } else {
    const auto src = JsonSource::from_file(c.module);
    m = module_from_json(Node(src), sys);
    if (c.J_given && m->J() != J) throw UsageError("-J does not match the J of module '" + c.module + "'");
    J = m->J();
    const Report rep = validate(*m);
    if (!rep.ok()) {
      std::ostringstream os;
      os << "module '" << c.module << "' is not an Omega_J-module: " << rep;
      throw UsageError(os.str());
    }
  }
  Context ctx{group, J, std::move(*m), {}};
  ctx.options.jobs = c.jobs;
  if (c.descent == "largest") ctx.options.descent = DescentChoice::largest;
  return ctx;
}

PMuTable<Integer> direct_table(const Context& ctx) {
  const auto cosets = std::make_shared<const ParabolicCosets>(ctx.group, ctx.J, ctx.group->system().generators());
  return p_mu_table(cosets, ctx.module, ctx.options);
}

/// "1;1,2" -> the flag J ⊂ {1} ⊂ {1,2} ⊂ S (J and S are implied).
std::vector<GeneratorSet> parse_flag(const std::string& text, GeneratorSet J, const CoxeterSystem& sys) {
  std::vector<GeneratorSet> flag{J};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const GeneratorSet K = parse_set(part, sys.rank());
    if (K != flag.back()) flag.push_back(K);
  }
  if (flag.back() != sys.generators()) flag.push_back(sys.generators());
  try {
    check_flag(flag, J, sys.generators());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return flag;
}

Json module_json(const OmegaModule<Integer>& m, const std::vector<std::string>& names) {
  for (Generator s : m.J().to_vector())
    if (!m.E(s).is_diagonal()) return module_to_json(m);
  return wgraph_to_json(to_wgraph(m, names));
}

int report(const std::string& name, const Report& rep) {
  std::cout << name << ": " << rep;
  return rep.ok() ? 0 : kCheckFailed;
}

int run_check(const std::string& check, const Context& ctx, const std::string& K_text, const std::string& subset) {
  const auto& g = ctx.group;
  const CoxeterSystem& sys = g->system();
  auto need_K = [&]() {
    if (K_text.empty() && check != "mackey") throw UsageError("--check " + check + " needs -K");
    return K_text.empty() ? ctx.J : parse_set(K_text, sys.rank());
  };
  try {
    if (check == "axioms") {
      const auto t = direct_table(ctx);
      Report rep;
      rep.merge(validate(ctx.module), "input module: ");
      rep.merge(check_table_invariants(t), "table: ");
      rep.merge(validate(induce(t)), "induced module: ");
      return report(check, rep);
    }
    if (check == "h-linearity") return report(check, verify_h_linearity(direct_table(ctx)));
    if (check == "transitivity") {
      const GeneratorSet K = need_K();
      if (!ctx.J.is_subset_of(K)) throw UsageError("transitivity needs J ⊆ K");
      return report(check, transitivity_check(g, ctx.J, K, ctx.module));
    }
    if (check == "mackey") return report(check, mackey_check(g, need_K(), ctx.module));
    if (check == "mu-factorize") {
      const GeneratorSet K = need_K();
      if (!ctx.J.is_subset_of(K)) throw UsageError("mu-factorize needs J ⊆ K");
      return report(check, mu_factorize_check(g, K, ctx.module));
    }
    if (check == "oracle") {
      const auto t = direct_table(ctx);
      const HeckeShadow<Integer> shadow(t.cosets_ptr(), ctx.module, ctx.options.jobs);
      Report rep;
      rep.merge(check_involution(shadow), "involution: ");
      const auto pi = pi_recursion(shadow, ctx.options.jobs);
      rep.merge(check_fixed_point(shadow, pi), "fixed point: ");
      for (std::size_t z = 0; z < t.size(); ++z)
        for (std::size_t x = 0; x < z; ++x)
          rep.check(pi.at(x, z) == t.p(x, z),
                    [&] { return "pi(" + t.cosets().name(x) + "," + t.cosets().name(z) + ") != p"; });
      return report(check, rep);
    }
    if (check == "e-nonzero") return report(check, e_nonzero_check<Integer>(g, ctx.J));
    if (check == "induced-cells") {
      if (subset.empty()) throw UsageError("--check induced-cells needs --subset");
      std::vector<ElementId> C;
      std::stringstream ss(subset);
      std::string name;
      while (std::getline(ss, name, ',')) {
        try {
          C.push_back(g->id_of_word(parse_word(name, sys.rank())));
        } catch (const std::exception& e) {
          throw UsageError("bad element '" + name + "' in --subset: " + e.what());
        }
      }
      try {
        return report(check, induced_cells_check<Integer>(g, ctx.J, C));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) throw;
    std::cout << check << ": FAIL " << e.what() << "\n";
    return kCheckFailed;
  }
  throw UsageError("unknown check '" + check + "'");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--system", c.system_path, "Coxeter system JSON file")->required();
  sub->add_option("-J", c.J, "parabolic generators, e.g. \"1,2\" (empty for none)");
  sub->add_option("--module", c.module, "sign | trivial | regular | path to a module or W-graph JSON file");
  sub->add_option("--jobs", c.jobs, "worker threads (default: HY_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_option("--max-length", c.max_length, "enumerate only elements of length < N (infinite groups)");
  sub->add_option("--descent", c.descent, "left descent used by the recursion")
      ->check(CLI::IsMember({"smallest", "largest"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Howlett-Yin induction of W-graph modules"};
  app.require_subcommand(1);
  Common common;

  std::string out, dot, flag, K_text, subset;
  std::vector<std::string> checks;

  auto* table = app.add_subcommand("table", "compute the p/mu table of D_J on a module");
  add_common(table, common);
  table->add_option("--flag", flag, "intermediate sets of a flag, e.g. \"1;1,2\" (mu only)");
  table->add_option("--out", out, "output file (default stdout)");

  auto* induce_cmd = app.add_subcommand("induce", "emit the induced W-graph");
  add_common(induce_cmd, common);
  induce_cmd->add_option("--out", out, "JSON output file");
  induce_cmd->add_option("--dot", dot, "DOT output file");

  auto* cells = app.add_subcommand("cells", "left cells of the induced W-graph");
  add_common(cells, common);
  cells->add_option("--out", out, "JSON output file");
  cells->add_option("--dot", dot, "DOT output file");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, common);
  verify
      ->add_option("--check", checks,
                   "axioms | h-linearity | transitivity | mackey | oracle | mu-factorize | e-nonzero | induced-cells")
      ->required()
      ->check(CLI::IsMember({"axioms", "h-linearity", "transitivity", "mackey", "oracle", "mu-factorize",
                             "e-nonzero", "induced-cells"}));
  verify->add_option("-K", K_text, "intermediate parabolic set for transitivity / mackey / mu-factorize");
  verify->add_option("--subset", subset, "comma-separated elements of W_J for induced-cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  for (auto* sub : {table, induce_cmd, cells, verify})
    if (sub->parsed()) common.J_given = sub->count("-J") > 0;

  try {
    const Context ctx = load_context(common);
    if (table->parsed()) {
      if (!flag.empty()) {
        const auto f = parse_flag(flag, ctx.J, ctx.group->system());
        write_text(out, dump(table_to_json(mu_inductive(ctx.group, f, ctx.module, ctx.options.jobs))));
      } else {
        write_text(out, dump(table_to_json(direct_table(ctx))));
      }
      return 0;
    }
    if (induce_cmd->parsed() || cells->parsed()) {
      const auto t = direct_table(ctx);
      const auto m = induce(t);
      const auto names = induced_basis_names(t);
      if (induce_cmd->parsed()) {
        if (!out.empty() || dot.empty()) write_text(out, dump(module_json(m, names)));
        if (!dot.empty()) write_text(dot, wgraph_to_dot(to_wgraph(m, names)));
        return 0;
      }
      const auto cp = cell_partition(m);
      if (!out.empty() || dot.empty()) write_text(out, dump(cells_to_json(cp, names)));
      if (!dot.empty()) write_text(dot, cells_to_dot(to_wgraph(m, names), cp));
      return 0;
    }
    int status = 0;
    for (const auto& check : checks) status = std::max(status, run_check(check, ctx, K_text, subset));
    return status;
  } catch (const std::exception& e) {
    std::cerr << "hy: " << e.what() << "\n";
    return kUsageError;
  }
}
