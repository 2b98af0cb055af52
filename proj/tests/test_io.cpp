#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hy/io.hpp"
#include "oracles.hpp"

using namespace hy;
namespace fs = std::filesystem;

namespace {

const fs::path kData = fs::path(HY_SOURCE_DIR) / "data";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_error(const std::string& text, const std::function<void(const Node&)>& parse) {
  const JsonSource src(text, "input.json");
  try {
    parse(Node(src));
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

/// Runs the CLI; returns its exit status and fills stdout and stderr.
int run(const std::string& args, std::string* out = nullptr, std::string* err = nullptr) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("hy_test_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path o = dir / ("out" + std::to_string(counter)), e = dir / ("err" + std::to_string(counter++));
  const std::string cmd = std::string(HY_BINARY) + " " + args + " >" + o.string() + " 2>" + e.string();
  const int status = std::system(cmd.c_str());
  if (out) *out = slurp(o);
  if (err) *err = slurp(e);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string system_path(const std::string& name) { return (kData / "systems" / (name + ".json")).string(); }

const std::vector<std::string> kGolden = {"a1", "a2", "a3", "b2", "b2_w21", "i2_5"};

}  // namespace

TEST(SystemJson, FilesAreCanonical) {
  for (const auto& entry : fs::directory_iterator(kData / "systems")) {
    const CoxeterSystem sys = load_system(entry.path().string());
    EXPECT_EQ(dump(system_to_json(sys)), slurp(entry.path())) << entry.path();
  }
}

TEST(SystemJson, InfiniteBondSurvives) {
  const CoxeterSystem sys = load_system(system_path("i2_inf_w21"));
  EXPECT_TRUE(sys.infinite_bond(0, 1));
  EXPECT_EQ(sys.weight(0), 2);
  const JsonSource src(dump(system_to_json(sys)), "again");
  EXPECT_EQ(system_from_json(Node(src)), sys);
}

TEST(SystemJson, SchemaErrorsPointAtTheLine) {
  const std::string text = "{\n  \"rank\": 2,\n  \"matrix\": [[1, 3], [4, 1]]\n}\n";
  const std::string msg = format_error(text, [](const Node& n) { system_from_json(n); });
  EXPECT_NE(msg.find("input.json:"), std::string::npos) << msg;
  EXPECT_NE(msg.find(":3:"), std::string::npos) << msg;
  const std::string bad_weight = "{\"rank\": 1, \"matrix\": [[1]], \"weights\": [0]}";
  EXPECT_FALSE(format_error(bad_weight, [](const Node& n) { system_from_json(n); }).empty());
  EXPECT_THROW(JsonSource("{\"rank\": ", "trunc"), FormatError);
}

TEST(LaurentJson, RoundTrip) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(-6, 6), coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent p;
    for (int k = 0; k < 4; ++k) p += Laurent::monomial(deg(rng), coeff(rng));
    const JsonSource src(dump(laurent_to_json(p)), "p");
    EXPECT_EQ(laurent_from_json(Node(src)), p);
  }
  EXPECT_EQ(laurent_to_json(Laurent::monomial(-2, 3) + Laurent(1)).dump(), "{\"coeffs\":{\"-2\":3,\"0\":1}}");
}

TEST(LaurentJson, StrictExponentKeys) {
  for (const char* key : {"+1", "01", "-0", "-01", "x", "1.5", "", " 1", "1 ", "99999999999"}) {
    const std::string text = std::string("{\"coeffs\": {\n  \"") + key + "\": 1}}";
    const std::string msg = format_error(text, [](const Node& n) { laurent_from_json(n); });
    EXPECT_NE(msg.find("input.json:2:"), std::string::npos) << key << " -> " << msg;
  }
  EXPECT_FALSE(format_error("{\"coeffs\": {\"1\": 0}}", [](const Node& n) { laurent_from_json(n); }).empty());
  EXPECT_TRUE(format_error("{\"coeffs\": {\"-10\": 2}}", [](const Node& n) { laurent_from_json(n); }).empty());
}

TEST(ModuleJson, RoundTrips) {
  for (const auto& g : {oracle::a2(), oracle::b2(2, 1), oracle::i2(5)}) {
    const auto& sys = g->system();
    const auto m = induce(p_mu_table(g, sign_module<Integer>(sys, GeneratorSet{0})));
    const JsonSource a(dump(module_to_json(m)), "module");
    EXPECT_EQ(module_from_json(Node(a), sys), m);
    const auto w = to_wgraph(m);
    const std::string text = dump(wgraph_to_json(w));
    const JsonSource b(text, "wgraph");
    EXPECT_EQ(wgraph_from_json(Node(b), sys), w);
    EXPECT_EQ(module_from_json(Node(b), sys), m);
    EXPECT_EQ(dump(wgraph_to_json(wgraph_from_json(Node(b), sys))), text);
  }
}

TEST(ModuleJson, NonDiagonalModule) {
  const auto sys = oracle::a1()->system();
  OmegaModule<Integer> m(sys, GeneratorSet{0}, 2);
  SparseMatrix<Integer> E(2, 2);
  E.set(0, 0, 1);
  E.set(0, 1, 1);
  m.set_E(0, E);
  const JsonSource src(dump(module_to_json(m)), "m");
  EXPECT_EQ(module_from_json(Node(src), sys), m);
}

TEST(ModuleJson, IntegerVertexReferencesAndErrors) {
  const auto sys = oracle::a1()->system();
  const std::string ok =
      R"({"J": [1], "vertices": ["a", "b"], "labels": [[1], []], "edges": [{"s": 1, "from": 1, "to": 0, "weights": {"0": 1}}]})";
  const JsonSource src(ok, "ok");
  const auto g = wgraph_from_json(Node(src), sys);
  ASSERT_EQ(g.edges.size(), 1u);
  const std::string bad = "{\"J\": [1], \"vertices\": [\"a\"],\n \"labels\": [[1]],\n \"edges\": [{\"s\": 1, \"from\": \"a\", \"to\": \"zz\", \"weights\": {\"0\": 1}}]}";
  const std::string msg = format_error(bad, [&](const Node& n) { wgraph_from_json(n, sys); });
  EXPECT_NE(msg.find("input.json:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("zz"), std::string::npos) << msg;
}

TEST(TableJson, RoundTripAndInvariants) {
  for (const auto& g : {oracle::a3(), oracle::b2(2, 1), oracle::i2(5)})
    for (GeneratorSet J : {GeneratorSet{}, GeneratorSet{0}}) {
      const auto m = sign_module<Integer>(g->system(), J);
      const auto t = p_mu_table(g, m);
      const std::string text = dump(table_to_json(t));
      const JsonSource src(text, "table");
      const auto back = table_from_json(Node(src), g, m);
      EXPECT_EQ(dump(table_to_json(back)), text);
      EXPECT_TRUE(check_table_invariants(back).ok());
      EXPECT_EQ(induce(back), induce(t));
    }
}

TEST(TableJson, RejectsEntriesOutsideTheOrder) {
  const auto g = oracle::a2();
  const auto m = trivial_module<Integer>(g->system(), GeneratorSet{});
  const std::string text = "{\"J\": [],\n \"p\": {\"1|2\": [[{\"coeffs\": {\"1\": 1}}]]},\n \"mu\": {}}";
  const std::string msg = format_error(text, [&](const Node& n) { table_from_json(n, g, m); });
  EXPECT_NE(msg.find("input.json:2:"), std::string::npos) << msg;
}

TEST(Golden, LoadSaveIsIdentity) {
  for (const auto& name : kGolden) {
    const auto g = std::make_shared<const CoxeterGroup>(load_system(system_path(name)));
    const fs::path dir = kData / "golden" / name;
    const auto S = g->system();
    for (const auto& [file, m] : {std::pair{"table.json", trivial_module<Integer>(S, GeneratorSet{})},
                                  std::pair{"table_J1_sign.json", sign_module<Integer>(S, GeneratorSet{0})}}) {
      const auto src = JsonSource::from_file((dir / file).string());
      const auto t = table_from_json(Node(src), g, m);
      EXPECT_EQ(dump(table_to_json(t)), slurp(dir / file)) << name << "/" << file;
      EXPECT_TRUE(check_table_invariants(t).ok());
    }
    const auto wsrc = JsonSource::from_file((dir / "wgraph_J1_sign.json").string());
    EXPECT_EQ(dump(wgraph_to_json(wgraph_from_json(Node(wsrc), S))), slurp(dir / "wgraph_J1_sign.json"));
  }
}

TEST(Golden, LibraryReproducesFiles) {
  for (const auto& name : kGolden) {
    const auto g = std::make_shared<const CoxeterGroup>(load_system(system_path(name)));
    const fs::path dir = kData / "golden" / name;
    const auto S = g->system();
    const auto kl = p_mu_table(g, trivial_module<Integer>(S, GeneratorSet{}));
    EXPECT_EQ(dump(table_to_json(kl)), slurp(dir / "table.json")) << name;
    const auto ts = p_mu_table(g, sign_module<Integer>(S, GeneratorSet{0}));
    EXPECT_EQ(dump(table_to_json(ts)), slurp(dir / "table_J1_sign.json")) << name;
    EXPECT_EQ(dump(wgraph_to_json(to_wgraph(induce(ts), induced_basis_names(ts)))), slurp(dir / "wgraph_J1_sign.json"))
        << name;
    EXPECT_EQ(dump(cells_to_json(cell_partition(induce(kl)), induced_basis_names(kl))), slurp(dir / "cells.json"))
        << name;
  }
}

TEST(Cli, GoldenOutputsAreByteIdentical) {
  for (const auto& name : kGolden) {
    const fs::path dir = kData / "golden" / name;
    const std::string sys = "--system " + system_path(name);
    std::string out;
    ASSERT_EQ(run("table " + sys, &out), 0);
    EXPECT_EQ(out, slurp(dir / "table.json"));
    ASSERT_EQ(run("table " + sys + " -J 1 --module sign --jobs 3", &out), 0);
    EXPECT_EQ(out, slurp(dir / "table_J1_sign.json"));
    ASSERT_EQ(run("induce " + sys + " -J 1 --module sign", &out), 0);
    EXPECT_EQ(out, slurp(dir / "wgraph_J1_sign.json"));
    ASSERT_EQ(run("cells " + sys + " --descent largest", &out), 0);
    EXPECT_EQ(out, slurp(dir / "cells.json"));
  }
}

TEST(Cli, ModuleFilesAreAccepted) {
  const std::string graph = (kData / "golden" / "a2" / "wgraph_J1_sign.json").string();
  std::string out;
  EXPECT_EQ(run("verify --system " + system_path("a2") + " --module " + graph + " --check axioms", &out), 0);
  EXPECT_EQ(run("induce --system " + system_path("a2") + " -J 1,2 --module " + graph, &out), 0);
  EXPECT_EQ(run("induce --system " + system_path("a2") + " -J 1 --module " + graph), 2);
}

TEST(Cli, ExitCodes) {
  std::string out, err;
  const std::string a2 = "--system " + system_path("a2");
  EXPECT_EQ(run("verify " + a2 + " -J 1 --check oracle --check e-nonzero", &out), 0);
  EXPECT_NE(out.find("oracle: 18/18 checks passed"), std::string::npos) << out;
  EXPECT_EQ(run("verify " + a2 + " --check nonsense"), 2);
  EXPECT_EQ(run("table"), 2);
  EXPECT_EQ(run("table --system /nonexistent.json", nullptr, &err), 2);
  EXPECT_NE(err.find("cannot open"), std::string::npos) << err;
  EXPECT_EQ(run("table " + a2 + " -J 3"), 2);
  EXPECT_EQ(run("table " + a2 + " --module nope.json"), 2);
  EXPECT_EQ(run("verify " + system_path("a3").insert(0, "--system ") + " -J 1,2 --check induced-cells --subset 1"), 2);
  EXPECT_EQ(run("table --system " + system_path("i2_inf"), nullptr, &err), 2);
  EXPECT_NE(err.find("length cutoff"), std::string::npos) << err;
  EXPECT_EQ(run("table --system " + system_path("i2_inf") + " --max-length 4", &out), 0);
  EXPECT_EQ(run("cells --system " + system_path("i2_inf") + " --max-length 4", nullptr, &err), 2);
  EXPECT_NE(err.find("truncated"), std::string::npos) << err;
  EXPECT_EQ(run("--help", &out), 0);
}

TEST(Cli, MalformedInputNamesTheLine) {
  const fs::path p = fs::temp_directory_path() / "hy_test_io_bad_system.json";
  std::ofstream(p) << "{\n  \"rank\": 2,\n  \"matrix\": [[1, 3],\n             [3, 1]],\n  \"weights\": [1, -1]\n}\n";
  std::string err;
  EXPECT_EQ(run("table --system " + p.string(), nullptr, &err), 2);
  EXPECT_NE(err.find(p.string() + ":5:"), std::string::npos) << err;
  fs::remove(p);
}

TEST(Cli, DotOutput) {
  const fs::path p = fs::temp_directory_path() / "hy_test_io_a2.dot";
  EXPECT_EQ(run("cells --system " + system_path("a2") + " --dot " + p.string()), 0);
  const std::string dot = slurp(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u) << dot;
  EXPECT_NE(dot.find("cluster_3"), std::string::npos);
  fs::remove(p);
}
