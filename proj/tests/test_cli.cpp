#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "qbound/matrix_io.hpp"

namespace fs = std::filesystem;
using qbound::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "qbound_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, BuildToric) {
  const Result r = call({"build", "toric", "--L", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[[18,2,3]]"), std::string::npos);
  EXPECT_NE(r.out.find("w=4"), std::string::npos);
}

TEST(Cli, BuildHypergraphProductFromAlist) {
  const fs::path rep3 = scratch_dir() / "rep3.alist";
  qbound::write_matrix(rep3, qbound::repetition_cycle(3));
  const Result r = call({"build", "hgp", "--h1", rep3.string(), "--h2", rep3.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["n"], 18);
  EXPECT_EQ(j["version"], qbound::cli::kToolVersion);
}

TEST(Cli, MalformedAlistIsValidationError) {
  const fs::path bad = scratch_dir() / "bad.alist";
  std::ofstream(bad) << "3 2\n2 2\n1 1 1\n";
  const Result r = call({"build", "hgp", "--h1", bad.string(), "--h2", bad.string()});
  EXPECT_EQ(r.code, qbound::cli::kExitValidation);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, AnticommutingCssIsValidationError) {
  const fs::path gx = scratch_dir() / "gx.txt";
  const fs::path gz = scratch_dir() / "gz.txt";
  std::ofstream(gx) << "110\n";
  std::ofstream(gz) << "100\n";
  const Result r = call({"build", "css", "--gx", gx.string(), "--gz", gz.string()});
  EXPECT_EQ(r.code, qbound::cli::kExitValidation);
}

TEST(Cli, UnknownOptionRejected) {
  EXPECT_EQ(call({"census", "toric", "--L", "3", "--bogus", "1"}).code, qbound::cli::kExitValidation);
  EXPECT_EQ(call({"census", "toric", "--L", "3", "--sector", "w"}).code, qbound::cli::kExitValidation);
  EXPECT_EQ(call({}).code, qbound::cli::kExitValidation);
}

TEST(Cli, ConfigFileUnknownKeyRejected) {
  const fs::path cfg = scratch_dir() / "run.toml";
  std::ofstream(cfg) << "[census]\nL = 3\nnot_an_option = 1\n";
  EXPECT_EQ(call({"--config", cfg.string(), "census", "toric"}).code, qbound::cli::kExitValidation);
}

TEST(Cli, ThresholdSolve) {
  Result r = call({"threshold", "--theorem", "2", "--w", "4", "--D", "inf", "--solve", "y"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0.333333333\n");
  r = call({"threshold", "--theorem", "2", "--w", "4", "--D", "inf", "--solve", "pZ"});
  EXPECT_EQ(r.out.substr(0, 8), "0.028595");
}

TEST(Cli, ThresholdCurveMonotone) {
  const Result r = call({"threshold", "--theorem", "3c", "--w", "4", "--q", "0.001", "--curve", "y:p"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  double previous = 1.0;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'y') continue;
    const double p = std::stod(line.substr(line.find(',') + 1));
    EXPECT_LE(p, previous);
    previous = p;
    ++rows;
  }
  EXPECT_EQ(rows, 11);
}

TEST(Cli, CensusEmbedsProvenanceAndBound) {
  const Result r = call({"census", "toric", "--L", "3", "--sector", "x", "--m-max", "6", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# tool: qbound", 0), 0u);
  EXPECT_NE(r.out.find("# config: {"), std::string::npos);
  EXPECT_NE(r.out.find("\n3,6,6,6,"), std::string::npos) << r.out;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'm') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 10u);
    EXPECT_LE(std::stoull(cells[4]), std::stoull(cells[5]));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(cells[1 + i], cells[6 + i]);
  }
}

TEST(Cli, CensusDeterministicAcrossWorkers) {
  std::string first;
  for (const char* workers : {"1", "2", "8"}) {
    const fs::path out = scratch_dir() / (std::string("census_") + workers + ".csv");
    const Result r = call({"census", "toric", "--L", "3", "--sector", "x", "--m-max", "7", "--workers", workers,
                           "--output", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(out);
    if (first.empty()) first = text;
    EXPECT_EQ(text, first);
  }
}

TEST(Cli, WorkerEnvironmentVariable) {
  ::setenv("QBOUND_WORKERS", "two", 1);
  EXPECT_EQ(call({"census", "toric", "--L", "2", "--m-max", "2"}).code, qbound::cli::kExitValidation);
  ::setenv("QBOUND_WORKERS", "2", 1);
  EXPECT_EQ(call({"census", "toric", "--L", "2", "--m-max", "2"}).code, 0);
  ::unsetenv("QBOUND_WORKERS");
}

TEST(Cli, ResourceCapExitCode) {
  const Result r = call({"census", "toric", "--L", "4", "--m-max", "8", "--max-stored", "10"});
  EXPECT_EQ(r.code, qbound::cli::kExitResource) << r.err;
}

TEST(Cli, FtExtendWritesMatrices) {
  const fs::path p = scratch_dir() / "P.alist";
  const fs::path q = scratch_dir() / "Q.alist";
  const Result r = call({"ft-extend", "toric", "--L", "2", "--ft-errors", "z", "--rounds", "3", "--p-out", p.string(),
                         "--q-out", q.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("N=32"), std::string::npos);
  EXPECT_NE(r.out.find("PQ^T=0: pass"), std::string::npos);
  const qbound::BitMatrix pm = qbound::read_matrix(p);
  const qbound::BitMatrix qm = qbound::read_matrix(q);
  EXPECT_EQ(pm.cols(), 32u);
  EXPECT_LE(pm.max_row_weight(), 6u);
  EXPECT_TRUE(pm.multiply_transpose(qm).is_zero());
}

TEST(Cli, FtExtendSingleRoundIsBareCode) {
  const fs::path p = scratch_dir() / "P1.txt";
  ASSERT_EQ(call({"ft-extend", "toric", "--L", "2", "--rounds", "1", "--p-out", p.string()}).code, 0);
  EXPECT_EQ(qbound::read_matrix(p), qbound::toric_code(2).gz());
}

TEST(Cli, BadProbabilityTableDominated) {
  const Result r = call({"badprob", "--kind", "depol", "--m-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find(",0\n"), std::string::npos);
  EXPECT_NE(r.out.find("m,y,p,exact,bound,dominated"), std::string::npos);
}

TEST(Cli, FitFromCensusFile) {
  const fs::path csv = scratch_dir() / "fit_census.csv";
  ASSERT_EQ(call({"census", "toric", "--L", "4", "--m-max", "8", "--output", csv.string()}).code, 0);
  const Result r = call({"fit", "--census", csv.string(), "--field", "irreducible", "--fit-m-min", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["growth_base"].get<double>(), 1.0);
  EXPECT_LE(j["growth_base"].get<double>(), 3.0);
  EXPECT_EQ(j["weights_used"].size(), 3u);  // 4, 6, 8
}
