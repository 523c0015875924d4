#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "layered/run.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout and stderr together.
Result invoke(const std::string& args) {
  const std::string cmd = std::string("'") + LAYERED_CLI_PATH + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[512];
  while (fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct Workspace {
  fs::path dir = fs::temp_directory_path() / "layered_cli_test";
  Workspace() {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
};

}  // namespace

TEST_CASE("cli: --version prints the library version") {
  const Result r = invoke("--version");
  CHECK(r.status == 0);
  CHECK(r.out.find(layered::version()) != std::string::npos);
}

TEST_CASE("cli: cases prints the four catalog entries") {
  const Result r = invoke("cases");
  CHECK(r.status == 0);
  for (const char* name : {"bubble:", "hot_cold:", "shear:", "igw:"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(r.out.find("grid=600x20") != std::string::npos);
}

TEST_CASE("cli: a short run with flag overrides writes its outputs") {
  Workspace ws;
  const fs::path cfg = ws.write("tiny.cfg", "case = bubble\nnx = 8\nnz = 4\ntf = 100\n");
  const fs::path out = ws.dir / "out";
  const Result r =
      invoke("run '" + cfg.string() + "' -q --tf 0 --output_dir='" + out.string() + "' --cfl 0.3");
  CHECK(r.status == 0);
  CHECK(fs::exists(out / "snap_t000000.csv"));
  CHECK(fs::exists(out / "diagnostics.csv"));
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("cli: configuration errors exit 1 with one error line and no outputs") {
  Workspace ws;
  const fs::path out = ws.dir / "never";
  const fs::path cfg = ws.write("bad.cfg", "case = bubble\nbc_x = diagonal\noutput_dir = " + out.string() + "\n");
  Result r = invoke("run '" + cfg.string() + "'");
  CHECK(r.status == 1);
  CHECK(r.out.rfind("error: config: ", 0) == 0);
  CHECK(r.out.find("{wall, periodic}") != std::string::npos);
  CHECK_FALSE(fs::exists(out));

  const fs::path good = ws.write("good.cfg", "case = bubble\n");
  r = invoke("run '" + good.string() + "' --grid 3");
  CHECK(r.status == 1);
  CHECK(r.out.find("unknown key 'grid'") != std::string::npos);

  r = invoke("run '" + (ws.dir / "absent.cfg").string() + "'");
  CHECK(r.status == 1);
  CHECK(r.out.find("absent.cfg") != std::string::npos);

  r = invoke("run '" + good.string() + "' --nx");
  CHECK(r.status == 1);
}

TEST_CASE("cli: missing subcommand is a usage error") {
  CHECK(invoke("").status == 1);
  CHECK(invoke("launch").status == 1);
}
