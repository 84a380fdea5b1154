// Integration tests for the tsys command line tool. Takes the binary path as
// argv[1], drives it through a shell, and checks output text and exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool pass, const std::string& what) {
  if (!pass) {
    ++failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

std::string cli;
fs::path work;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  fs::path in = work / "stdin.txt";
  fs::path out = work / "stdout.txt";
  std::ofstream(in, std::ios::binary) << stdin_text;
  std::string command = cli + " " + args + " < " + in.string() + " > " + out.string() +
                        " 2> " + (work / "stderr.txt").string();
  int raw = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out);
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string kBlocks412 =
    R"({"n":7,"relations":[[1,2],[1,3],[1,4],[1,5],[1,6],[1,7],)"
    R"([2,3],[2,4],[2,5],[2,6],[2,7],[3,4],[6,7]]})";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-tsys>\n";
    return 1;
  }
  cli = argv[1];
  work = fs::temp_directory_path() / ("tsys_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(work);

  RunResult r = run("count systems --n 4");
  check(r.code == 0 && r.out == "14\n", "count systems --n 4");
  check(run("count systems --n 0").out == "1\n", "count systems --n 0");

  r = run("count pairs --n 5 --method recurrence");
  check(r.code == 0 && r.out == "273\n", "count pairs --n 5");
  for (int n = 1; n <= 6; ++n) {
    std::string expect = run("count pairs --n " + std::to_string(n)).out;
    for (const char* method : {"brute", "cores", "all"})
      check(run("count pairs --n " + std::to_string(n) + " --method " + method).out == expect,
            std::string("methods agree at n = ") + std::to_string(n) + ", " + method);
  }

  r = run("enumerate --n 3");
  auto enumerated = lines(r.out);
  check(r.code == 0 && enumerated.size() == 5, "enumerate --n 3 emits five systems");
  check(!enumerated.empty() && enumerated.front() == R"({"n":3,"relations":[[1,2],[1,3],[2,3]]})",
        "enumeration starts at the complete system");
  check(!enumerated.empty() && enumerated.back() == R"({"n":3,"relations":[]})",
        "enumeration ends at the empty system");

  r = run("sigma", kBlocks412);
  check(r.code == 0 && r.out == "{\"entries\":[4,0,1,2]}\n", "sigma on the worked example");
  r = run("sigma --invert", r.out);
  check(r.code == 0 && r.out == kBlocks412 + "\n", "sigma --invert undoes sigma");

  fs::path sys_file = work / "sys.json";
  std::ofstream(sys_file) << R"({"n":2,"relations":[[1,2]]})";
  r = run("render ascii --input " + sys_file.string());
  check(r.code == 0 && r.out == "nodes: 1 2\n1 -> 2\n", "render ascii");
  fs::path svg_file = work / "out.svg";
  r = run("render svg --input " + sys_file.string() + " --output " + svg_file.string());
  std::string svg = slurp(svg_file);
  check(r.code == 0 && r.out.empty() && svg.find("<line x1=\"30\"") != std::string::npos,
        "render svg writes the file");
  check(run("render svg", kBlocks412).out == run("render svg", kBlocks412).out,
        "render svg is deterministic");

  r = run("export sequence catalan --max-n 5");
  check(r.code == 0 && r.out == "1\n1\n2\n5\n14\n42\n", "catalan sequence export");
  r = run("export sequence a-3-1 --max-n 8");
  auto seq = lines(r.out);
  check(r.code == 0 && seq.size() == 9 && seq.front() == "1" && seq.back() == "43263",
        "a-3-1 sequence export");
  r = run("export sequence a-3-2 --max-n 5");
  check(r.code == 0 && r.out == "1\n2\n7\n30\n143\n728\n", "a-3-2 sequence export");

  r = run("count table --max-n 6");
  auto table = lines(r.out);
  check(r.code == 0 && table.size() == 21, "count table --max-n 6 has 21 rows");
  check(r.out.find("3,0,12\n") != std::string::npos &&
            r.out.find("6,0,1428\n") != std::string::npos,
        "count table values");

  r = run("count pairs --n 3 --format csv");
  check(r.code == 0 &&
            r.out ==
                "composition;e;catalan_product;contribution\n"
                "3;1;5;5\n"
                "2,1;2;2;4\n"
                "1,2;1;2;2\n"
                "1,1,1;1;1;1\n",
        "core breakdown for n = 3");

  check(run("verify bijection --max-n 4").code == 0, "verify bijection");
  check(run("verify compatibility --max-n 3").code == 0, "verify compatibility");
  check(run("verify identities --max-n 4").code == 0, "verify identities");

  // a cold cache, a warm cache, and no cache must all print the same count
  fs::path cache = work / "cache.csv";
  std::string bare = run("count pairs --n 6 --method recurrence").out;
  std::string cold = run("count pairs --n 6 --cache-path " + cache.string()).out;
  check(fs::exists(cache), "cache file is created");
  std::string warm = run("count pairs --n 6 --cache-path " + cache.string()).out;
  check(bare == cold && cold == warm && bare == "1428\n", "cache does not change answers");
  check(run("count table --max-n 6 --cache-path " + cache.string()).out ==
            run("count table --max-n 6").out,
        "count table ignores cache contents in output");
  std::ofstream(work / "bad.csv") << "1,1,99\n";
  check(run("count pairs --n 4 --cache-path " + (work / "bad.csv").string()).code == 2,
        "corrupt cache is rejected");

  check(run("enumerate --n 12").code == 3, "enumeration over the bound exits 3");
  check(run("enumerate --n 12 --bound 12").code == 0, "raising the bound allows it");
  check(run("count pairs --n 9 --method brute").code == 3, "brute force over the bound exits 3");
  check(run("count pairs --n 0").code == 2, "count pairs rejects n = 0");
  check(run("sigma --input " + (work / "missing.json").string()).code == 4,
        "missing input file exits 4");
  check(run("render svg --input " + sys_file.string() + " --output /nonexistent/dir/x.svg")
                .code == 4,
        "unwritable output exits 4");
  check(run("frobnicate").code == 2, "unknown subcommand exits 2");
  check(run("sigma", "{\"n\":3,\"relations\":[[1,3]]}").code == 2,
        "invalid system JSON exits 2");
  check(run("sigma", "not json").code == 2, "unparseable input exits 2");
  check(run("sigma", R"({"n":0,"relations":[]})").code == 2, "sigma rejects the empty chain");
  check(run("--help").code == 0, "--help exits 0");

  fs::remove_all(work);
  if (failures == 0) std::cout << "test_cli: all checks passed\n";
  return failures;
}
