// tsys: exact enumeration, counting, and rendering of transfer systems on a
// finite chain, plus the Catalan-tuple bijection and Fuss-Catalan checks.
//
// Exit codes: 0 success, 1 failed verification or cross-check, 2 bad usage
// or invalid input, 3 a computation refused as infeasible at the given
// bound, 4 file I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tsys/bijection.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/fuss_catalan.hpp"
#include "tsys/json_io.hpp"
#include "tsys/render.hpp"

using namespace tsys;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    text << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
  }
  return text.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON input: ") + e.what());
  }
}

void load_cache(CountTable& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // a missing cache is just cold
  table.load_csv(in);
}

void save_cache(const CountTable& table, const std::string& path) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    table.save_csv(out);
    out.flush();
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);  // atomic swap, readers never see a partial file
  if (ec) throw IoError("cannot replace " + path + ": " + ec.message());
}

void run_enumerate(int n, const std::string& format, int bound) {
  if (n > bound)
    throw InfeasibleSize("enumeration bounded at n <= " + std::to_string(bound) + ", got n = " +
                         std::to_string(n) + " (raise --bound to override)");
  std::ostringstream out;
  for (const TransferSystem& sys : enumerate_all(n)) {
    if (format == "json")
      out << system_to_json(sys).dump() << '\n';
    else
      out << render_ascii(sys) << '\n';
  }
  std::cout << out.str();
}

void run_count_systems(int n) {
  if (n < 0) throw BoundsError("system counting needs n >= 0, got " + std::to_string(n));
  std::cout << catalan(n) << '\n';
}

void run_count_pairs(int n, const std::string& method, const std::string& format, int bound,
                     const std::string& cache_path) {
  if (format == "csv") {
    if (n > bound)
      throw InfeasibleSize("core breakdown bounded at n <= " + std::to_string(bound) +
                           ", got n = " + std::to_string(n) + " (raise --bound to override)");
    std::ostringstream out;
    out << "composition;e;catalan_product;contribution\n";
    for (const CoreBreakdownRow& row : count_by_cores(n).rows) {
      const std::vector<int>& parts = row.blocks.parts();
      for (std::size_t t = 0; t < parts.size(); ++t) out << (t ? "," : "") << parts[t];
      out << ';' << row.tuple_count << ';' << row.catalan_product << ';' << row.contribution
          << '\n';
    }
    std::cout << out.str();
    return;
  }

  BigCount value;
  if (method == "brute" || method == "cores") {
    value = count_pairs(n, method == "brute" ? CountMethod::brute : CountMethod::cores, bound);
  } else {
    CountTable table;
    if (!cache_path.empty()) load_cache(table, cache_path);
    value = table.d(n, 0);
    if (!cache_path.empty()) save_cache(table, cache_path);
    if (method == "all" && n <= bound) {
      BigCount brute = count_pairs(n, CountMethod::brute, bound);
      BigCount cores = count_pairs(n, CountMethod::cores, bound);
      if (brute != value || cores != value)
        throw CheckFailed("counting methods disagree at n = " + std::to_string(n) +
                          ": recurrence " + value.str() + ", brute " + brute.str() + ", cores " +
                          cores.str());
    }
  }
  std::cout << value << '\n';
}

void run_count_table(int max_n, const std::string& cache_path) {
  if (max_n < 1) throw BoundsError("count table needs max-n >= 1, got " + std::to_string(max_n));
  CountTable table;
  if (!cache_path.empty()) load_cache(table, cache_path);
  std::ostringstream out;
  for (int n = 1; n <= max_n; ++n)
    for (int i = 0; i < n; ++i) out << n << ',' << i << ',' << table.d(n, i) << '\n';
  if (!cache_path.empty()) save_cache(table, cache_path);
  std::cout << out.str();
}

void run_sigma(bool invert, const std::string& input, const std::string& output) {
  nlohmann::json j = parse_json(read_all(input));
  std::string out;
  if (invert)
    out = system_to_json(sigma_inverse(tuple_from_json(j))).dump() + "\n";
  else
    out = tuple_to_json(sigma(system_from_json(j))).dump() + "\n";
  write_all(output, out);
}

void run_render(const std::string& kind, const std::string& input, const std::string& output) {
  TransferSystem sys = system_from_json(parse_json(read_all(input)));
  write_all(output, kind == "ascii" ? render_ascii(sys) : render_svg(sys));
}

void run_export_sequence(const std::string& name, int max_n, const std::string& output) {
  if (max_n < 0) throw BoundsError("sequence export needs max-n >= 0");
  long long p = 0, r = 0;
  if (name == "catalan") {
    p = 2;
    r = 1;
  } else if (name.rfind("a-", 0) == 0) {
    std::istringstream rest(name.substr(2));
    char dash = 0;
    if (!(rest >> p >> dash >> r) || dash != '-' || !rest.eof() || p < 1 || r < 0)
      throw InvalidParams("unknown sequence " + name);
  } else {
    throw InvalidParams("unknown sequence " + name + " (use catalan or a-<p>-<r>)");
  }
  std::ostringstream out;
  for (int n = 0; n <= max_n; ++n) out << fuss_catalan(n, p, r) << '\n';
  write_all(output, out.str());
}

// Verification suites. Each prints one summary line on success; any failure
// goes to stderr and the whole command exits 1.

long long verify_identities(int max_n) {
  long long checks = 0;
  bool ok = true;
  auto run = [&](int which, long long n, long long p, long long r, long long s) {
    IdentityReport report = check_identity(which, n, p, r, s);
    ++checks;
    if (!report.pass) {
      ok = false;
      std::cerr << "identity " << which << " fails: " << report.statement << '\n';
    }
  };
  for (long long n = 1; n <= max_n; ++n) {
    for (long long r = 1; r <= 10; ++r) run(1, n, 1, r, 1);
    for (long long p = 1; p <= 5; ++p) {
      run(3, n, p, 1, 1);
      for (long long r = 1; r <= 10; ++r) {
        run(2, n, p, r, 1);
        for (long long s = 1; s <= 10; ++s) run(4, n, p, r, s);
      }
    }
    run(5, n, 1, 1, 1);
  }
  if (!ok) throw CheckFailed("identity verification failed");
  return checks;
}

long long verify_bijection(int max_n) {
  long long checks = 0;
  bool ok = true;
  auto expect = [&](bool pass, int n, const char* what) {
    ++checks;
    if (!pass) {
      ok = false;
      std::cerr << "bijection check failed at n = " << n << ": " << what << '\n';
    }
  };
  for (int n = 1; n <= max_n; ++n) {
    std::set<CatalanTuple> image;
    for (const TransferSystem& sys : enumerate_all(n)) {
      CatalanTuple t = sigma(sys);
      expect(t.length() == n, n, "tuple length");
      expect(sigma_inverse(t) == sys, n, "round trip");
      expect(tuple_core(t) == Composition(core_blocks(sys)), n, "core blocks");
      int to_top = 0;
      for (int j = 1; j < n; ++j)
        if (sys.has(j, n)) ++to_top;
      expect(excess(t) == to_top, n, "excess law");
      image.insert(t);
    }
    auto tuples = enumerate_tuples(n);
    expect(image == std::set<CatalanTuple>(tuples.begin(), tuples.end()), n, "image");
    ++checks;
  }
  if (!ok) throw CheckFailed("bijection verification failed");
  return checks;
}

long long verify_compatibility(int max_n) {
  long long checks = 0;
  bool ok = true;
  auto expect = [&](bool pass, int n, const char* what) {
    ++checks;
    if (!pass) {
      ok = false;
      std::cerr << "compatibility check failed at n = " << n << ": " << what << '\n';
    }
  };
  for (int n = 1; n <= max_n; ++n) {
    for (const TransferSystem& a : enumerate_all(n)) {
      BigCount partners = 0;
      for (const TransferSystem& m : enumerate_all(n)) {
        bool by_def = is_compatible(a, m, CompatMode::definition);
        expect(is_compatible(a, m, CompatMode::core) == by_def, n, "core mode");
        expect(is_compatible(a, m, CompatMode::hull) == by_def, n, "hull mode");
        if (by_def) ++partners;
      }
      BigCount product = 1;
      for (int b : core_blocks(a)) product *= catalan(b);
      expect(partners == product, n, "partner count");
      expect(BigCount(static_cast<long long>(compatible_partners(a).size())) == product, n,
             "partner enumeration");
    }
    BigCount rec = count_pairs(n, CountMethod::recurrence);
    expect(count_pairs(n, CountMethod::brute, max_n) == rec, n, "brute count");
    expect(count_pairs(n, CountMethod::cores, max_n) == rec, n, "core-indexed count");
    expect(rec == fuss_catalan(n, 3, 1), n, "closed form");
  }
  if (!ok) throw CheckFailed("compatibility verification failed");
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of transfer systems on a finite chain"};
  app.require_subcommand(1);

  int n = 1;
  int max_n = -1;
  int bound = 8;
  bool invert = false;
  std::string method = "recurrence";
  std::string enum_format = "json";
  std::string pairs_format = "plain";
  std::string cache_path;
  std::string input = "-";
  std::string output = "-";
  std::string render_kind;
  std::string sequence_name;
  int identities_max = 30;
  int bijection_max = 7;
  int compatibility_max = 6;

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all transfer systems on [n]");
  cmd_enumerate->add_option("--n", n, "poset size")->required();
  cmd_enumerate->add_option("--format", enum_format, "json or ascii")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "ascii"}));
  cmd_enumerate->add_option("--bound", bound, "refuse enumeration beyond this size")
      ->capture_default_str();
  cmd_enumerate->callback([&] { run_enumerate(n, enum_format, bound); });

  auto* cmd_count = app.add_subcommand("count", "count systems or compatible pairs");
  cmd_count->require_subcommand(1);

  auto* cmd_count_systems = cmd_count->add_subcommand("systems", "number of systems on [n]");
  cmd_count_systems->add_option("--n", n, "poset size")->required();
  cmd_count_systems->callback([&] { run_count_systems(n); });

  auto* cmd_count_pairs =
      cmd_count->add_subcommand("pairs", "number of compatible pairs on [n]");
  cmd_count_pairs->add_option("--n", n, "poset size")->required();
  cmd_count_pairs->add_option("--method", method, "brute, recurrence, cores, or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"brute", "recurrence", "cores", "all"}));
  cmd_count_pairs->add_option("--format", pairs_format, "plain number or csv core breakdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "csv"}));
  cmd_count_pairs->add_option("--bound", bound, "refuse exhaustive methods beyond this size")
      ->capture_default_str();
  cmd_count_pairs->add_option("--cache-path", cache_path, "CSV cache for the count table");
  cmd_count_pairs->callback([&] { run_count_pairs(n, method, pairs_format, bound, cache_path); });

  auto* cmd_count_table =
      cmd_count->add_subcommand("table", "filtration-counted pairs d(n, i) as CSV");
  cmd_count_table->add_option("--max-n", max_n, "largest poset size")->required();
  cmd_count_table->add_option("--cache-path", cache_path, "CSV cache for the count table");
  cmd_count_table->callback([&] { run_count_table(max_n, cache_path); });

  auto* cmd_verify = app.add_subcommand("verify", "re-check the library against itself");
  cmd_verify->require_subcommand(1);

  auto* cmd_verify_identities =
      cmd_verify->add_subcommand("identities", "Fuss-Catalan identity grid");
  cmd_verify_identities->add_option("--max-n", identities_max, "largest n in the grid")
      ->capture_default_str();
  cmd_verify_identities->callback([&] {
    std::cout << "identities: ok (" << verify_identities(identities_max) << " checks)\n";
  });

  auto* cmd_verify_bijection =
      cmd_verify->add_subcommand("bijection", "tuple bijection, cores, excess");
  cmd_verify_bijection->add_option("--max-n", bijection_max, "largest poset size")
      ->capture_default_str();
  cmd_verify_bijection->callback([&] {
    std::cout << "bijection: ok (" << verify_bijection(bijection_max) << " checks)\n";
  });

  auto* cmd_verify_compat =
      cmd_verify->add_subcommand("compatibility", "modes, partner law, counting methods");
  cmd_verify_compat->add_option("--max-n", compatibility_max, "largest poset size")
      ->capture_default_str();
  cmd_verify_compat->callback([&] {
    std::cout << "compatibility: ok (" << verify_compatibility(compatibility_max) << " checks)\n";
  });

  cmd_verify->add_subcommand("all", "every suite at its default size")->callback([&] {
    std::cout << "identities: ok (" << verify_identities(30) << " checks)\n";
    std::cout << "bijection: ok (" << verify_bijection(7) << " checks)\n";
    std::cout << "compatibility: ok (" << verify_compatibility(6) << " checks)\n";
  });

  auto* cmd_sigma = app.add_subcommand("sigma", "map a system to its Catalan tuple");
  cmd_sigma->add_flag("--invert", invert, "map a tuple back to its system");
  cmd_sigma->add_option("--input", input, "JSON file, - for stdin");
  cmd_sigma->add_option("--output", output, "file, - for stdout");
  cmd_sigma->callback([&] { run_sigma(invert, input, output); });

  auto* cmd_render = app.add_subcommand("render", "draw a system");
  cmd_render->add_option("kind", render_kind, "ascii or svg")
      ->required()
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--input", input, "system JSON file, - for stdin");
  cmd_render->add_option("--output", output, "file, - for stdout");
  cmd_render->callback([&] { run_render(render_kind, input, output); });

  auto* cmd_export = app.add_subcommand("export", "write reference data");
  cmd_export->require_subcommand(1);
  auto* cmd_export_sequence =
      cmd_export->add_subcommand("sequence", "one value per line for n = 0..max-n");
  cmd_export_sequence->add_option("name", sequence_name, "catalan or a-<p>-<r>")->required();
  cmd_export_sequence->add_option("--max-n", max_n, "largest index")->required();
  cmd_export_sequence->add_option("--output", output, "file, - for stdout");
  cmd_export_sequence->callback([&] { run_export_sequence(sequence_name, max_n, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CheckFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InfeasibleSize& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
