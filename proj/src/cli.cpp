#include "rank3/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rank3/errors.hpp"
#include "rank3/genconn.hpp"
#include "rank3/graph6.hpp"
#include "rank3/oracle.hpp"
#include "rank3/pipeline.hpp"
#include "rank3/quasipoly.hpp"
#include "rank3/theorems.hpp"

namespace rank3 {

namespace fs = std::filesystem;

namespace {

fs::path default_output_dir() {
  if (const char* dir = std::getenv("RANK3_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    return dir;
  }
  return ".";
}

// Relative paths go under the default output directory.
fs::path output_path(const std::string& given, const std::string& fallback) {
  const fs::path p = given.empty() ? fs::path(fallback) : fs::path(given);
  return p.is_absolute() ? p : default_output_dir() / p;
}

void ensure_parent(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
}

void check_coatoms(int c) {
  if (c < 1 || c > kMaxCoatoms) {
    throw InputError("--coatoms must be in 1.." + std::to_string(kMaxCoatoms));
  }
}

int cmd_generate(int c, const std::string& out_dir, int jobs, std::ostream& out) {
  check_coatoms(c);
  const fs::path dir = output_path(out_dir, ".");
  fs::create_directories(dir);
  const auto graphs = generate_connection_graphs(c, -1, jobs);

  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest) throw InputError("cannot write " + (dir / "manifest.txt").string());
  std::size_t begin = 0;
  for (int r = 0; r <= max_connector_count(c); ++r) {
    std::size_t end = begin;
    while (end < graphs.size() && graphs[end].connector_count() == r) ++end;
    const std::string name = graph6_filename(c, r);
    write_graph6_file(dir / name, std::span(graphs).subspan(begin, end - begin));
    manifest << name << ' ' << end - begin << '\n';
    begin = end;
  }
  manifest << "total " << graphs.size() << '\n';
  out << "c = " << c << ": " << graphs.size() << " connection graphs written to " << dir.string()
      << '\n';
  return kExitOk;
}

int cmd_count(int c, int a_max, const std::string& graphs_dir, const std::string& out_file,
              int jobs, bool memoize, std::ostream& out) {
  check_coatoms(c);
  if (a_max < 0) throw InputError("--max-atoms must be nonnegative");
  MemoStats stats;
  CountTable table;
  if (!graphs_dir.empty()) {
    const auto graphs = read_graph6_directory(graphs_dir, c);
    if (memoize) {
      table = count_lattices(c, a_max, graphs, jobs, &stats);
    } else {
      LatticeCounter counter(c, a_max, false);
      for (const auto& g : graphs) counter.add(g);
      table = counter.table();
      stats = counter.stats();
    }
  } else {
    table = count_lattices(c, a_max, jobs, &stats);
  }
  const fs::path path = output_path(out_file, "R_c" + std::to_string(c) + ".csv");
  ensure_parent(path);
  table.write_csv(path);
  out << "graphs " << stats.graphs_processed << ", cycle indices " << stats.distinct_cycle_indices
      << ", trivial action " << stats.trivial_action << '\n';
  out << "wrote a = 0.." << a_max << " to " << path.string() << '\n';
  return kExitOk;
}

int cmd_fit(int c, const std::string& values, const std::string& out_file, int period, int degree,
            int threshold, std::ostream& out) {
  check_coatoms(c);
  const CountTable table = CountTable::read_csv(fs::path(values), c);
  const int n = period > 0 ? period : default_period(c);
  const int d = degree >= 0 ? degree : default_degree(c);
  const int n0 = threshold >= 0 ? threshold : default_threshold(c);
  const Quasipolynomial q = fit_quasipolynomial(table, n, d, n0);

  const fs::path path = output_path(out_file, "R_c" + std::to_string(c) + ".json");
  ensure_parent(path);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path.string() + " for writing");
  file << q.to_json();
  if (!file) throw InputError("error writing " + path.string());

  out << "period " << q.period() << ", degree " << q.degree() << ", agrees from a = "
      << q.n0_observed() << " (guaranteed from " << q.n0_guaranteed() << ")\n";
  for (int i = q.degree(); i >= 0; --i) {
    const auto pattern = q.coefficient_pattern(i);
    out << "  a^" << i << ": ";
    if (pattern.size() == 1) {
      out << pattern[0].get_str() << '\n';
    } else {
      out << "period " << pattern.size() << " [";
      for (std::size_t k = 0; k < pattern.size(); ++k) out << (k ? ", " : "") << pattern[k].get_str();
      out << "]\n";
    }
  }
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_eval(const std::string& json_file, const std::string& atoms, std::ostream& out,
             std::ostream& err) {
  std::ifstream in(json_file, std::ios::binary);
  if (!in) throw InputError("cannot open " + json_file);
  std::stringstream text;
  text << in.rdbuf();
  const Quasipolynomial q = Quasipolynomial::from_json(text.str());
  mpz_class a;
  if (atoms.empty() || a.set_str(atoms, 10) != 0 || a < 0) {
    throw InputError("--atoms must be a nonnegative integer");
  }
  if (!q.in_agreement_range(a)) {
    err << "note: a = " << a.get_str() << " is below a = " << q.n0_observed()
        << ", where the fit was seen to agree with the table\n";
  }
  out << q.evaluate(a).get_str() << '\n';
  return kExitOk;
}

int cmd_verify(int max_total, int theorem_a_max, int jobs, std::ostream& out) {
  if (max_total < 2) throw InputError("--max-total must be at least 2");
  if (max_total > 14) throw ResourceLimitError("--max-total is limited to 14");

  bool ok = true;
  std::map<int, CountTable> tables;
  for (int c = 1; c < max_total; ++c) tables[c] = count_lattices(c, max_total - c, jobs);
  for (int c = 1; c < max_total; ++c) {
    for (int a = 1; c + a <= max_total; ++a) {
      const mpz_class oracle = brute_force_count(c, a);
      const mpz_class& pipeline = tables[c][a];
      const mpz_class& dual = tables[a][c];
      const bool match = oracle == pipeline && pipeline == dual;
      ok = ok && match;
      out << (match ? "ok  " : "BAD ") << "R(" << c << "," << a << ") = " << pipeline.get_str();
      if (!match) out << " (oracle " << oracle.get_str() << ", R(" << a << "," << c << ") = "
                      << dual.get_str() << ")";
      out << '\n';
    }
  }

  if (theorem_a_max > 0) {
    std::map<int, CountTable> closed;
    for (int c = 2; c <= 5; ++c) closed[c] = count_lattices(c, theorem_a_max, jobs);
    for (const auto& check : verify_theorems(closed)) {
      ok = ok && check.passed;
      out << (check.passed ? "ok  " : "BAD ") << check.name << ": " << check.detail << '\n';
    }
  }
  out << (ok ? "verification passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts graded rank-3 lattices by coatoms and atoms."};
  app.require_subcommand(1);

  int coatoms = 0;
  int jobs = 1;
  int max_atoms = 0;
  int period = 0;
  int degree = -1;
  int threshold = -1;
  int max_total = 0;
  int theorem_a_max = 0;
  bool no_memo = false;
  std::string out_path;
  std::string graphs_dir;
  std::string values;
  std::string quasipoly;
  std::string atoms;

  auto* generate = app.add_subcommand("generate", "write all connection graphs as graph6 files");
  generate->add_option("--coatoms,-c", coatoms, "number of coatoms")->required();
  generate->add_option("--out,-o", out_path, "output directory");
  generate->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "tabulate R(c,a) for a = 0..max-atoms as CSV");
  count->add_option("--coatoms,-c", coatoms, "number of coatoms")->required();
  count->add_option("--max-atoms,-a", max_atoms, "largest a")->required();
  count->add_option("--graphs,-g", graphs_dir, "directory of conn_c*_r*.g6 files");
  count->add_option("--out,-o", out_path, "CSV file");
  count->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--no-memo", no_memo, "compute every graph's series separately");

  auto* fit = app.add_subcommand("fit", "fit a quasipolynomial to a CSV table");
  fit->add_option("--coatoms,-c", coatoms, "number of coatoms")->required();
  fit->add_option("--values,-v", values, "CSV from count")->required();
  fit->add_option("--out,-o", out_path, "JSON file");
  fit->add_option("--period", period, "quasiperiod (default lcm(1..c))");
  fit->add_option("--degree", degree, "degree bound (default c-1)");
  fit->add_option("--threshold", threshold, "fit from this a (default c(c-1)/2)");

  auto* eval = app.add_subcommand("eval", "evaluate a fitted quasipolynomial");
  eval->add_option("--quasipoly,-q", quasipoly, "JSON from fit")->required();
  eval->add_option("--atoms,-a", atoms, "argument a")->required();

  auto* verify = app.add_subcommand("verify", "compare pipeline, oracle and closed forms");
  verify->add_option("--max-total,-n", max_total, "check all c + a <= n")->required();
  verify->add_option("--theorems", theorem_a_max, "also check the closed forms up to this a");
  verify->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate) return cmd_generate(coatoms, out_path, jobs, out);
    if (*count) return cmd_count(coatoms, max_atoms, graphs_dir, out_path, jobs, !no_memo, out);
    if (*fit) return cmd_fit(coatoms, values, out_path, period, degree, threshold, out);
    if (*eval) return cmd_eval(quasipoly, atoms, out, err);
    if (*verify) return cmd_verify(max_total, theorem_a_max, jobs, out);
  } catch (const ArityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArity;
  } catch (const FitRejected& e) {
    err << "error: " << e.what() << '\n';
    return kExitFitRejected;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace rank3
