#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpt/analysis.hpp"
#include "hpt/export.hpp"
#include "hpt/sequences.hpp"
#include "hpt/triangle.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::uint64_t resolve_max_cells(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;  // flag wins over the environment
  if (const char* env = std::getenv("HPT_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0)
      throw CLI::ValidationError("HPT_MAX_CELLS",
                                 "must be a positive decimal integer");
    return parsed;
  }
  return hpt::kDefaultMaxCells;
}

// temp file + rename, so a crashed run never leaves a half-written export
void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp);
    file << text;
    if (!file.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + out_path);
}

std::vector<hpt::Row> collect_rows(const hpt::Mosaic& mosaic, long n_max,
                                   std::uint64_t max_cells) {
  std::vector<hpt::Row> rows;
  hpt::build_stream(mosaic, n_max, [&](const hpt::Row& row) { rows.push_back(row); },
                    max_cells);
  return rows;
}

unsigned parse_suite(const std::string& token) {
  if (token == "all") return hpt::kSuiteAll;
  if (token == "rows") return hpt::kSuiteRows;
  if (token == "sums") return hpt::kSuiteSums;
  if (token == "subsums") return hpt::kSuiteSubsums;
  if (token == "lemma") return hpt::kSuiteLemma;
  throw CLI::ValidationError("--suite", "unknown suite: " + token);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic Pascal triangle toolkit for mosaics {4,q}"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> max_cells_flag;
  app.add_option("--max-cells", max_cells_flag,
                 "cell cap per build (overrides HPT_MAX_CELLS)")
      ->check(CLI::PositiveNumber);

  int q = 0;
  long n = 0, k = 0, to = 0;
  std::string format = "plain";
  std::string out_path;
  std::string suite = "all";
  std::vector<std::string> weights;
  long long lemma_args[6] = {0, 0, 0, 0, 0, 0};

  CLI::App* cmd_row = app.add_subcommand("row", "print one triangle row");
  cmd_row->fallthrough();
  cmd_row->add_option("--q", q, "mosaic parameter")->required();
  cmd_row->add_option("--n", n, "row index")->required()->check(CLI::NonNegativeNumber);
  cmd_row->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

  CLI::App* cmd_elem = app.add_subcommand("elem", "print one element value");
  cmd_elem->fallthrough();
  cmd_elem->add_option("--q", q)->required();
  cmd_elem->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_elem->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);

  CLI::App* cmd_sums = app.add_subcommand("sums", "tabulate row sums and alternating sums");
  cmd_sums->fallthrough();
  cmd_sums->add_option("--q", q)->required();
  cmd_sums->add_option("--to", to, "last row index")->required()->check(CLI::NonNegativeNumber);
  cmd_sums->add_option("--weights", weights, "weights v w for the weighted column")
      ->expected(2);
  cmd_sums->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

  CLI::App* cmd_verify = app.add_subcommand("verify", "verify identities against brute force");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--q", q)->required();
  cmd_verify->add_option("--to", to)->required()->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "rows", "sums", "subsums", "lemma"}));

  CLI::App* cmd_export = app.add_subcommand("export", "export rows as dot, csv or json");
  cmd_export->fallthrough();
  cmd_export->add_option("--q", q)->required();
  cmd_export->add_option("--to", to)->required()->check(CLI::NonNegativeNumber);
  cmd_export->add_option("--format", format)->required()
      ->check(CLI::IsMember({"dot", "csv", "json"}));
  cmd_export->add_option("--out", out_path, "output path (atomic write)");

  CLI::App* cmd_lemma = app.add_subcommand("lemma", "reduce a coupled system to a ternary recurrence");
  cmd_lemma->fallthrough();
  cmd_lemma->add_option("--u1", lemma_args[0])->required();
  cmd_lemma->add_option("--v1", lemma_args[1])->required();
  cmd_lemma->add_option("--w1", lemma_args[2])->required();
  cmd_lemma->add_option("--u2", lemma_args[3])->required();
  cmd_lemma->add_option("--v2", lemma_args[4])->required();
  cmd_lemma->add_option("--w2", lemma_args[5])->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t max_cells = resolve_max_cells(max_cells_flag);
    const bool is_verify = cmd_verify->parsed();

    try {
      if (cmd_lemma->parsed()) {
        auto [c2, c1, c0] = hpt::lemma_reduce(lemma_args[0], lemma_args[1],
                                              lemma_args[2], lemma_args[3],
                                              lemma_args[4], lemma_args[5]);
        std::cout << "c2=" << c2 << " c1=" << c1 << " c0=" << c0 << "\n";
        return 0;
      }

      const hpt::Mosaic mosaic(q);

      if (cmd_row->parsed()) {
        hpt::Row wanted;
        hpt::build_stream(
            mosaic, n,
            [&](const hpt::Row& row) {
              if (row.n == n) wanted = row;
            },
            max_cells);
        std::cout << hpt::rows_to_table(q, {wanted}, hpt::parse_format(format));
        return 0;
      }

      if (cmd_elem->parsed()) {
        std::cout << hpt::element(mosaic, n, k, max_cells).str() << "\n";
        return 0;
      }

      if (cmd_sums->parsed()) {
        hpt::SumsReport report = hpt::verify_range(mosaic, to, 0, max_cells);
        if (report.truncated) {
          std::cerr << "error: cell cap exceeded at row " << report.truncated_at
                    << "\n";
          return kExitCap;
        }
        if (weights.empty()) {
          std::cout << hpt::report_to_table(report, hpt::parse_format(format));
        } else {
          const hpt::BigInt v(weights[0]), w(weights[1]);
          std::cout << hpt::report_to_table(report, hpt::parse_format(format),
                                            &v, &w);
        }
        return 0;
      }

      if (cmd_verify->parsed()) {
        hpt::SumsReport report =
            hpt::verify_range(mosaic, to, parse_suite(suite), max_cells);
        for (const hpt::SuiteStats& s : report.suites)
          std::cout << "suite " << s.name << ": " << s.passed << " passed, "
                    << s.skipped << " skipped, " << s.failed << " failed\n";
        for (const hpt::Mismatch& m : report.failures)
          std::cout << "FAIL " << m.identity << " q=" << report.q
                    << " n=" << m.n << " expected=" << m.expected
                    << " actual=" << m.actual << "\n";
        if (report.truncated) {
          std::cerr << "error: cell cap exceeded at row " << report.truncated_at
                    << "\n";
          return kExitUsage;
        }
        return report.all_passed() ? 0 : 1;
      }

      if (cmd_export->parsed()) {
        auto rows = collect_rows(mosaic, to, max_cells);
        std::string text;
        if (format == "dot")
          text = hpt::to_dot(rows);
        else
          text = hpt::rows_to_table(q, rows, hpt::parse_format(format));
        write_output(text, out_path);
        return 0;
      }
    } catch (const hpt::CapExceededError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return is_verify ? kExitUsage : kExitCap;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
