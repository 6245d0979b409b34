#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include <fptate/fptate.hpp>

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw CLI::ValidationError("range", "expected a:b, got '" + text + "'");
  Range r;
  try {
    r.lo = std::stoi(text.substr(0, colon));
    r.hi = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected integers in a:b, got '" + text + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

std::pair<long, long> parse_nk(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--nk", "expected k,d, got '" + text + "'");
  try {
    return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--nk", "expected integers in k,d, got '" + text + "'");
  }
}

int emit(const fptate::Report& report, const std::string& json_path, const std::string& csv_path) {
  std::string json = report.to_json_text();
  std::fwrite(json.data(), 1, json.size(), stdout);
  std::fflush(stdout);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
      return 2;
    }
    out << json;
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", csv_path.c_str());
      return 2;
    }
    out << report.to_csv();
  }
  for (const fptate::Verdict& v : report.verdicts())
    std::fprintf(stderr, "%s  %s\n", v.pass ? "pass" : "FAIL", v.name.c_str());
  int failed = 0;
  for (const fptate::Verdict& v : report.verdicts())
    if (!v.pass) ++failed;
  if (failed == 0)
    std::fprintf(stderr, "all %zu verdicts passed\n", report.verdicts().size());
  else
    std::fprintf(stderr, "%d of %zu verdicts FAILED\n", failed, report.verdicts().size());
  return report.exit_code();
}

struct CommonArgs {
  std::string preset_label;
  std::uint32_t p = 0;
  std::string json_path;
  std::string csv_path;
  fptate::RunOptions opts;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool preset_required = true) {
  auto* preset = cmd->add_option("--preset", args.preset_label, "preset name (X1..X64, T1..T64, MU@k, BP@k)");
  if (preset_required) preset->required();
  cmd->add_option("--p", args.p, "prime characteristic")->required();
  cmd->add_option("--json", args.json_path, "also write the JSON report to this file");
  cmd->add_option("--csv", args.csv_path, "also write the tables as CSV to this file");
  cmd->add_option("--seed", args.opts.seed, "seed for the randomized verdicts");
  cmd->add_option("--threads", args.opts.threads, "worker threads for rank computations")
      ->check(CLI::Range(1, 256));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-p Tate spectral sequence calculator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fptate::k_tool_name) + " " + fptate::k_version);

  CommonArgs hh_args;
  int hh_degree = 12;
  bool hh_oracle = false;
  CLI::App* hh = app.add_subcommand("hh", "Hochschild homology dims, closed form vs bar oracle");
  add_common(hh, hh_args);
  hh->add_option("--max-degree", hh_degree, "top total degree")->check(CLI::Range(0, 1000));
  hh->add_flag("--oracle", hh_oracle, "also run the bar-complex oracle and compare");

  CommonArgs tate_args;
  std::string tate_s = "-10:0", tate_t = "0:40";
  CLI::App* tate = app.add_subcommand("tate", "Tate spectral sequence pages over a window");
  add_common(tate, tate_args);
  tate->add_option("--s", tate_s, "filtration window a:b");
  tate->add_option("--t", tate_t, "internal-degree window a:b");

  CommonArgs singer_args;
  int singer_degree = 40;
  std::string nk_text;
  CLI::App* singer = app.add_subcommand("singer", "tensor-power basis bijection and index formulas");
  add_common(singer, singer_args, /*preset_required=*/false);
  singer->add_option("--max-degree", singer_degree, "top total degree")->check(CLI::Range(0, 1000));
  singer->add_option("--nk", nk_text, "print the reindexing N for k,d and exit");

  CommonArgs report_args;
  int report_degree = 12;
  bool report_oracle = false;
  std::string report_s = "-10:0", report_t = "0:40";
  CLI::App* report_cmd = app.add_subcommand("report", "combined hh + tate + singer run");
  add_common(report_cmd, report_args);
  report_cmd->add_option("--max-degree", report_degree, "top total degree for hh and singer");
  report_cmd->add_flag("--oracle", report_oracle, "also run the bar-complex oracle");
  report_cmd->add_option("--s", report_s, "filtration window a:b");
  report_cmd->add_option("--t", report_t, "internal-degree window a:b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hh->parsed()) {
      fptate::Preset preset = fptate::Preset::parse(hh_args.preset_label);
      return emit(fptate::run_hh(preset, hh_args.p, hh_degree, hh_oracle, hh_args.opts),
                  hh_args.json_path, hh_args.csv_path);
    }
    if (tate->parsed()) {
      Range rs = parse_range(tate_s), rt = parse_range(tate_t);
      fptate::Window window{rs.lo, rs.hi, rt.lo, rt.hi};
      fptate::Preset preset = fptate::Preset::parse(tate_args.preset_label);
      return emit(fptate::run_tate(preset, tate_args.p, window, tate_args.opts),
                  tate_args.json_path, tate_args.csv_path);
    }
    if (singer->parsed()) {
      if (!nk_text.empty()) {
        auto [k, d] = parse_nk(nk_text);
        std::printf("N=%ld\n", fptate::singer_index(k, d, singer_args.p));
        return 0;
      }
      if (singer_args.preset_label.empty()) {
        std::fprintf(stderr, "error: --preset is required unless --nk is given\n");
        return 2;
      }
      fptate::Preset preset = fptate::Preset::parse(singer_args.preset_label);
      return emit(fptate::run_singer(preset, singer_args.p, singer_degree, singer_args.opts),
                  singer_args.json_path, singer_args.csv_path);
    }
    Range rs = parse_range(report_s), rt = parse_range(report_t);
    fptate::Window window{rs.lo, rs.hi, rt.lo, rt.hi};
    fptate::Preset preset = fptate::Preset::parse(report_args.preset_label);
    return emit(fptate::run_full(preset, report_args.p, report_degree, window, report_oracle,
                                 report_args.opts),
                report_args.json_path, report_args.csv_path);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const fptate::error& e) {
    std::fprintf(stderr, "error: %s: %s\n", fptate::errc_name(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
