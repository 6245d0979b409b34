// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Pass the CLI binary path as argv[1] to exercise the byte-identical
// rerun through the real executable; without it the rerun uses the library
// pipeline in-process.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fptate/fptate.hpp>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const fptate::Verdict* find_verdict(const fptate::Report& r, const std::string& name) {
  for (const fptate::Verdict& v : r.verdicts())
    if (v.name == name) return &v;
  return nullptr;
}

bool verdict_passes(const fptate::Report& r, const std::string& name, std::string& why) {
  const fptate::Verdict* v = find_verdict(r, name);
  if (!v) {
    why = "verdict '" + name + "' missing";
    return false;
  }
  if (!v->pass) {
    why = "verdict '" + name + "' failed: " + v->details.dump();
    return false;
  }
  return true;
}

int g_failures = 0;

void line(int criterion, bool pass, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  if (!pass) ++g_failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  using namespace fptate;
  const std::string cli = argc > 1 ? argv[1] : "";

  // 1. Bar-complex oracle agrees with the closed form for one and two
  //    polynomial generators of degrees 2 and 4, p in {2,3}, through total
  //    degree 12, within 120 seconds.
  {
    auto start = Clock::now();
    bool ok = true;
    std::string why;
    for (std::uint32_t p : {2u, 3u})
      for (const char* label : {"X1", "X2"}) {
        Report r = run_hh(Preset::parse(label), p, 12, true);
        if (!verdict_passes(r, "oracle_matches_closed_form", why)) {
          ok = false;
          why = std::string(label) + " p=" + std::to_string(p) + ": " + why;
        }
      }
    double dt = seconds_since(start);
    if (dt >= 120.0) {
      ok = false;
      why = "took " + std::to_string(dt) + "s (budget 120s)";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", dt);
    line(1, ok, ok ? "bar oracle matches closed form, X1 and X2, p in {2,3}, degree <= 12 (" +
                         std::string(buf) + ")"
                   : why);
  }

  // 2 + 3. Third page equals the stated stable page over s in [-12,0],
  //        t in [0,60], each preset/prime pair within 60 seconds.
  std::vector<Report> page_runs;
  auto run_family = [&](int criterion, const std::vector<const char*>& labels) {
    bool ok = true;
    std::string why;
    double worst = 0.0;
    for (const char* label : labels)
      for (std::uint32_t p : {2u, 3u}) {
        auto start = Clock::now();
        Report r = run_tate(Preset::parse(label), p, Window{-12, 0, 0, 60});
        double dt = seconds_since(start);
        if (dt > worst) worst = dt;
        std::string v;
        if (!verdict_passes(r, "e3_matches_einfty_closed_form", v)) {
          ok = false;
          why = std::string(label) + " p=" + std::to_string(p) + ": " + v;
        }
        if (dt >= 60.0) {
          ok = false;
          why = std::string(label) + " p=" + std::to_string(p) + " took " +
                std::to_string(dt) + "s (budget 60s)";
        }
        page_runs.push_back(std::move(r));
      }
    char buf[64];
    std::snprintf(buf, sizeof buf, "slowest %.1fs", worst);
    std::string names;
    for (const char* label : labels) names += std::string(names.empty() ? "" : ", ") + label;
    line(criterion, ok,
         ok ? "E3 equals the stable closed form for " + names + ", p in {2,3} (" + buf + ")" : why);
  };
  run_family(2, {"X1", "X2", "X3"});
  run_family(3, {"T1", "T2"});

  // 4. The differential squares to zero on every sheltered bidegree and the
  //    Leibniz rule holds on 500 random splits per run.
  {
    bool ok = true;
    std::string why;
    for (const Report& r : page_runs) {
      std::string v;
      if (!verdict_passes(r, "d2_squared_zero", v) ||
          !verdict_passes(r, "leibniz_random_splits", v)) {
        ok = false;
        why = v;
      }
    }
    line(4, ok, ok ? "d2 squares to zero on all sheltered bidegrees; Leibniz holds on 500 random splits per run"
                   : why);
  }

  // 5. t-periodicity of both pages and the boundary-corrected Euler
  //    characteristic identity.
  {
    bool ok = true;
    std::string why;
    for (const Report& r : page_runs) {
      std::string v;
      if (!verdict_passes(r, "t_periodicity_e2", v) || !verdict_passes(r, "t_periodicity_e3", v) ||
          !verdict_passes(r, "euler_characteristic", v)) {
        ok = false;
        why = v;
      }
    }
    line(5, ok, ok ? "t-periodicity and Euler characteristic hold on every page run" : why);
  }

  // 6. The tensor-power correspondence is a filtration-shifting bijection
  //    through total degree 40, and both closed formulas hold on 100 random
  //    inputs.
  {
    bool ok = true;
    std::string why;
    for (std::uint32_t p : {2u, 3u})
      for (const char* label : {"X1", "X2"}) {
        Report r = run_singer(Preset::parse(label), p, 40);
        std::string v;
        if (!verdict_passes(r, "tensor_power_bijection", v) ||
            !verdict_passes(r, "s_shift_formula", v) ||
            !verdict_passes(r, "singer_index_formula", v)) {
          ok = false;
          why = std::string(label) + " p=" + std::to_string(p) + ": " + v;
        }
      }
    line(6, ok, ok ? "tensor-power bijection through degree 40 with shift -(p-1) per factor; formulas hold on 100 random inputs"
                   : why);
  }

  // 7. Two identical runs produce byte-identical reports.
  {
    bool ok = true;
    std::string why;
    if (!cli.empty()) {
      std::string f1 = "/tmp/fptate_det_1.json", f2 = "/tmp/fptate_det_2.json";
      std::string base = cli + " tate --preset X2 --p 3 2>/dev/null > ";
      int rc1 = std::system((base + f1).c_str());
      int rc2 = std::system((base + f2).c_str());
      std::string a = read_file(f1), b = read_file(f2);
      if (rc1 != 0 || rc2 != 0) {
        ok = false;
        why = "CLI rerun exited nonzero";
      } else if (a.empty() || a != b) {
        ok = false;
        why = "CLI outputs differ between identical runs";
      }
      std::remove(f1.c_str());
      std::remove(f2.c_str());
    } else {
      Report a = run_tate(Preset::parse("X2"), 3, Window{-10, 0, 0, 40});
      Report b = run_tate(Preset::parse("X2"), 3, Window{-10, 0, 0, 40});
      if (a.to_json_text() != b.to_json_text()) {
        ok = false;
        why = "reports differ between identical runs";
      }
    }
    line(7, ok, ok ? std::string("two identical runs are byte-identical") +
                         (cli.empty() ? " (in-process)" : " (through the CLI)")
                   : why);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 7 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 7 criteria FAILED\n", g_failures);
  return 1;
}
