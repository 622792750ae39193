#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "farey/asympt.hpp"
#include "farey/monoid.hpp"
#include "farey/parallel.hpp"
#include "farey/spinchain.hpp"
#include "farey/verify.hpp"

namespace {

using farey::i32;
using farey::i64;

// CSV (header + one line per record) or JSON (array of flat objects); all
// fields are numeric, reals carry 12 significant digits.
class Table {
 public:
  Table(std::ostream& out, bool json, std::vector<const char*> cols)
      : out_(out), json_(json), cols_(std::move(cols)) {
    if (json_) {
      out_ << "[";
    } else {
      for (size_t i = 0; i < cols_.size(); ++i) {
        out_ << (i ? "," : "") << cols_[i];
      }
      out_ << "\n";
    }
  }

  Table& cell(i64 v) {
    vals_.push_back(std::to_string(v));
    return *this;
  }
  Table& cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    vals_.emplace_back(buf);
    return *this;
  }

  void endrow() {
    if (json_) {
      out_ << (first_ ? "\n" : ",\n") << "  {";
      for (size_t i = 0; i < vals_.size(); ++i) {
        out_ << (i ? "," : "") << '"' << cols_[i] << "\":" << vals_[i];
      }
      out_ << "}";
    } else {
      for (size_t i = 0; i < vals_.size(); ++i) {
        out_ << (i ? "," : "") << vals_[i];
      }
      out_ << "\n";
    }
    first_ = false;
    vals_.clear();
  }

  void finish() {
    if (json_) out_ << (first_ ? "]\n" : "\n]\n");
  }

 private:
  std::ostream& out_;
  bool json_;
  std::vector<const char*> cols_;
  std::vector<std::string> vals_;
  bool first_ = true;
};

struct Config {
  i64 n = 0;
  i64 x = 0;
  std::string n_range;
  std::string x_range;
  std::string method = "main";
  std::string format = "csv";
  std::string output;
  int jobs = 1;
  double tol = 1e-6;
  double c3 = farey::default_c3;
  double bin_width = 0.05;
  double t_max = 5.0;
  bool has_n = false;
  bool has_x = false;
};

struct Range {
  i64 lo = 0;
  i64 hi = 0;
};

[[noreturn]] void usage_fail(const std::string& msg) {
  throw CLI::ValidationError("usage", msg);
}

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  Range r;
  bool ok = colon != std::string::npos;
  if (ok) {
    const char* b = text.data();
    auto [p1, e1] = std::from_chars(b, b + colon, r.lo);
    auto [p2, e2] = std::from_chars(b + colon + 1, b + text.size(), r.hi);
    ok = e1 == std::errc{} && p1 == b + colon && e2 == std::errc{} &&
         p2 == b + text.size();
  }
  if (!ok) usage_fail("range must look like 100:200, got '" + text + "'");
  if (r.lo > r.hi) usage_fail("empty range '" + text + "'");
  return r;
}

// --n wins over --n-range; a single value is the range [v, v].
Range pick_range(const Config& cfg, i64 floor_value) {
  Range r;
  if (cfg.has_n) {
    r = {cfg.n, cfg.n};
  } else if (!cfg.n_range.empty()) {
    r = parse_range(cfg.n_range);
  } else {
    usage_fail("need --n or --n-range");
  }
  if (r.lo < floor_value) {
    usage_fail("range starts below " + std::to_string(floor_value));
  }
  return r;
}

int run_phi(const Config& cfg, std::ostream& out) {
  const Range r = pick_range(cfg, 3);
  i64 (*compute)(i64) = farey::phi;
  if (cfg.method == "divisor") compute = farey::phi_divisor_sum;
  if (cfg.method == "boca") compute = farey::phi_boca;
  if (cfg.method == "oracle") compute = farey::phi_oracle;
  std::vector<i64> vals(size_t(r.hi - r.lo + 1));
  farey::parallel_index(r.hi - r.lo + 1, cfg.jobs,
                        [&](i64 i) { vals[size_t(i)] = compute(r.lo + i); });
  Table t(out, cfg.format == "json", {"n", "phi"});
  for (i64 n = r.lo; n <= r.hi; ++n) {
    t.cell(n).cell(vals[size_t(n - r.lo)]);
    t.endrow();
  }
  t.finish();
  return 0;
}

int run_psi(const Config& cfg, std::ostream& out) {
  const Range r = pick_range(cfg, 3);
  const auto rows = farey::psi_batch(r.hi, cfg.jobs);
  Table t(out, cfg.format == "json", {"n", "psi", "psi_main", "rel_error"});
  for (const auto& row : rows) {
    if (row.n < r.lo) continue;
    const double smooth = farey::psi_main(row.n);
    t.cell(row.n).cell(row.psi).cell(smooth).cell(
        (double(row.psi) - smooth) / smooth);
    t.endrow();
  }
  t.finish();
  return 0;
}

int run_upsilon(const Config& cfg, std::ostream& out) {
  Range r;
  if (cfg.has_x) {
    r = {cfg.x, cfg.x};
  } else if (!cfg.x_range.empty()) {
    r = parse_range(cfg.x_range);
  } else {
    usage_fail("need --x or --x-range");
  }
  if (r.lo < 1) usage_fail("X must be positive");
  const auto primes = farey::sieve_primes(farey::isqrt(r.hi) + 1);
  struct Row {
    i64 ups = 0, cut = 0, delta = 0;
  };
  std::vector<Row> rows(size_t(r.hi - r.lo + 1));
  farey::parallel_index(r.hi - r.lo + 1, cfg.jobs, [&](i64 i) {
    const i64 x = r.lo + i;
    if (x % 4 == 2 || x % 4 == 3) return;  // no admissible m, keep zeros
    Row& row = rows[size_t(i)];
    row.ups = farey::upsilon(x, primes);
    row.cut = farey::upsilon_cut(x, primes);
    row.delta = row.ups - 2 * row.cut;
  });
  Table t(out, cfg.format == "json", {"x", "upsilon", "upsilon_cut", "delta"});
  for (i64 x = r.lo; x <= r.hi; ++x) {
    const Row& row = rows[size_t(x - r.lo)];
    t.cell(x).cell(row.ups).cell(row.cut).cell(row.delta);
    t.endrow();
  }
  t.finish();
  return 0;
}

int run_verify(const Config& cfg, std::ostream& out) {
  const Range r = pick_range(cfg, 3);
  const auto bad = farey::verify_range(r.lo, r.hi, cfg.jobs);
  Table t(out, cfg.format == "json", {"lo", "hi", "ok", "first_bad"});
  t.cell(r.lo).cell(r.hi).cell(i64(bad ? 0 : 1)).cell(bad ? bad->n : 0);
  t.endrow();
  t.finish();
  if (!bad) return 0;
  std::cerr << "mismatch at n=" << bad->n << ": main=" << bad->phi_main
            << " divisor=" << bad->phi_divisor << " boca=" << bad->phi_boca
            << " oracle=" << bad->phi_oracle << " delta=" << bad->cut_delta
            << " census_ok=" << (bad->census_ok ? 1 : 0) << "\n";
  return 1;
}

int run_asympt(const Config& cfg, std::ostream& out) {
  const Range r = pick_range(cfg, 3);
  const auto primes =
      farey::sieve_primes(farey::isqrt(r.hi * r.hi - 4) + 1);
  std::vector<farey::MainTermReport> rows(size_t(r.hi - r.lo + 1));
  farey::parallel_index(r.hi - r.lo + 1, cfg.jobs, [&](i64 i) {
    const i64 n = r.lo + i;
    rows[size_t(i)] =
        farey::main_term(n * n - 4, cfg.c3, cfg.tol, primes);
  });
  Table t(out, cfg.format == "json",
          {"x", "d", "r", "upsilon", "l_value", "l_log_deriv", "eta",
           "eta_deriv", "c3", "main_term", "residual"});
  for (const auto& rep : rows) {
    t.cell(rep.x)
        .cell(rep.d)
        .cell(rep.r)
        .cell(rep.upsilon)
        .cell(rep.l_value)
        .cell(rep.l_log_deriv)
        .cell(rep.eta.value)
        .cell(rep.eta.derivative)
        .cell(rep.c3)
        .cell(rep.main_term)
        .cell(rep.residual);
    t.endrow();
  }
  t.finish();
  return 0;
}

int run_fit(const Config& cfg, std::ostream& out) {
  const Range r = pick_range(cfg, 3);
  std::vector<i64> xs;
  xs.reserve(size_t(r.hi - r.lo + 1));
  for (i64 n = r.lo; n <= r.hi; ++n) xs.push_back(n * n - 4);
  const double c3 = farey::fit_c3_exact(xs, cfg.tol, cfg.jobs);
  Table t(out, cfg.format == "json", {"c3", "points", "n_lo", "n_hi"});
  t.cell(c3).cell(i64(xs.size())).cell(r.lo).cell(r.hi);
  t.endrow();
  t.finish();
  return 0;
}

int run_dist(const Config& cfg, std::ostream& out) {
  if (!cfg.has_n) usage_fail("need --n");
  const auto h =
      farey::phi_star_histogram(cfg.n, cfg.bin_width, cfg.t_max, cfg.jobs);
  Table t(out, cfg.format == "json", {"bin_center", "frequency"});
  for (size_t i = 0; i < h.counts.size(); ++i) {
    t.cell(h.bin_center(i)).cell(h.frequency(i));
    t.endrow();
  }
  t.cell(h.t_max + h.bin_width / 2).cell(h.overflow_frequency());
  t.endrow();
  t.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{
      "Trace counts, lattice point counts, L-values and main-term "
      "diagnostics for products of the matrices (1,0;1,1) and (1,1;0,1)"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", cfg.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", cfg.output, "write records here instead of stdout");
  };
  auto add_n = [&cfg](CLI::App* cmd, const char* what) {
    auto* n = cmd->add_option("--n", cfg.n, what);
    cmd->add_option("--n-range", cfg.n_range, "inclusive range lo:hi");
    n->each([&cfg](const std::string&) { cfg.has_n = true; });
  };

  auto* phi = app.add_subcommand("phi", "trace counts Phi(n)");
  add_n(phi, "single trace");
  phi->add_option("--method", cfg.method,
                  "main, divisor, boca, or oracle implementation")
      ->check(CLI::IsMember({"main", "divisor", "boca", "oracle"}));
  add_common(phi);

  auto* psi = app.add_subcommand("psi", "cumulative counts Psi(n) with the smooth approximation");
  add_n(psi, "single trace");
  add_common(psi);

  auto* ups = app.add_subcommand("upsilon", "lattice counts for 4*lambda*mu + m^2 = X");
  auto* xopt = ups->add_option("--x", cfg.x, "single X");
  xopt->each([&cfg](const std::string&) { cfg.has_x = true; });
  ups->add_option("--x-range", cfg.x_range, "inclusive range lo:hi");
  add_common(ups);

  auto* ver = app.add_subcommand("verify", "cross-check every Phi implementation and the lattice identities");
  add_n(ver, "single trace");
  add_common(ver);

  auto* asy = app.add_subcommand("asympt", "main-term reports at X = n^2 - 4");
  add_n(asy, "single trace");
  asy->add_option("--c3", cfg.c3, "constant term of the main term");
  asy->add_option("--tol", cfg.tol, "L-value tolerance")
      ->check(CLI::PositiveNumber);
  add_common(asy);

  auto* fit = app.add_subcommand("fit-c3", "least-squares c3 over X = n^2 - 4");
  add_n(fit, "single trace");
  fit->add_option("--tol", cfg.tol, "L-value tolerance")
      ->check(CLI::PositiveNumber);
  add_common(fit);

  auto* dist = app.add_subcommand("dist", "histogram of Phi(n)/(n log n) for n up to --n");
  add_n(dist, "largest trace");
  dist->add_option("--bin-width", cfg.bin_width, "histogram bin width")
      ->check(CLI::PositiveNumber);
  dist->add_option("--t-max", cfg.t_max, "overflow threshold")
      ->check(CLI::PositiveNumber);
  add_common(dist);

  try {
    app.parse(argc, argv);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << cfg.output << "\n";
        return 3;
      }
      out = &file;
    }

    int status = 0;
    if (phi->parsed()) status = run_phi(cfg, *out);
    if (psi->parsed()) status = run_psi(cfg, *out);
    if (ups->parsed()) status = run_upsilon(cfg, *out);
    if (ver->parsed()) status = run_verify(cfg, *out);
    if (asy->parsed()) status = run_asympt(cfg, *out);
    if (fit->parsed()) status = run_fit(cfg, *out);
    if (dist->parsed()) status = run_dist(cfg, *out);

    out->flush();
    if (!*out) {
      std::cerr << "write failure\n";
      return 3;
    }
    return status;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const farey::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
