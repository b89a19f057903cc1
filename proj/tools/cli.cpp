#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vlp/vlp.hpp"

namespace vlp::cli {

namespace {

constexpr double kDefaultTol = 1e-10;

std::size_t default_workers() {
  if (const char* env = std::getenv("VLP_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

// Integer options also take exact scientific notation such as 1e6.
const CLI::Validator kIntegral(
    [](std::string& v) -> std::string {
      if (v.find_first_of("eE.") == std::string::npos) return {};
      char* end = nullptr;
      const double x = std::strtod(v.c_str(), &end);
      if (end == v.c_str() || *end != '\0' || !(x >= 0) || x > 9.007199254740992e15 || x != std::floor(x))
        return "not an integer: " + v;
      v = std::to_string(static_cast<std::uint64_t>(x));
      return {};
    },
    "", "INTEGRAL");

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

struct Options {
  std::int64_t d = 0;
  unsigned m = 2;
  unsigned s = 1;
  double x_min = 1.0;
  double x_max = 0.0;
  double ratio = 1.25;
  std::uint64_t limit = 0;
  std::size_t workers = 1;
  std::string out;
  double tol = kDefaultTol;

  // circle
  std::uint64_t r_max = 0;
  std::uint64_t stride = 1;
  double r_min = 0.0;
  double r_ratio = 0.0;

  // fit
  std::string in;
  std::string xcol = "x";
  std::string vcol = "E";

  // perron
  double x = 0.0;
  double T = 0.0;
  std::uint64_t nodes = 64;
  bool kernel_only = false;
};

void write_count_csv(std::ostream& os, const CountSeries& series) {
  os << "x,V,main,E\n";
  const bool has_main = !series.main_terms.empty();
  for (std::size_t i = 0; i < series.xs.size(); ++i) {
    os << format_real(series.xs[i]) << ',' << series.counts[i].str() << ',';
    if (has_main)
      os << format_real(series.main_terms[i]) << ',' << format_real(series.errors[i]);
    else
      os << "nan,nan";
    os << '\n';
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_real(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a number: '" + s + "'");
  return v;
}

ExponentFit fit_csv(std::istream& is, const std::string& xcol, const std::string& vcol) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("fit: empty input");
  const auto header = split_csv_line(line);
  auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw DomainError("fit: no column named '" + name + "'");
  };
  const std::size_t xi = column(xcol);
  const std::size_t vi = column(vcol);

  std::vector<double> xs;
  std::vector<double> vs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) throw DomainError("fit: ragged row '" + line + "'");
    const double x = parse_real(cells[xi]);
    const double v = parse_real(cells[vi]);
    if (!std::isfinite(x) || !std::isfinite(v))
      throw DomainError("fit: non-finite value in row '" + line + "'");
    xs.push_back(x);
    vs.push_back(v);
  }
  return fit_exponent(xs, vs);
}

nlohmann::json perron_json(const PerronResult& r) {
  return {{"x", r.x},
          {"T", r.T},
          {"estimate", r.estimate.real()},
          {"estimate_imag", r.estimate.imag()},
          {"reference", r.reference},
          {"abs_error", r.abs_error},
          {"nodes", r.nodes}};
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Visible lattice points over the rationals and quadratic fields", "vlp"};
  app.require_subcommand(1, 1);

  Options o;
  o.workers = default_workers();
  // Set by whichever subcommand is selected; receives the output stream.
  std::function<int(std::ostream&)> action;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "Squarefree d of Q(sqrt d); 0 selects Q")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Parallel lanes (env VLP_WORKERS sets the default)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Output file (default: standard output)");
  };

  // fields info
  auto* fields = app.add_subcommand("fields", "Field invariants");
  fields->require_subcommand(1, 1);
  auto* info = fields->add_subcommand("info", "Invariants, residue c and zeta_K(2), zeta_K(3)");
  add_field(info);
  add_common(info);
  info->add_option("--tol", o.tol, "Tolerance for zeta values")->check(CLI::PositiveNumber);
  info->callback([&] {
    action = [&](std::ostream& os) {
      const FieldSpec f = make_field(o.d);
      nlohmann::json j = to_json(f);
      j["name"] = f.name();
      j["zeta_K_2"] = zeta_K_at(f, 2.0, o.tol).value;
      j["zeta_K_3"] = zeta_K_at(f, 3.0, o.tol).value;
      os << j.dump(2) << '\n';
      return kOk;
    };
  });

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Dump a, b, j tables as CSV");
  add_field(sieve);
  add_common(sieve);
  sieve->add_option("--limit", o.limit, "Largest norm")->required()->transform(kIntegral)->check(CLI::PositiveNumber);
  sieve->callback([&] {
    action = [&](std::ostream& os) {
      SieveOptions so;
      so.workers = o.workers;
      const auto coeffs = build_coefficients(make_field(o.d), o.limit, so);
      const auto moebius = build_moebius(coeffs);
      os << "n,a,b,j\n";
      for (std::uint64_t n = 1; n <= o.limit; ++n)
        os << n << ',' << coeffs.a[n] << ',' << moebius.b[n] << ',' << coeffs.j_cum[n] << '\n';
      return kOk;
    };
  });

  // count visible | sprime
  auto* count = app.add_subcommand("count", "V_m or V_m^s over a geometric grid");
  count->require_subcommand(1, 1);
  auto add_count = [&](CLI::App* sub, bool with_s) {
    add_field(sub);
    add_common(sub);
    sub->add_option("-m", o.m, "Tuple length")->required()->check(CLI::PositiveNumber);
    if (with_s) sub->add_option("-s", o.s, "Primality order")->required()->check(CLI::PositiveNumber);
    sub->add_option("--xmin", o.x_min, "First grid point")->required()->check(CLI::PositiveNumber);
    sub->add_option("--xmax", o.x_max, "Last grid point bound")->required()->check(CLI::PositiveNumber);
    sub->add_option("--ratio", o.ratio, "Grid ratio (> 1)");
    sub->add_option("--limit", o.limit, "Sieve limit (default floor(xmax))")->transform(kIntegral);
    sub->callback([&, with_s] {
      if (!with_s) o.s = 1;
      action = [&](std::ostream& os) {
        const FieldSpec f = make_field(o.d);
        const auto floor_max = static_cast<std::uint64_t>(std::floor(o.x_max));
        if (o.limit != 0 && o.limit < floor_max)
          throw DomainError("--limit must be >= xmax");
        SieveOptions so;
        so.workers = o.workers;
        const CountTables tables =
            make_count_tables(f, std::max<std::uint64_t>({o.limit, floor_max, 1}), so);
        const auto xs = geometric_grid(o.x_min, o.x_max, o.ratio);
        write_count_csv(os, count_series(tables, o.m, o.s, xs, o.workers));
        return kOk;
      };
    });
  };
  add_count(count->add_subcommand("visible", "Visible m-tuples"), false);
  add_count(count->add_subcommand("sprime", "Relatively s-prime m-tuples"), true);

  // circle
  auto* circle = app.add_subcommand("circle", "Gauss circle counts N(r) and N(r) - pi r");
  add_common(circle);
  circle->add_option("--rmax", o.r_max, "Largest r (radius squared)")->required()->transform(kIntegral)
      ->check(CLI::PositiveNumber);
  circle->add_option("--stride", o.stride, "Sample r = stride, 2 stride, ...")->transform(kIntegral)
      ->check(CLI::PositiveNumber);
  auto* rmin = circle->add_option("--rmin", o.r_min, "First r of a geometric grid");
  circle->add_option("--ratio", o.r_ratio, "Geometric grid ratio; replaces --stride")
      ->needs(rmin);
  circle->callback([&] {
    action = [&](std::ostream& os) {
      const CircleScan scan =
          o.r_ratio > 0 ? residual_scan(geometric_grid(o.r_min, static_cast<double>(o.r_max), o.r_ratio))
                        : residual_scan(o.r_max, o.stride);
      os << "r,N,residual\n";
      for (std::size_t i = 0; i < scan.N.size(); ++i)
        os << format_real(scan.r_values[i]) << ',' << scan.N[i] << ','
           << format_real(scan.residuals[i]) << '\n';
      return kOk;
    };
  });

  // fit
  auto* fit = app.add_subcommand("fit", "Log-log exponent fit of a CSV column");
  add_common(fit);
  fit->add_option("--in", o.in, "Input CSV")->required();
  fit->add_option("--xcol", o.xcol, "Abscissa column");
  fit->add_option("--vcol", o.vcol, "Value column (absolute value is fitted)");
  fit->callback([&] {
    action = [&](std::ostream& os) {
      std::ifstream is(o.in);
      if (!is) throw DomainError("cannot open " + o.in);
      os << to_json(fit_csv(is, o.xcol, o.vcol)).dump(2) << '\n';
      return kOk;
    };
  });

  // perron
  auto* perron = app.add_subcommand("perron", "Perron-integral reconstruction of j_K(x)");
  perron->add_option("--d", o.d, "Squarefree d of Q(sqrt d); 0 selects Q");
  add_common(perron);
  perron->add_option("--x", o.x, "Half-integer x (any x > 0 with --kernel)")->required();
  perron->add_option("--T", o.T, "Truncation height")->required()->check(CLI::PositiveNumber);
  perron->add_option("--nodes", o.nodes, "Minimum quadrature nodes per kernel")
      ->check(CLI::Range(std::uint64_t{64}, std::numeric_limits<std::uint64_t>::max()));
  perron->add_flag("--kernel", o.kernel_only, "Only integrate x^s / s (no field)");
  perron->callback([&] {
    action = [&](std::ostream& os) {
      PerronResult r;
      if (o.kernel_only) {
        r = kernel_quadrature(o.x, o.T, o.nodes);
      } else {
        const FieldSpec f = make_field(o.d);
        const auto table = build_coefficients(
            f, static_cast<std::uint64_t>(std::ceil(2.0 * o.x)) + 1);
        r = perron_j_reconstruction(table, o.x, o.T);
      }
      os << perron_json(r).dump(2) << '\n';
      return kOk;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Formula count vs brute-force tuple enumeration");
  add_field(oracle);
  add_common(oracle);
  oracle->add_option("-m", o.m, "Tuple length")->required()->check(CLI::PositiveNumber);
  oracle->add_option("-s", o.s, "Primality order")->check(CLI::PositiveNumber);
  oracle->add_option("--xmax", o.limit, "Largest norm; every X <= xmax is compared")->required()->transform(kIntegral)
      ->check(CLI::PositiveNumber);
  oracle->callback([&] {
    action = [&](std::ostream& os) {
      const FieldSpec f = make_field(o.d);
      const auto brute = brute_force_counts_upto(f, o.m, o.s, o.limit);
      const CountTables tables = make_count_tables(f, o.limit);
      std::optional<std::uint64_t> mismatch;
      BigInt formula_at_max = 0;
      for (std::uint64_t X = 1; X <= o.limit; ++X) {
        const double x = static_cast<double>(X);
        const BigInt v = o.s == 1 ? visible_count(tables, o.m, x) : sprime_count(tables, o.m, o.s, x);
        if (v != brute[X] && !mismatch) mismatch = X;
        if (X == o.limit) formula_at_max = v;
      }
      nlohmann::json j = {{"d", o.d},
                          {"m", o.m},
                          {"s", o.s},
                          {"xmax", o.limit},
                          {"formula", big_to_json(formula_at_max)},
                          {"brute_force", big_to_json(brute[o.limit])},
                          {"equal", !mismatch},
                          {"first_mismatch", mismatch ? nlohmann::json(*mismatch) : nlohmann::json()}};
      os << j.dump(2) << '\n';
      return mismatch ? kOracleMismatch : kOk;
    };
  });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("vlp");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.out.empty()) return action(out);
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw DomainError("cannot open " + o.out + " for writing");
    const int status = action(file);
    file.flush();
    if (!file) throw DomainError("write to " + o.out + " failed");
    return status;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace vlp::cli
