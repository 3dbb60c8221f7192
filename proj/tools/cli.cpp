#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsseq/bounds.hpp"
#include "lsseq/counts.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/error.hpp"
#include "lsseq/numeration.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/points.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxVerifyN = 1'000'000;
constexpr std::size_t kVerifyGridPoints = 60;
constexpr std::uint64_t kGenChunk = 1 << 16;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string big(const BigInt& v) { return v.str(); }

Params validate_params_text(const std::string& text) {
  const Params p = Params::parse(text);
  validate_params(p.coeffs());
  return p;
}

// Output either to the caller's stream or to a file named by -o.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoFailure("cannot open " + path + " for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void close() {
    out_->flush();
    if (!*out_) throw IoFailure("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json report_json(const DiscrepancyReport& r) {
  json j;
  j["n_points"] = r.n_points;
  j["star"] = r.star;
  j["extreme"] = r.extreme;
  j["d_plus"] = r.d_plus;
  j["d_minus"] = r.d_minus;
  return j;
}

json bound_json(const BoundReport& b) {
  json j;
  j["kind"] = std::string(to_string(b.kind));
  j["main_coeff"] = b.main_coeff;
  j["additive_coeff"] = b.additive_coeff;
  j["log_term"] = b.kind == BoundKind::Classical ? "log(N)" : "log(N+1)";
  j["r_tilde"] = b.r_tilde;
  j["beta"] = b.beta;
  j["n0"] = b.n0;
  return j;
}

std::vector<double> read_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw IoFailure("malformed value '" + field + "'");
    }
    first = false;
    values.push_back(v);
  }
  if (in.bad()) throw IoFailure("read failed");
  return values;
}

std::vector<std::uint64_t> verify_grid(const CountsTable& counts, std::uint64_t max_n) {
  std::set<std::uint64_t> grid;
  const double top = std::log(static_cast<double>(max_n));
  for (std::size_t i = 0; i < kVerifyGridPoints; ++i) {
    const double e = top * static_cast<double>(i) / static_cast<double>(kVerifyGridPoints - 1);
    grid.insert(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(std::exp(e))),
                                          1, max_n));
  }
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (counts.t(n) <= max_n) grid.insert(counts.t(n).convert_to<std::uint64_t>());
  }
  return {grid.begin(), grid.end()};
}

struct Integrand {
  double (*f)(double);
  double integral;
  double variation;
};

std::optional<Integrand> integrand(const std::string& name) {
  if (name == "x2") return Integrand{[](double x) { return x * x; }, 1.0 / 3.0, 1.0};
  if (name == "exp") {
    return Integrand{[](double x) { return std::exp(x); }, std::numbers::e - 1.0,
                     std::numbers::e - 1.0};
  }
  if (name == "cos2pi") {
    return Integrand{[](double x) { return std::cos(2.0 * std::numbers::pi * x); }, 0.0, 4.0};
  }
  return std::nullopt;
}

struct Options {
  std::string params;
  std::string output;
  std::string format = "csv";
  std::string file;
  std::string kind = "generalized";
  std::string function;
  std::string expansion;
  std::string index;
  std::uint64_t count = 0;
  std::uint64_t start = 1;
  std::uint64_t max_n = 0;
  std::size_t levels = 0;
  std::size_t level = 0;
  double n_eval = 0.0;
  int root_digits = -1;
  bool coeffs = false;
  bool no_header = false;
  bool endpoints = false;
};

int cmd_params_check(const Options& o, std::ostream& out) {
  json j;
  j["params"] = o.params;
  try {
    const Params p = Params::parse(o.params);
    const Spectral s = Spectral::solve(p);
    j["valid"] = true;
    j["beta"] = s.beta();
    json conj = json::array();
    for (auto r : s.conjugates()) {
      json c;
      c["re"] = r.real();
      c["im"] = r.imag();
      c["modulus"] = std::abs(r);
      conj.push_back(c);
    }
    j["conjugates"] = conj;
    j["lambda_residual"] = s.residual();
    j["pisot"] = true;
    out << j.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    j["valid"] = false;
    j["pisot"] = false;
    j["reason"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    out << j.dump(2) << '\n';
    return kInvalidParams;
  }
}

int cmd_gen(const Options& o, std::ostream& out) {
  LsSequence seq(validate_params_text(o.params));
  Sink sink(out, o.output);
  std::ostream& s = sink.stream();
  const std::uint64_t end = o.start + o.count;
  if (o.format == "json") {
    json arr = json::array();
    for (std::uint64_t n = o.start; n < end; ++n) {
      const BetaPoint p = seq.point(BigInt(n));
      json row;
      row["index"] = n;
      row["value"] = p.value;
      if (o.coeffs) row["coeffs"] = p.coeffs.to_string();
      arr.push_back(row);
    }
    s << arr.dump(2) << '\n';
  } else {
    if (!o.no_header) s << (o.coeffs ? "index,value,coeffs\n" : "index,value\n");
    for (std::uint64_t lo = o.start; lo < end; lo += kGenChunk) {
      const std::uint64_t hi = std::min(end, lo + kGenChunk);
      if (o.coeffs) {
        for (const BetaPoint& p : seq.point_range(lo, hi)) {
          s << big(p.index) << ',' << fmt(p.value) << ',' << p.coeffs.to_string() << '\n';
        }
      } else {
        const std::vector<double> v = seq.values(lo, hi);
        for (std::uint64_t n = lo; n < hi; ++n) s << n << ',' << fmt(v[n - lo]) << '\n';
      }
    }
  }
  sink.close();
  return kOk;
}

int cmd_digits(const Options& o, std::ostream& out) {
  const Params p = validate_params_text(o.params);
  CountsTable counts(p, 1);
  if (!o.expansion.empty()) {
    const DigitExpansion d = DigitExpansion::parse(o.expansion);
    counts.extend_to(d.size());
    const BigInt N = psi(d, counts);
    out << d.to_string() << "\nN=" << big(N) << '\n';
    return kOk;
  }
  if (o.index.empty()) throw Error(ErrorCode::InvalidArgument, "need an index or --expansion");
  BigInt N;
  try {
    N = BigInt(o.index);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad index '" + o.index + "'");
  }
  if (N < 0) throw Error(ErrorCode::NonPositiveIndex, "index must be >= 0");
  counts.cover(N);
  out << phi(N, counts).to_string() << "\nN=" << big(N) << '\n';
  return kOk;
}

int cmd_counts(const Options& o, std::ostream& out) {
  const Params p = validate_params_text(o.params);
  CountsTable counts(p, o.levels);
  Sink sink(out, o.output);
  std::ostream& s = sink.stream();
  if (!o.no_header) {
    s << "n,t";
    for (std::size_t i = 1; i <= p.k(); ++i) s << ",l" << i;
    s << '\n';
  }
  for (std::size_t n = 0; n <= o.levels; ++n) {
    s << n << ',' << big(counts.t(n));
    for (std::size_t i = 1; i <= p.k(); ++i) s << ',' << big(counts.l(static_cast<std::ptrdiff_t>(n), i));
    s << '\n';
  }
  sink.close();
  return kOk;
}

int cmd_partition(const Options& o, std::ostream& out) {
  const Params p = validate_params_text(o.params);
  const Spectral spectral = Spectral::solve(p);
  const Partition part = partition_at_level(p, o.level);
  const std::vector<double> left = left_endpoints(part, spectral.beta());
  Sink sink(out, o.output);
  std::ostream& s = sink.stream();
  if (!o.no_header) s << (o.endpoints ? "left\n" : "left,exponent\n");
  for (std::size_t i = 0; i < part.size(); ++i) {
    s << fmt(left[i]);
    if (!o.endpoints) s << ',' << part.exponent(i);
    s << '\n';
  }
  sink.close();
  return kOk;
}

int cmd_disc(const Options& o, std::ostream& out, std::istream& in) {
  std::vector<double> values;
  if (!o.file.empty()) {
    if (o.file == "-") {
      values = read_values(in);
    } else {
      std::ifstream f(o.file, std::ios::binary);
      if (!f) throw IoFailure("cannot open " + o.file);
      values = read_values(f);
    }
  } else {
    if (o.params.empty() || o.count == 0) {
      throw Error(ErrorCode::InvalidArgument, "disc needs params with --count, or --file");
    }
    if (o.count > kMaxDiscrepancyPoints) throw Error(ErrorCode::TooLarge, "count exceeds 1e7");
    LsSequence seq(validate_params_text(o.params));
    values = seq.values(1, o.count + 1);
  }
  out << report_json(discrepancy_report_inplace(values)).dump(2) << '\n';
  return kOk;
}

BoundReport make_bound(const Params& p, const std::string& kind, int root_digits) {
  if (kind == "classical") {
    if (p.k() != 2) throw Error(ErrorCode::InvalidClassicalParams, "classical bound needs k = 2");
    return classical_bound(p.L(1), p.L(2));
  }
  if (kind != "generalized") throw Error(ErrorCode::InvalidArgument, "unknown kind " + kind);
  Spectral s = Spectral::solve(p);
  if (root_digits >= 0) s = round_roots(s, root_digits);
  return generalized_bound(s);
}

int cmd_bound(const Options& o, std::ostream& out) {
  const Params p = validate_params_text(o.params);
  const BoundReport b = make_bound(p, o.kind, o.root_digits);
  json j;
  j["params"] = p.to_string();
  const json fields = bound_json(b);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  if (o.root_digits >= 0) j["root_digits"] = o.root_digits;
  if (b.kind == BoundKind::Classical) {
    j["structural_residual"] = b.additive_coeff - 2.0 - b.main_coeff * std::abs(std::log(b.beta));
    for (const auto& ref : kPrintedClassical) {
      if (ref.L == p.L(1) && ref.S == p.L(2)) {
        j["printed_main_coeff"] = ref.main_coeff;
        j["printed_additive_coeff"] = ref.additive_coeff;
      }
    }
  }
  if (o.n_eval > 0.0) {
    j["N"] = o.n_eval;
    j["value"] = b.value_at(o.n_eval);
    j["certified"] = b.certified_at(o.n_eval);
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Params p = validate_params_text(o.params);
  if (o.max_n < 1 || o.max_n > kMaxVerifyN) {
    throw Error(ErrorCode::OutOfRange, "--max-n must be in [1, 1e6]");
  }
  const BoundReport b = make_bound(p, o.kind, -1);
  LsSequence seq(p);
  const std::vector<double> values = seq.values(1, o.max_n + 1);
  seq.reserve(BigInt(o.max_n));
  const std::vector<std::uint64_t> grid = verify_grid(seq.counts(), o.max_n);

  std::vector<DiscrepancyReport> reports(grid.size());
  const auto g = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < g; ++i) {
    const auto n = static_cast<std::size_t>(grid[static_cast<std::size_t>(i)]);
    reports[static_cast<std::size_t>(i)] =
        discrepancy_report_serial(std::span<const double>(values.data(), n));
  }

  Sink sink(out, o.output);
  std::ostream& s = sink.stream();
  if (!o.no_header) s << "N,D_star,D,bound,ratio\n";
  std::vector<std::uint64_t> violations;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double N = static_cast<double>(grid[i]);
    const double bound = b.value_at(N);
    const double d = reports[i].extreme;
    s << grid[i] << ',' << fmt(reports[i].star) << ',' << fmt(d) << ',' << fmt(bound) << ','
      << fmt(d / bound) << '\n';
    if (b.certified_at(N) && d > bound) violations.push_back(grid[i]);
  }
  sink.close();
  if (!violations.empty()) {
    for (std::uint64_t n : violations) err << "bound violated at N=" << n << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const auto f = integrand(o.function);
  if (!f) throw Error(ErrorCode::UnknownFunction, "unknown function '" + o.function + "'");
  if (o.count < 1 || o.count > kMaxDiscrepancyPoints) {
    throw Error(ErrorCode::OutOfRange, "--count must be in [1, 1e7]");
  }
  LsSequence seq(validate_params_text(o.params));
  std::vector<double> values = seq.values(1, o.count + 1);
  double sum = 0.0;
  for (double x : values) sum += f->f(x);
  const double estimate = sum / static_cast<double>(o.count);
  const double star = discrepancy_report_inplace(values).star;
  const double abs_error = std::abs(estimate - f->integral);
  json j;
  j["params"] = o.params;
  j["function"] = o.function;
  j["count"] = o.count;
  j["estimate"] = estimate;
  j["reference"] = f->integral;
  j["abs_error"] = abs_error;
  j["star_disc"] = star;
  j["variation"] = f->variation;
  j["koksma_bound_ok"] = abs_error <= f->variation * star;
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  Options o;
  CLI::App app{"Generalized LS-sequence toolkit", "lsseq"};
  app.require_subcommand(1);

  auto* params = app.add_subcommand("params", "Parameter tools");
  params->require_subcommand(1);
  auto* check = params->add_subcommand("check", "Validate a splitting pattern");
  check->add_option("params", o.params, "Comma-separated L_1,...,L_k")->required();

  auto* gen = app.add_subcommand("gen", "Generate points");
  gen->add_option("params", o.params)->required();
  gen->add_option("--count", o.count, "Number of points")->required();
  gen->add_option("--start", o.start, "First index (default 1)");
  gen->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  gen->add_flag("--coeffs", o.coeffs, "Add exact beta-power coefficients");
  gen->add_flag("--no-header", o.no_header);
  gen->add_option("-o,--output", o.output);

  auto* digits = app.add_subcommand("digits", "Digit expansion of an index");
  digits->add_option("params", o.params)->required();
  digits->add_option("N", o.index);
  digits->add_option("--expansion", o.expansion, "Evaluate an expansion instead");

  auto* counts = app.add_subcommand("counts", "Interval count table");
  counts->add_option("params", o.params)->required();
  counts->add_option("--levels", o.levels)->required();
  counts->add_flag("--no-header", o.no_header);
  counts->add_option("-o,--output", o.output);

  auto* part = app.add_subcommand("partition", "Intervals of the level-n partition");
  part->add_option("params", o.params)->required();
  part->add_option("--level", o.level)->required();
  part->add_flag("--endpoints", o.endpoints, "Left endpoints only");
  part->add_flag("--no-header", o.no_header);
  part->add_option("-o,--output", o.output);

  auto* disc = app.add_subcommand("disc", "Discrepancy of a point set");
  disc->add_option("params", o.params);
  auto* disc_count = disc->add_option("--count", o.count);
  disc->add_option("--file", o.file, "CSV or one value per line; - for stdin")
      ->excludes(disc_count);

  auto* bound = app.add_subcommand("bound", "Discrepancy bound constants");
  bound->add_option("params", o.params)->required();
  bound->add_option("--kind", o.kind)->check(CLI::IsMember({"generalized", "classical"}));
  bound->add_option("--n", o.n_eval, "Evaluate the bound at N");
  bound->add_option("--root-digits", o.root_digits, "Round roots before solving")
      ->check(CLI::Range(0, 16));

  auto* verify = app.add_subcommand("verify", "Check measured discrepancy against the bound");
  verify->add_option("params", o.params)->required();
  verify->add_option("--max-n", o.max_n)->required();
  verify->add_option("--kind", o.kind)->check(CLI::IsMember({"generalized", "classical"}));
  verify->add_flag("--no-header", o.no_header);
  verify->add_option("-o,--output", o.output);

  auto* integrate = app.add_subcommand("integrate", "Quasi-Monte Carlo integration demo");
  integrate->add_option("params", o.params)->required();
  integrate->add_option("--count", o.count)->required();
  integrate->add_option("--function", o.function)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  }

  try {
    if (check->parsed()) return cmd_params_check(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (digits->parsed()) return cmd_digits(o, out);
    if (counts->parsed()) return cmd_counts(o, out);
    if (part->parsed()) return cmd_partition(o, out);
    if (disc->parsed()) return cmd_disc(o, out, in);
    if (bound->parsed()) return cmd_bound(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (integrate->parsed()) return cmd_integrate(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidParams;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  }
  return kInvalidParams;
}

}  // namespace lsseq::cli
