#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "cli/manifest.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/lowdisc.hpp"
#include "wafomlab/net_io.hpp"
#include "wafomlab/netgen.hpp"
#include "wafomlab/parallel.hpp"
#include "wafomlab/polynomial.hpp"
#include "wafomlab/qmc.hpp"
#include "wafomlab/search.hpp"
#include "wafomlab/sobol.hpp"
#include "wafomlab/wafom.hpp"

namespace wafomlab::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A net with S = 1 is the image of every nonzero window under U = its basis,
// whatever the primitive polynomial.
std::optional<SequentialGenerator> infer_generator(const LinearNet& net) {
  if (net.dimensions() != 1 || net.dim() < 1 || net.dim() > gf2poly::kMaxPrimitiveDegree) return std::nullopt;
  std::vector<Row> rows;
  for (const NetPoint& b : net.basis()) rows.push_back(b.row(0));
  return SequentialGenerator(first_primitive_poly(net.dim()), BitMatrix::from_rows(net.digits(), rows), 1);
}

void require_same_subspace(const LinearNet& net, const LinearNet& generated) {
  if (net.shape() != generated.shape() || net.dim() != generated.dim()) {
    throw RankError("generator does not match the net file");
  }
  for (const NetPoint& p : generated.basis()) {
    if (!net.contains(p)) throw RankError("generator does not match the net file");
  }
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

PrimitivePoly parse_poly(const std::string& bits, int d) {
  if (static_cast<int>(bits.size()) != d) throw ParseError("--poly must list exactly d coefficients a_1..a_d");
  std::vector<int> a;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("--poly must be a bit string");
    a.push_back(c - '0');
  }
  return PrimitivePoly::from_coefficients(a);
}

std::string poly_bits(const PrimitivePoly& poly) {
  std::string s;
  for (int i = 1; i <= poly.degree(); ++i) s += static_cast<char>('0' + poly.coefficient(i));
  return s;
}

std::optional<double> log2_slope(const std::vector<double>& x, const std::vector<double>& values) {
  if (x.size() < 2) return std::nullopt;
  std::vector<double> y;
  for (double v : values) {
    if (!(v > 0.0)) return std::nullopt;
    y.push_back(std::log2(v));
  }
  return least_squares_slope(x, y);
}

ordered_json number_or_null(const std::optional<double>& v) {
  return v ? ordered_json(format_number(*v)) : ordered_json(nullptr);
}

}  // namespace

std::map<std::string, double> parse_params(const std::vector<std::string>& pairs) {
  std::map<std::string, double> out;
  for (const std::string& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + p + "'");
    const std::string value = p.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("parameter '" + p + "' is not numeric");
    out[p.substr(0, eq)] = v;
  }
  return out;
}

std::uint64_t figure1_seed(std::uint64_t master_seed, int d) {
  return trial_seed(master_seed, 3, static_cast<std::uint64_t>(d));
}

void run_wafom(const WafomCommand& cmd, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> kMethods{"dual", "inversion", "sequential", "all"};
  if (!kMethods.count(cmd.method)) throw ParseError("unknown method '" + cmd.method + "'");
  if (cmd.net_file.empty() && cmd.gen_file.empty()) throw ParseError("need a net file or --gen");

  std::optional<SequentialGenerator> gen;
  if (!cmd.gen_file.empty()) gen = parse_generator(read_file(cmd.gen_file));
  const LinearNet net = cmd.net_file.empty() ? generator_net(*gen) : read_net_file(cmd.net_file);
  if (gen && !cmd.net_file.empty()) require_same_subspace(net, generator_net(*gen));
  if (!gen) gen = infer_generator(net);

  const bool all = cmd.method == "all";
  const int threads = resolve_threads(cmd.threads);
  std::vector<WafomReport> reports;

  if (all || cmd.method == "dual") {
    try {
      reports.push_back(wafom_dual(net, cmd.cap));
    } catch (const CapacityError& e) {
      if (!all) throw;
      err << "skipping dual: " << e.what() << '\n';
    }
  }
  if (all || cmd.method == "inversion") {
    try {
      reports.push_back(wafom_inversion(net, {.cap = cmd.cap, .threads = threads}));
    } catch (const CapacityError& e) {
      if (!all) throw;
      err << "skipping inversion: " << e.what() << '\n';
    }
  }
  if (all || cmd.method == "sequential") {
    if (gen) {
      reports.push_back(wafom_sequential(*gen));
    } else if (!all) {
      throw DomainError("sequential needs --gen unless the net has S = 1 and d >= 1");
    } else {
      err << "skipping sequential: no generator (pass --gen)\n";
    }
  }

  out << kWafomCsvHeader << '\n';
  for (const auto& r : reports) out << to_csv_row(r) << '\n';
  if (all) {
    double worst = 0.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      for (std::size_t j = i + 1; j < reports.size(); ++j) {
        worst = std::max(worst, relative_deviation(reports[i].value, reports[j].value));
      }
    }
    out << "# max_relative_deviation=" << format_number(worst) << '\n';
  }
}

void run_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.out.empty()) throw ParseError("--out is required");
  const Stopwatch clock;
  SearchConfig config;
  config.dim = cmd.d;
  config.digits = cmd.n;
  config.dimensions = cmd.s;
  config.stage1_trials = cmd.stage1;
  config.stage2_trials = cmd.stage2;
  config.master_seed = cmd.seed;
  config.threads = resolve_threads(cmd.threads);
  config.validate();
  if (!cmd.poly.empty()) config.poly = parse_poly(cmd.poly, cmd.d);

  const SearchResult r = search(config);
  const std::string prefix = cmd.out;
  const fs::path base(prefix);
  const std::string stem = base.filename().string();
  if (base.has_parent_path()) fs::create_directories(base.parent_path());
  write_net_file(prefix + ".net", r.net());
  write_text(prefix + ".gen", format_generator(r.generator()));
  write_text(prefix + ".trace.csv", format_trace_csv(r));

  RunManifest m;
  m.command = "search";
  m.master_seed = cmd.seed;
  m.config = {{"d", cmd.d},          {"n", cmd.n},          {"S", cmd.s},
              {"stage1", cmd.stage1}, {"stage2", cmd.stage2}, {"seed", cmd.seed},
              {"poly", cmd.poly},     {"threads", config.threads}};
  m.outputs = {stem + ".net", stem + ".gen", stem + ".trace.csv"};
  m.results = {{"poly", poly_bits(r.poly)},
               {"stage1_best_wafom", format_number(r.stage1_best_wafom)},
               {"best_wafom", format_number(r.best_wafom)},
               {"best_trial", r.best_trial}};
  m.wall_time_seconds = clock.seconds();
  write_manifest(prefix + ".manifest.json", m);

  out << "d,n,S,stage1_best_wafom,best_wafom,log2_best_wafom\n";
  out << cmd.d << ',' << cmd.n << ',' << cmd.s << ',' << format_number(r.stage1_best_wafom) << ','
      << format_number(r.best_wafom) << ',' << format_number(std::log2(r.best_wafom)) << '\n';
  err << "wrote " << prefix << ".{net,gen,trace.csv,manifest.json}\n";
}

void run_figure1(const Figure1Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.out.empty()) throw ParseError("--out is required");
  if (cmd.dmin < 1 || cmd.dmax < cmd.dmin) throw DomainError("need 1 <= dmin <= dmax");
  const Stopwatch clock;
  const fs::path dir(cmd.out);
  const int threads = resolve_threads(cmd.threads);
  fs::create_directories(dir / "nets");

  std::ostringstream csv;
  csv << "d,best_wafom,sobol_wafom\n";
  std::vector<double> ds;
  std::vector<double> best;
  std::vector<double> sobol;
  RunManifest m;
  for (int d = cmd.dmin; d <= cmd.dmax; ++d) {
    SearchConfig config;
    config.dim = d;
    config.digits = cmd.n;
    config.dimensions = cmd.s;
    config.stage1_trials = cmd.stage1;
    config.stage2_trials = cmd.stage2;
    config.master_seed = figure1_seed(cmd.seed, d);
    config.threads = threads;
    const SearchResult r = search(config);
    const double sw = wafom_inversion(sobol_net(d, cmd.s, cmd.n), {.threads = threads}).value;

    char name[32];
    std::snprintf(name, sizeof name, "d%02d", d);
    const fs::path nets = dir / "nets";
    write_net_file(nets / (std::string(name) + ".net"), r.net());
    write_text(nets / (std::string(name) + ".gen"), format_generator(r.generator()));
    write_text(nets / (std::string(name) + ".trace.csv"), format_trace_csv(r));
    for (const char* ext : {".net", ".gen", ".trace.csv"}) m.outputs.push_back("nets/" + std::string(name) + ext);

    csv << d << ',' << format_number(r.best_wafom) << ',' << format_number(sw) << '\n';
    ds.push_back(d);
    best.push_back(r.best_wafom);
    sobol.push_back(sw);
    err << "d=" << d << " best_wafom=" << format_number(r.best_wafom) << " sobol_wafom=" << format_number(sw)
        << '\n';
  }
  write_text(dir / "figure1.csv", csv.str());
  m.outputs.insert(m.outputs.begin(), "figure1.csv");

  const auto best_slope = log2_slope(ds, best);
  const auto sobol_slope = log2_slope(ds, sobol);
  m.command = "figure1";
  m.master_seed = cmd.seed;
  m.config = {{"dmin", cmd.dmin},     {"dmax", cmd.dmax}, {"n", cmd.n},       {"S", cmd.s},
              {"stage1", cmd.stage1}, {"stage2", cmd.stage2}, {"seed", cmd.seed}, {"threads", threads}};
  m.results = {{"slope_log2_best_wafom", number_or_null(best_slope)},
               {"slope_log2_sobol_wafom", number_or_null(sobol_slope)}};
  m.wall_time_seconds = clock.seconds();
  write_manifest(dir / "figure1.manifest.json", m);

  out << csv.str();
  if (best_slope) out << "# slope_log2_best_wafom=" << format_number(*best_slope) << '\n';
}

void run_figure2(const Figure2Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.out.empty()) throw ParseError("--out is required");
  const Stopwatch clock;
  const fs::path dir(cmd.out);

  std::vector<LinearNet> searched;
  int n = cmd.n;
  int s = cmd.s;
  std::set<int> ds;
  if (!cmd.nets_dir.empty()) {
    if (!fs::is_directory(cmd.nets_dir)) throw ParseError("--nets is not a directory: " + cmd.nets_dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(cmd.nets_dir)) {
      if (e.is_regular_file() && e.path().extension() == ".net") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("no .net files in " + cmd.nets_dir);
    for (const auto& f : files) searched.push_back(read_net_file(f));
    n = searched.front().digits();
    s = searched.front().dimensions();
    for (const auto& net : searched) {
      if (net.digits() != n || net.dimensions() != s) throw DimensionError("nets in --nets disagree on n or S");
      ds.insert(net.dim());
    }
  } else {
    if (cmd.dmin < 1 || cmd.dmax < cmd.dmin) throw DomainError("need 1 <= dmin <= dmax");
    for (int d = cmd.dmin; d <= cmd.dmax; ++d) ds.insert(d);
  }

  const Integrand f = make_integrand(cmd.integrand, s, parse_params(cmd.params));
  double reference = 0.0;
  if (f.name == "asian") {
    ReferenceOptions options;
    options.log2_points = cmd.reference_log2;
    options.digits = n;
    reference = reference_price(AsianParams::from_map(f.params), options);
  } else if (f.exact_integral) {
    reference = *f.exact_integral;
  } else {
    throw DomainError("integrand has no reference value");
  }

  std::vector<std::pair<std::string, std::vector<ErrorRow>>> families;
  if (!searched.empty()) families.emplace_back("searched", error_curve(searched, f, reference));
  std::vector<LinearNet> sobol;
  std::vector<std::pair<int, PointSet>> halton;
  std::vector<std::pair<int, PointSet>> faure;
  for (int d : ds) {
    sobol.push_back(sobol_net(d, s, n));
    halton.emplace_back(d, halton_points(std::uint64_t{1} << d, s));
    faure.emplace_back(d, faure_points(std::uint64_t{1} << d, s));
  }
  families.emplace_back("sobol", error_curve(sobol, f, reference));
  families.emplace_back("halton", error_curve(halton, f, reference));
  families.emplace_back("faure", error_curve(faure, f, reference));

  RunManifest m;
  m.command = "figure2";
  m.master_seed = cmd.seed;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : f.params) params[k] = format_number(v);
  m.config = {{"nets", cmd.nets_dir}, {"integrand", f.name}, {"params", params},       {"n", n},
              {"S", s},               {"reference_log2", cmd.reference_log2}, {"seed", cmd.seed}};
  m.results["reference"] = format_number(reference);

  out << "family,d,N,wafom,abs_error\n";
  for (const auto& [family, rows] : families) {
    const std::string file = "figure2_" + family + ".csv";
    write_text(dir / file, format_error_csv(rows, f.name, cmd.seed));
    m.outputs.push_back(file);
    std::vector<double> x;
    std::vector<double> y;
    for (const ErrorRow& r : rows) {
      x.push_back(r.dim);
      y.push_back(r.abs_error);
      out << family << ',' << r.dim << ',' << r.points << ',' << (r.wafom ? format_number(*r.wafom) : "") << ','
          << format_number(r.abs_error) << '\n';
    }
    m.results["slope_log2_error_" + family] = number_or_null(log2_slope(x, y));
  }
  m.wall_time_seconds = clock.seconds();
  write_manifest(dir / "figure2.manifest.json", m);
  err << "reference=" << format_number(reference) << "; wrote " << families.size() << " error curves to "
      << dir.string() << '\n';
}

void run_spectrum(const SpectrumCommand& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.n < 1 || cmd.s < 1) throw DomainError("n and S must be positive");
  if (cmd.n * cmd.s > 20) throw CapacityError("spectrum needs n*S <= 20");
  const Stopwatch clock;
  const Shape shape{cmd.n, cmd.s};
  auto params = parse_params(cmd.params);
  if (cmd.integrand == "walsh" && !params.count("n")) params["n"] = cmd.n;
  const Integrand f = make_integrand(cmd.integrand, cmd.s, params);

  // f_n(B) is the value at the centre of the cube I_B.
  std::vector<double> table(std::size_t{1} << shape.flat_size());
  for (std::uint64_t b = 0; b < table.size(); ++b) {
    table[b] = f(to_unit_cube(NetPoint::from_index(shape, b), true));
  }
  const auto coeffs = fourier_transform(table, shape);

  std::ostringstream csv;
  csv << "A,mu,abs_coeff\n";
  for (std::uint64_t a = 0; a < coeffs.size(); ++a) {
    csv << a << ',' << mu(NetPoint::from_index(shape, a)) << ',' << format_number(std::fabs(coeffs[a])) << '\n';
  }
  if (cmd.out.empty()) {
    out << csv.str();
    return;
  }
  write_text(cmd.out, csv.str());
  RunManifest m;
  m.command = "spectrum";
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : f.params) p[k] = format_number(v);
  m.config = {{"n", cmd.n}, {"S", cmd.s}, {"integrand", f.name}, {"params", p}};
  m.outputs = {fs::path(cmd.out).filename().string()};
  m.wall_time_seconds = clock.seconds();
  write_manifest(cmd.out + ".manifest.json", m);
  err << "wrote " << coeffs.size() << " coefficients to " << cmd.out << '\n';
}

}  // namespace wafomlab::cli
