#include "crosstalk/cli.hpp"

#include "crosstalk/bipartite.hpp"
#include "crosstalk/independence.hpp"
#include "crosstalk/information.hpp"
#include "crosstalk/sampler.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace crosstalk::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double parse_number(std::string_view text) {
  double value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

// Shared angle/label flags.
struct PointOptions {
  std::string mu = "0";
  std::string eta = "0";
  std::string nu = "0";
  std::string zeta = "0";
  bool degrees = false;
  int s = 0;
  int t = 0;
  double tol = kThetaTolerance;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--mu", mu, "polar angle of the first observable");
    cmd.add_option("--eta", eta, "azimuth of the first observable");
    cmd.add_option("--nu", nu, "polar angle of the second observable");
    cmd.add_option("--zeta", zeta, "azimuth of the second observable");
    cmd.add_flag("--deg", degrees, "read input angles in degrees");
    cmd.add_option("--s", s, "Bell label s")->check(CLI::Range(0, 1));
    cmd.add_option("--t", t, "Bell label t")->check(CLI::Range(0, 1));
    cmd.add_option("--tol", tol, "independence tolerance on theta")
        ->check(CLI::PositiveNumber);
  }

  double angle(const std::string& text) const {
    const double v = parse_angle(text);
    return degrees ? v * (kPi / 180.0) : v;
  }

  std::array<double, 4> angles() const { return {angle(mu), angle(eta), angle(nu), angle(zeta)}; }

  BellLabel label() const { return BellLabel{s, t}; }
};

ObservablePair<double> make_pair(const std::array<double, 4>& a) {
  try {
    return {Observabled(a[0], a[1]), Observabled(a[2], a[3])};
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

void print_table(std::ostream& out, const JointDistribution<double>& dist) {
  const auto& p = dist.values();
  out << "joint distribution p(k,l):\n";
  out << "          B=+1                     B=-1\n";
  out << "  A=+1    " << std::left << std::setw(25) << format_real(p[0]) << format_real(p[1])
      << "\n";
  out << "  A=-1    " << std::setw(25) << format_real(p[2]) << format_real(p[3]) << "\n"
      << std::right;
  const Marginals<double> m = marginals(dist);
  out << "marginals A: " << format_real(m.first[0]) << " " << format_real(m.first[1]) << "\n";
  out << "marginals B: " << format_real(m.second[0]) << " " << format_real(m.second[1]) << "\n";
}

void print_report(std::ostream& out, const CrosstalkReport& r) {
  out << "theta: " << format_real(r.theta) << "\n";
  out << "entropy (nats): " << format_real(r.entropy) << "\n";
  out << "mutual_info (nats): " << format_real(r.mutual_info) << "\n";
  out << "degree: " << format_real(r.degree) << "\n";
  out << "independent: " << (r.independent ? "true" : "false")
      << " (tol " << format_real(r.tolerance) << ")\n";
}

void print_point(std::ostream& out, const ObservablePair<double>& pair, BellLabel label) {
  out << "mu=" << format_real(pair.first.polar()) << " eta=" << format_real(pair.first.azimuth())
      << " nu=" << format_real(pair.second.polar())
      << " zeta=" << format_real(pair.second.azimuth()) << " s=" << label.s()
      << " t=" << label.t() << "\n";
}

double max_cell_gap(const JointDistribution<double>& a, const JointDistribution<double>& b) {
  double gap = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    gap = std::max(gap, std::abs(a.values()[i] - b.values()[i]));
  }
  return gap;
}

// probs ----------------------------------------------------------------------

struct ProbsCommand {
  PointOptions point;
  std::string method = "closed";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("probs", "joint distribution and crosstalk at one point");
    point.add_to(*cmd);
    cmd->add_option("--method", method, "closed | amplitude | brute | all")
        ->check(CLI::IsMember({"closed", "amplitude", "brute", "all"}));
  }

  int run(std::ostream& out) const {
    const ObservablePair<double> pair = make_pair(point.angles());
    const BellLabel label = point.label();

    const auto closed = joint_distribution_closed(pair, label);
    const auto amplitude = joint_distribution_amplitude(pair, label);
    const auto brute = joint_distribution_bruteforce(pair, bell_state(label));

    const JointDistribution<double>& chosen =
        method == "amplitude" ? amplitude : method == "brute" ? brute : closed;

    out << "method: " << method << "\n";
    print_point(out, pair, label);
    print_table(out, chosen);
    print_report(out, report_from_distribution(chosen, point.tol));
    if (method == "all") {
      const double gap = std::max(
          {max_cell_gap(closed, amplitude), max_cell_gap(closed, brute),
           max_cell_gap(amplitude, brute)});
      out << "max pairwise discrepancy: " << format_real(gap) << "\n";
    }
    return kExitOk;
  }
};

// sweep ----------------------------------------------------------------------

struct Range {
  std::string name;
  double start = 0;
  double stop = 0;
  int steps = 1;

  double at(int i) const {
    if (steps == 1) return start;
    if (i == steps - 1) return stop;
    return start + (stop - start) * double(i) / double(steps - 1);
  }
};

Range parse_range(const std::string& arg, bool degrees) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) throw UsageError("--vary expects name=start:stop:steps");
  Range r;
  r.name = arg.substr(0, eq);
  if (r.name != "mu" && r.name != "eta" && r.name != "nu" && r.name != "zeta") {
    throw UsageError("--vary: unknown parameter '" + r.name + "'");
  }
  const std::string rest = arg.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw UsageError("--vary expects name=start:stop:steps");
  }
  try {
    const double scale = degrees ? kPi / 180.0 : 1.0;
    r.start = parse_angle(rest.substr(0, c1)) * scale;
    r.stop = parse_angle(rest.substr(c1 + 1, c2 - c1 - 1)) * scale;
    const double steps = parse_number(rest.substr(c2 + 1));
    if (steps < 1 || steps != std::floor(steps) || steps > 1e7) {
      throw UsageError("--vary: steps must be a positive integer");
    }
    r.steps = int(steps);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--vary: ") + e.what());
  }
  return r;
}

struct SweepCommand {
  PointOptions point;
  std::vector<std::string> vary;
  std::string out_path;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("sweep", "CSV sweep over one or two angles");
    point.add_to(*cmd);
    cmd->add_option("--vary", vary, "name=start:stop:steps (one or two)")->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
  }

  int run(std::ostream& out) const {
    if (vary.empty() || vary.size() > 2) {
      throw UsageError("sweep: give one or two --vary ranges");
    }
    std::vector<Range> ranges;
    for (const auto& arg : vary) ranges.push_back(parse_range(arg, point.degrees));
    if (ranges.size() == 2 && ranges[0].name == ranges[1].name) {
      throw UsageError("sweep: the two --vary ranges must name different parameters");
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
      file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
      if (!*file) throw UsageError("sweep: cannot open " + out_path);
      sink = file.get();
    }

    const std::array<double, 4> base = point.angles();
    const BellLabel label = point.label();
    const auto slot = [](const std::string& name) {
      static const std::map<std::string, int> index{{"mu", 0}, {"eta", 1}, {"nu", 2}, {"zeta", 3}};
      return index.at(name);
    };

    // Validate the whole grid before writing anything.
    std::vector<ObservablePair<double>> pairs;
    const int outer = ranges[0].steps;
    const int inner_steps = ranges.size() == 2 ? ranges[1].steps : 1;
    pairs.reserve(std::size_t(outer) * std::size_t(inner_steps));
    for (int i = 0; i < outer; ++i) {
      for (int j = 0; j < inner_steps; ++j) {
        std::array<double, 4> a = base;
        a[slot(ranges[0].name)] = ranges[0].at(i);
        if (ranges.size() == 2) a[slot(ranges[1].name)] = ranges[1].at(j);
        pairs.push_back(make_pair(a));
      }
    }

    std::ostream& csv = *sink;
    csv << "mu,eta,nu,zeta,s,t,p00,p01,p10,p11,entropy,mutual_info,degree,independent\n";
    for (const auto& pair : pairs) {
      const auto dist = joint_distribution_closed(pair, label);
      const CrosstalkReport r = report_from_distribution(dist, point.tol);
      const auto& p = dist.values();
      csv << format_real(pair.first.polar()) << ',' << format_real(pair.first.azimuth()) << ','
          << format_real(pair.second.polar()) << ',' << format_real(pair.second.azimuth()) << ','
          << label.s() << ',' << label.t() << ',' << format_real(p[0]) << ','
          << format_real(p[1]) << ',' << format_real(p[2]) << ',' << format_real(p[3]) << ','
          << format_real(r.entropy) << ',' << format_real(r.mutual_info) << ','
          << format_real(r.degree) << ',' << (r.independent ? 1 : 0) << '\n';
    }
    csv.flush();
    return kExitOk;
  }
};

// verify ---------------------------------------------------------------------

struct VerifyCommand {
  long long samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-12;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "cross-check the three methods and invariants");
    cmd->add_option("--samples", samples, "number of random points")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--tol", tol, "maximum admitted discrepancy")->check(CLI::PositiveNumber);
  }

  struct Worst {
    double value = 0;
    std::array<double, 4> angles{};
    BellLabel label;
  };

  int run(std::ostream& out) const {
    std::mt19937_64 engine(splitmix64(seed));
    const auto uniform = [&engine] {
      return double(engine() >> 11) * (1.0 / 9007199254740992.0);  // [0, 1)
    };

    std::map<std::string, Worst> worst{{"methods", {}},       {"closed_variants", {}},
                                       {"sum_to_one", {}},    {"klein_symmetry", {}},
                                       {"marginals", {}},     {"commutator", {}}};
    const auto record = [&](const std::string& key, double value, const std::array<double, 4>& a,
                            BellLabel label) {
      Worst& w = worst[key];
      if (!(value <= w.value)) w = {value, a, label};
    };

    for (long long i = 0; i < samples; ++i) {
      const std::array<double, 4> a{uniform() * kPi, uniform() * 2 * kPi, uniform() * kPi,
                                    uniform() * 2 * kPi};
      const int s = int(engine() & 1U);
      const int t = int(engine() & 1U);
      const BellLabel label{s, t};
      const ObservablePair<double> pair{Observabled(a[0], a[1]), Observabled(a[2], a[3])};

      const auto terms = closed_form_terms(pair, label);
      record("closed_variants",
             std::max(std::abs(terms.diagonal - terms.diagonal_alt),
                      std::abs(terms.off_diagonal - terms.off_diagonal_alt)),
             a, label);

      const auto brute = joint_distribution_bruteforce(pair, bell_state(label));
      const auto amplitude = joint_distribution_amplitude(pair, label);
      const auto closed = JointDistribution<double>(
          {terms.diagonal, terms.off_diagonal, terms.off_diagonal, terms.diagonal});
      record("methods",
             std::max({max_cell_gap(brute, amplitude), max_cell_gap(brute, closed),
                       max_cell_gap(amplitude, closed)}),
             a, label);

      for (const auto* dist : {&brute, &amplitude, &closed}) {
        const auto& p = dist->values();
        record("sum_to_one", std::abs(p[0] + p[1] + p[2] + p[3] - 1.0), a, label);
        record("klein_symmetry", std::max(std::abs(p[0] - p[3]), std::abs(p[1] - p[2])), a,
               label);
        const Marginals<double> m = marginals(*dist);
        for (double v : {m.first[0], m.first[1], m.second[0], m.second[1]}) {
          record("marginals", std::abs(v - 0.5), a, label);
        }
      }
      record("commutator", commutator_norm(pair), a, label);
    }

    bool ok = true;
    out << "samples: " << samples << " seed: " << seed << " tol: " << format_real(tol) << "\n";
    for (const auto& [name, w] : worst) {
      const bool pass = w.value <= tol;
      ok = ok && pass;
      out << (pass ? "ok   " : "FAIL ") << name << " max=" << format_real(w.value) << "\n";
      if (!pass) {
        out << "     worst case: mu=" << format_real(w.angles[0])
            << " eta=" << format_real(w.angles[1]) << " nu=" << format_real(w.angles[2])
            << " zeta=" << format_real(w.angles[3]) << " s=" << w.label.s()
            << " t=" << w.label.t() << "\n";
      }
    }
    out << (ok ? "verification passed" : "verification FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
  }
};

// independence ---------------------------------------------------------------

struct IndependenceCommand {
  std::string plane;
  int s = 0;
  int t = 0;
  std::optional<std::string> mu;
  std::optional<std::string> eta;
  bool degrees = false;

  void attach(CLI::App& app) {
    auto* cmd =
        app.add_subcommand("independence", "closed-form independence conditions in a plane");
    cmd->add_option("--plane", plane, "x0 | y0 | z0")->required();
    cmd->add_option("--s", s, "Bell label s")->check(CLI::Range(0, 1));
    cmd->add_option("--t", t, "Bell label t")->check(CLI::Range(0, 1));
    cmd->add_option("--mu", mu, "anchor polar angle (x0, y0)");
    cmd->add_option("--eta", eta, "anchor azimuth (z0)");
    cmd->add_flag("--deg", degrees, "read the anchor in degrees");
  }

  int run(std::ostream& out) const {
    CoordinatePlane p;
    std::string chart;
    if (plane == "x0") {
      p = CoordinatePlane::X;
      chart = "eta = zeta = π/2, mu, nu in [0, π]";
    } else if (plane == "y0") {
      p = CoordinatePlane::Y;
      chart = "eta = zeta = 0, mu, nu in [0, π]";
    } else if (plane == "z0") {
      p = CoordinatePlane::Z;
      chart = "mu = nu = π/2, eta, zeta in [0, 2π)";
    } else {
      throw UsageError("independence: unknown plane '" + plane + "' (x0, y0, z0)");
    }
    const BellLabel label{s, t};
    const PlaneCondition condition = plane_condition(p, label);
    const bool azimuthal = p == CoordinatePlane::Z;
    const std::string a = azimuthal ? "η" : "μ";
    const std::string b = azimuthal ? "ζ" : "ν";

    out << "plane: " << plane << " (" << chart << ")\n";
    out << "bell state: s=" << s << " t=" << t << "\n";
    out << "condition: "
        << (condition.kind == ConditionKind::Sum ? a + "+" + b : "|" + a + "−" + b + "|")
        << " ∈ {";
    for (std::size_t i = 0; i < condition.targets.size(); ++i) {
      out << (i ? ", " : "") << format_pi_multiple(condition.targets[i]);
    }
    out << "}\n";

    const std::optional<std::string>& anchor = azimuthal ? eta : mu;
    const std::optional<std::string>& misplaced = azimuthal ? mu : eta;
    if (misplaced) {
      throw UsageError(azimuthal ? "independence: plane z0 takes an --eta anchor"
                                 : "independence: planes x0/y0 take a --mu anchor");
    }
    if (anchor) {
      double value = 0;
      try {
        value = parse_angle(*anchor) * (degrees ? kPi / 180.0 : 1.0);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::vector<double> partners;
      try {
        partners = partner_solutions(condition, value);
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      out << "anchor: " << a << "=" << format_real(value) << "\n";
      out << "solutions: " << b << " ∈ {";
      for (std::size_t i = 0; i < partners.size(); ++i) {
        out << (i ? ", " : "") << format_pi_multiple(partners[i]);
      }
      out << "}\n";
      out << "solutions (rad):";
      for (double v : partners) out << " " << format_real(v);
      out << "\n";
    }
    return kExitOk;
  }
};

// sample ---------------------------------------------------------------------

struct SampleCommand {
  PointOptions point;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("sample", "Monte-Carlo joint measurements vs closed form");
    point.add_to(*cmd);
    cmd->add_option("--n", n, "number of draws")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed");
  }

  int run(std::ostream& out) const {
    const ObservablePair<double> pair = make_pair(point.angles());
    const BellLabel label = point.label();
    const auto closed = joint_distribution_closed(pair, label);
    const SampleCounts counts = sample(closed, n, seed);
    const auto empirical = empirical_distribution(counts);
    const auto z = z_scores(counts, closed);

    print_point(out, pair, label);
    out << "n: " << counts.n << " seed: " << counts.seed << "\n";
    out << "cell  count         empirical                 closed                    z\n";
    static constexpr std::array<const char*, 4> kCells{"00", "01", "10", "11"};
    for (std::size_t i = 0; i < 4; ++i) {
      out << kCells[i] << "    " << std::left << std::setw(14) << counts.counts[i]
          << std::setw(26) << format_real(empirical.values()[i]) << std::setw(26)
          << format_real(closed.values()[i]) << std::right << format_real(z[i]) << "\n";
    }
    out << "empirical report:\n";
    print_report(out, empirical_report(counts, point.tol));
    out << "closed-form report:\n";
    print_report(out, report_from_distribution(closed, point.tol));
    return kExitOk;
  }
};

}  // namespace

double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  }
  const auto pi_at = text.find("pi");
  if (pi_at == std::string::npos) return parse_number(text);

  std::string coeff = text.substr(0, pi_at);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double scale = 1;
  if (coeff == "-") {
    scale = -1;
  } else if (!coeff.empty() && coeff != "+") {
    scale = parse_number(coeff);
  }
  const std::string tail = text.substr(pi_at + 2);
  double divisor = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("not an angle: '" + raw + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0) throw std::invalid_argument("division by zero in '" + raw + "'");
  }
  return scale * kPi / divisor;
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

std::string format_pi_multiple(double value) {
  if (std::abs(value) <= 1e-12) return "0";
  for (int den : {1, 2, 3, 4, 6, 8, 12}) {
    const double k = value * den / kPi;
    const double rounded = std::round(k);
    if (std::abs(k - rounded) <= 1e-10 && rounded != 0) {
      const long long num = static_cast<long long>(rounded);
      std::string s = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
      s += "π";
      if (den != 1) s += "/" + std::to_string(den);
      return s;
    }
  }
  return format_real(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint-measurement statistics and crosstalk for two qubit observables on Bell states",
               "crosstalk"};
  app.require_subcommand(1);

  ProbsCommand probs;
  SweepCommand sweep;
  VerifyCommand verify;
  IndependenceCommand independence;
  SampleCommand sample_cmd;
  probs.attach(app);
  sweep.attach(app);
  verify.attach(app);
  independence.attach(app);
  sample_cmd.attach(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("probs")) return probs.run(out);
    if (app.got_subcommand("sweep")) return sweep.run(out);
    if (app.got_subcommand("verify")) return verify.run(out);
    if (app.got_subcommand("independence")) return independence.run(out);
    if (app.got_subcommand("sample")) return sample_cmd.run(out);
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace crosstalk::cli
