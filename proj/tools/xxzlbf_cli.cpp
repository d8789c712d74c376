// Command-line frontend: exact overlap/fidelity tables, character tables,
// finite-size-versus-series comparisons, ground-state vectors, and the named
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 degeneracy or consistency error.

#include "xxzlbf/asymptotics.hpp"
#include "xxzlbf/characters.hpp"
#include "xxzlbf/overlap.hpp"
#include "xxzlbf/spin_chain.hpp"
#include "xxzlbf/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace xxz;

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

std::string word_bits(std::uint32_t w, int sites) {
  std::string s(sites, '0');
  for (int i = 0; i < sites; ++i)
    if ((w >> (sites - 1 - i)) & 1U) s[i] = '1';
  return s;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    quoted += c;
    if (c == '"') quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Table assembled by the subcommands: CSV cells as strings, JSON rows as
// objects (exact rationals as {"num","den"} string pairs, floats as decimal
// strings at the configured precision).
struct Output {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
  json rows = json::array();
  json checks = json::array();
};

int emit(const json& config, const Output& output, const std::string& format,
         const std::string& out_path) {
  std::ostringstream buf;
  if (format == "csv") {
    for (std::size_t i = 0; i < output.header.size(); ++i)
      buf << (i ? "," : "") << csv_field(output.header[i]);
    buf << '\n';
    for (const auto& row : output.cells) {
      for (std::size_t i = 0; i < row.size(); ++i) buf << (i ? "," : "") << csv_field(row[i]);
      buf << '\n';
    }
  } else {
    const json doc{{"config", config}, {"rows", output.rows}, {"checks", output.checks}};
    buf << doc.dump(2) << '\n';
  }
  if (out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream file(out_path);
    if (!file) throw ArgumentError("cannot open output file: " + out_path);
    file << buf.str();
  }
  return 0;
}

struct Options {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  std::string x_text = "1";
  std::string format = "csv";
  int precision = 60;
  unsigned seed = 7;
  int max_n = 12;
  std::string out;
  std::string suite;
  bool x_given = false;
};

json base_config(const std::string& subcommand, const Options& opt) {
  json config{{"subcommand", subcommand}, {"format", opt.format}, {"precision", opt.precision}};
  if (!opt.out.empty()) config["out"] = opt.out;
  return config;
}

Rational parse_x(const Options& opt) {
  const Rational x = parse_rational(opt.x_text);
  if (x <= 0) throw ArgumentError("x must be positive");
  return x;
}

int cmd_lbf(const Options& opt) {
  if (opt.n1 % 2 != 0 && opt.n2 % 2 != 0)
    throw ArgumentError("lbf: ill-defined for odd-odd (N1, N2)");
  const Rational x = parse_x(opt);
  const Rational o = overlap_determinant(opt.n1, opt.n2, x);
  const Real f = log_fidelity(opt.n1, opt.n2, x);

  json config = base_config("lbf", opt);
  config["n1"] = opt.n1;
  config["n2"] = opt.n2;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"n1", "n2", "x", "overlap", "lbf"};
  const std::string f_str = format_real(f, opt.precision);
  output.cells.push_back({std::to_string(opt.n1), std::to_string(opt.n2), rational_str(x),
                          rational_str(o), f_str});
  output.rows.push_back(json{{"n1", opt.n1},
                             {"n2", opt.n2},
                             {"x", rational_json(x)},
                             {"overlap", rational_json(o)},
                             {"lbf", f_str}});
  return emit(config, output, opt.format, opt.out);
}

int cmd_overlap(const Options& opt) {
  const Rational x = parse_x(opt);
  // For two odd blocks the overlap vanishes identically (the magnetisations
  // of the product state and the full ground state differ).
  const Rational o = overlap_defined(opt.n1, opt.n2)
                         ? overlap_determinant(opt.n1, opt.n2, x)
                         : Rational(0);

  json config = base_config("overlap", opt);
  config["n1"] = opt.n1;
  config["n2"] = opt.n2;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"n1", "n2", "x", "overlap"};
  output.cells.push_back(
      {std::to_string(opt.n1), std::to_string(opt.n2), rational_str(x), rational_str(o)});
  output.rows.push_back(json{
      {"n1", opt.n1}, {"n2", opt.n2}, {"x", rational_json(x)}, {"overlap", rational_json(o)}});
  return emit(config, output, opt.format, opt.out);
}

int cmd_char(const Options& opt) {
  const Rational x = parse_x(opt);

  json config = base_config("char", opt);
  config["n"] = opt.n;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"n",           "chi_ones",         "special_form",
                   "special_value", "normalized_value", "normalized_float"};
  for (int n = 1; n <= opt.n; ++n) {
    const Int ones = char_homogeneous(n);
    const SpecialCharForm form = special_char_form(n);
    const std::string form_str = "3^" + std::to_string(form.three_power) + " * (" +
                                 form.det.to_string() + ") / (1 - x + x^2)^" +
                                 std::to_string(form.cyclo_power);
    const Rational special = special_char(n, x);
    const Rational normalized = normalized_char_exact(n, x);
    const std::string norm_float = format_real(to_real(normalized), opt.precision);
    output.cells.push_back({std::to_string(n), ones.str(), form_str, rational_str(special),
                            rational_str(normalized), norm_float});
    output.rows.push_back(json{{"n", n},
                               {"chi_ones", ones.str()},
                               {"special_form", form_str},
                               {"special_value", rational_json(special)},
                               {"normalized_value", rational_json(normalized)},
                               {"normalized_float", norm_float}});
  }
  return emit(config, output, opt.format, opt.out);
}

int cmd_compare(const Options& opt) {
  if (opt.n < 8) throw ArgumentError("compare: need N >= 8");
  const Rational x = parse_x(opt);

  json config = base_config("compare", opt);
  config["n"] = opt.n;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"N", "N1", "N2", "xi", "F_exact", "F_asymp", "diff"};
  for (const CompareRow& row : compare_sweep(opt.n, x)) {
    const std::string xi = format_real(row.xi, opt.precision);
    const std::string exact = format_real(row.exact, opt.precision);
    const std::string series = format_real(row.series, opt.precision);
    const std::string diff = format_real(row.difference, opt.precision);
    output.cells.push_back({std::to_string(opt.n), std::to_string(row.n1),
                            std::to_string(row.n2), xi, exact, series, diff});
    output.rows.push_back(json{{"N", opt.n},
                               {"N1", row.n1},
                               {"N2", row.n2},
                               {"xi", xi},
                               {"F_exact", exact},
                               {"F_asymp", series},
                               {"diff", diff}});
  }
  return emit(config, output, opt.format, opt.out);
}

int cmd_asymptote(const Options& opt) {
  if (opt.n1 % 2 != 0 && opt.n2 % 2 != 0)
    throw ArgumentError("asymptote: ill-defined for odd-odd (N1, N2)");
  const Rational x = parse_x(opt);
  const int total = opt.n1 + opt.n2;
  const Real r = r_from_x(to_real(x));
  const Real xi = Real(opt.n1) / total;
  const Real series = lbf_asymptotic(opt.n1, opt.n2, r);

  json config = base_config("asymptote", opt);
  config["n1"] = opt.n1;
  config["n2"] = opt.n2;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"N", "N1", "N2", "xi", "F_exact", "F_asymp", "diff"};
  const std::string xi_str = format_real(xi, opt.precision);
  const std::string series_str = format_real(series, opt.precision);
  output.cells.push_back({std::to_string(total), std::to_string(opt.n1), std::to_string(opt.n2),
                          xi_str, "", series_str, ""});
  output.rows.push_back(json{{"N", total},
                             {"N1", opt.n1},
                             {"N2", opt.n2},
                             {"xi", xi_str},
                             {"F_exact", nullptr},
                             {"F_asymp", series_str},
                             {"diff", nullptr}});
  return emit(config, output, opt.format, opt.out);
}

int cmd_ground(const Options& opt) {
  const Rational x = parse_x(opt);
  const Vec<Rational> v = ground_state(opt.n, x);
  const Rational energy = ground_energy(opt.n, x);
  const SectorBasis basis = SectorBasis::ground_sector(opt.n);

  json config = base_config("ground", opt);
  config["n"] = opt.n;
  config["x"] = rational_str(x);

  Output output;
  output.header = {"index", "word", "value", "energy"};
  for (int i = 0; i < basis.dimension(); ++i) {
    const std::string word = word_bits(basis.words[i], opt.n);
    output.cells.push_back(
        {std::to_string(i), word, rational_str(v(i)), rational_str(energy)});
    output.rows.push_back(json{{"index", i},
                               {"word", word},
                               {"value", rational_json(v(i))},
                               {"energy", rational_json(energy)}});
  }
  return emit(config, output, opt.format, opt.out);
}

int cmd_verify(const Options& opt) {
  const bool all = opt.suite == "all";
  std::vector<CheckResult> checks;
  const auto append = [&checks](std::vector<CheckResult> batch) {
    for (auto& c : batch) checks.push_back(std::move(c));
  };
  if (all || opt.suite == "qkz") append(verify_qkz(opt.seed));
  if (all || opt.suite == "oracle") {
    std::vector<Rational> xs;
    if (opt.x_given) xs.push_back(parse_x(opt));
    append(verify_oracle(opt.max_n, xs));
  }
  if (all || opt.suite == "characters") append(verify_characters(20, 8, 8, opt.seed));
  if (all || opt.suite == "asymptotics") {
    const Rational sweep_x = opt.x_given ? parse_x(opt) : Rational(1, 2);
    append(verify_asymptotics(100, 200, 20, sweep_x));
  }

  json config = base_config("verify", opt);
  config["suite"] = opt.suite;
  config["seed"] = opt.seed;
  config["max_n"] = opt.max_n;
  if (opt.x_given) config["x"] = rational_str(parse_x(opt));

  Output output;
  for (const CheckResult& c : checks) {
    output.checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cerr << (c.pass ? "ok   " : "FAIL ") << c.name
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
  }
  emit(config, output, "json", opt.out);
  return all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact logarithmic bipartite fidelity of the open XXZ chain at Delta = -1/2,\n"
      "with determinant/character identities and asymptotic comparisons."};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", opt.precision, "Printed decimal digits for float columns")
        ->check(CLI::Range(30, 60))
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
  };
  const auto add_x = [&opt](CLI::App* cmd) {
    return cmd->add_option("--x", opt.x_text, "Boundary parameter x > 0 (\"p/q\" or decimal)")
        ->capture_default_str();
  };

  CLI::App* lbf = app.add_subcommand(
      "lbf", "Exact overlap and logarithmic bipartite fidelity of one splitting");
  lbf->add_option("--n1", opt.n1, "Left block size")->required()->check(CLI::NonNegativeNumber);
  lbf->add_option("--n2", opt.n2, "Right block size")->required()->check(CLI::NonNegativeNumber);
  add_x(lbf);
  add_common(lbf);

  CLI::App* overlap =
      app.add_subcommand("overlap", "Exact ground-state overlap O_{N1,N2}(x)");
  overlap->add_option("--n1", opt.n1, "Left block size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  overlap->add_option("--n2", opt.n2, "Right block size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_x(overlap);
  add_common(overlap);

  CLI::App* chr = app.add_subcommand(
      "char", "Symplectic character table: homogeneous value, specialised rational form, "
              "and normalised values for N = 1..n");
  chr->add_option("--n", opt.n, "Largest N")->required()->check(CLI::PositiveNumber);
  add_x(chr);
  add_common(chr);

  CLI::App* compare = app.add_subcommand(
      "compare", "Finite-size fidelity versus truncated series across all splittings of N");
  compare->add_option("--n", opt.n, "System size N (>= 8)")->required();
  add_x(compare);
  add_common(compare);

  CLI::App* asymptote =
      app.add_subcommand("asymptote", "Truncated asymptotic series for one splitting");
  asymptote->add_option("--n1", opt.n1, "Left block size")
      ->required()
      ->check(CLI::PositiveNumber);
  asymptote->add_option("--n2", opt.n2, "Right block size")
      ->required()
      ->check(CLI::PositiveNumber);
  add_x(asymptote);
  add_common(asymptote);

  CLI::App* ground =
      app.add_subcommand("ground", "Exact ground-state vector in the lexicographic sector basis");
  ground->add_option("--n", opt.n, "Number of sites")->required()->check(CLI::PositiveNumber);
  add_x(ground);
  add_common(ground);

  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", opt.suite, "qkz | oracle | characters | asymptotics | all")
      ->required()
      ->check(CLI::IsMember({"qkz", "oracle", "characters", "asymptotics", "all"}));
  verify->add_option("--seed", opt.seed, "Seed for randomised identity checks")
      ->capture_default_str();
  verify->add_option("--max-n", opt.max_n, "Largest N1 + N2 for the oracle suite")
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  CLI::Option* x_opt = add_x(verify);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.x_given = x_opt->count() > 0;

  try {
    if (lbf->parsed()) return cmd_lbf(opt);
    if (overlap->parsed()) return cmd_overlap(opt);
    if (chr->parsed()) return cmd_char(opt);
    if (compare->parsed()) return cmd_compare(opt);
    if (asymptote->parsed()) return cmd_asymptote(opt);
    if (ground->parsed()) return cmd_ground(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
