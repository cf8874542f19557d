#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cntube/error.hpp"
#include "cntube/reps.hpp"
#include "cntube/spectrum.hpp"
#include "cntube/verify.hpp"

namespace cntube::cli {

using nlohmann::ordered_json;
using json = ordered_json;

namespace {

constexpr Int kMaxComponent = 1'000'000;

class IoError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string format;
  std::uint64_t seed = 1;
  double kappa = 1.0;
  std::string c;
  std::string hamada;

  // k specifications; the prime set is used by cg only.
  std::string k, kprime;
  std::optional<Int> line, kprime_line;
  std::optional<double> param, kprime_param;

  int samples = 256;
  std::string out_path;
  bool gnuplot = false;
  int trials = 100;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    parts.push_back(cur);
  if (!s.empty() && s.back() == sep)
    parts.emplace_back();
  return parts;
}

template <class T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw InvalidArgument(std::string("cannot parse ") + what + " component '" + text + "'");
  return value;
}

template <class T, std::size_t N>
std::array<T, N> parse_list(const std::string& text, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != N)
    throw InvalidArgument(std::string(what) + " expects " + std::to_string(N) +
                          " comma-separated values, got '" + text + "'");
  std::array<T, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = parse_number<T>(parts[i], what);
  return out;
}

json triple_json(const IntTriple& v) { return json::array({v[0], v[1], v[2]}); }
json k_json(const KVector& k) { return json::array({k[0], k[1], k[2]}); }
json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix2c& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i)
    rows.push_back(json::array({complex_json(m(i, 0)), complex_json(m(i, 1))}));
  return rows;
}

struct Chirality {
  ChiralityData cd;
  json info;
};

Chirality read_chirality(const Options& o) {
  if (o.c.empty() == o.hamada.empty())
    throw InvalidArgument("give exactly one of --c a,b,c or --hamada n1,n2");
  IntTriple triple{};
  json info;
  if (!o.c.empty()) {
    triple = parse_list<Int, 3>(o.c, "--c");
    info["source"] = "triple";
  } else {
    const auto h = parse_list<Int, 2>(o.hamada, "--hamada");
    for (Int x : h)
      if (std::abs(x) > kMaxComponent)
        throw InvalidArgument("--hamada component " + std::to_string(x) + " exceeds 10^6");
    triple = hamada_to_triple(h[0], h[1]);
    info["source"] = "hamada";
    info["hamada"] = json::array({h[0], h[1]});
  }
  for (Int x : triple)
    if (std::abs(x) > kMaxComponent)
      throw InvalidArgument("chirality component " + std::to_string(x) + " exceeds 10^6");
  Chirality out{analyze(triple), {}};
  info["input"] = triple_json(triple);
  info["c"] = triple_json(out.cd.c.coords());
  const auto& nm = out.cd.normalization;
  info["permutation"] = json::array({nm.permutation[0], nm.permutation[1], nm.permutation[2]});
  info["negated"] = nm.negated;
  out.info = std::move(info);
  return out;
}

// A raw triple is accepted if its sum is tiny; the residual mean is removed
// so decimal input like "3.14159,-3.14159,0" is usable.
KVector read_k(const std::string& text, std::optional<Int> line, std::optional<double> param,
               const ChiralityData& cd, const std::string& name) {
  const bool raw = !text.empty();
  if (raw == (line.has_value() || param.has_value()))
    throw InvalidArgument("give either --" + name + " k0,k1,k2 or --" + name + "-line/--" + name +
                          "-param");
  if (raw) {
    auto v = parse_list<double, 3>(text, ("--" + name).c_str());
    for (double x : v)
      if (!std::isfinite(x))
        throw InvalidArgument("--" + name + " has a non-finite component");
    const double mean = (v[0] + v[1] + v[2]) / 3.0;
    if (std::abs(3.0 * mean) > 1e-9)
      throw InvalidArgument("--" + name + " components must sum to zero");
    return KVector(v[0] - mean, v[1] - mean, -(v[0] - mean) - (v[1] - mean));
  }
  if (!line || !param)
    throw InvalidArgument("--" + name + "-line and --" + name + "-param must be given together");
  for (const auto& l : allowed_lines(cd))
    if (l.index == *line)
      return l.at(*param);
  throw InvalidArgument("no allowed line with index " + std::to_string(*line));
}

// ----- rendering -----

void render_text(const json& j, std::ostream& os, int depth);

std::string scalar_text(const json& j) {
  if (j.is_number_float())
    return format_double(j.get<double>());
  if (j.is_string())
    return j.get<std::string>();
  return j.dump();
}

bool is_flat(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) {
           return e.is_primitive() || (e.is_array() && is_flat(e));
         });
}

std::string inline_text(const json& j) {
  if (!j.is_array())
    return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i)
      s += ", ";
    s += inline_text(j[i]);
  }
  return s + "]";
}

void render_text(const json& j, std::ostream& os, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || (is_flat(value) && value.size() <= 4)) {
        os << pad << key << ": " << inline_text(value) << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(value, os, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        os << pad << "-\n";
        render_text(e, os, depth + 1);
      } else {
        os << pad << inline_text(e) << '\n';
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

void render_csv(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_csv(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_csv(j[i], path + "." + std::to_string(i), os);
  } else {
    os << path << ',' << scalar_text(j) << '\n';
  }
}

// -0.0 prints as "-0"; fold it into 0 so output does not depend on how a zero arose.
void clear_negative_zero(json& j) {
  if (j.is_number_float() && j.get<double>() == 0.0)
    j = 0.0;
  else if (j.is_structured())
    for (auto& e : j)
      clear_negative_zero(e);
}

void emit(const std::string& format, const std::string& command, const Chirality& ch,
          json payload, std::ostream& os) {
  clear_negative_zero(payload);
  if (format == "json") {
    json doc;
    doc["version"] = kFormatVersion;
    doc["command"] = command;
    doc["chirality"] = ch.info;
    doc["payload"] = payload;
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "key,value\n";
    render_csv(ch.info, "chirality", os);
    render_csv(payload, "", os);
  } else {
    os << "command: " << command << '\n' << "chirality:\n";
    render_text(ch.info, os, 1);
    render_text(payload, os, 0);
  }
}

// ----- commands -----

int cmd_describe(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ch = read_chirality(o);
  const auto& cd = ch.cd;
  json p;
  p["n"] = cd.n;
  p["c_tilde"] = triple_json(cd.c_tilde.coords());
  p["t"] = triple_json(cd.t.coords());
  p["w"] = triple_json(cd.w.coords());
  p["R"] = cd.R;
  p["q"] = cd.q;
  p["q_tilde"] = cd.q_tilde;
  p["class"] = std::string(to_string(cd.tube_class));
  p["circumference"] = cd.circumference();
  p["line_count"] = allowed_lines(cd).size();
  p["metallic"] = is_metallic(cd);
  json warnings = json::array();
  if (!cd.is_chiral()) {
    const std::string w = std::string(to_string(cd.tube_class)) +
                          " tube: symmetry group operations (reps, cg) are available for "
                          "chiral tubes only";
    warnings.push_back(w);
    err << "warning: " << w << '\n';
  }
  p["warnings"] = warnings;
  emit(o.format.empty() ? "json" : o.format, "describe", ch, p, out);
  return kOk;
}

std::string csv_row(const BandSample& s, double kappa) {
  std::string row = std::to_string(s.line_index);
  for (double x : {s.param, s.k[0], s.k[1], s.k[2], kappa * s.energy_plus,
                   kappa * s.energy_minus, s.lambda_phase}) {
    row += ',';
    row += format_double(x);
  }
  return row;
}

std::string gnuplot_script(const std::string& csv_path, const ChiralityData& cd, double kappa) {
  std::ostringstream os;
  os << "# bands of c=" << cd.c << ", kappa=" << format_double(kappa) << "\n"
     << "set datafile separator ','\n"
     << "set key off\n"
     << "set xlabel 'position along allowed line'\n"
     << "set ylabel 'E'\n"
     << "set yrange [" << format_double(-3.0 * kappa) << ":" << format_double(3.0 * kappa)
     << "]\n"
     << "plot '" << csv_path << "' every ::1 using 2:6 with points pt 7 ps 0.3, \\\n"
     << "     '' every ::1 using 2:7 with points pt 7 ps 0.3\n";
  return os.str();
}

int cmd_bands(const Options& o, std::ostream& out, std::ostream&) {
  const auto ch = read_chirality(o);
  const auto& cd = ch.cd;
  if (o.samples < 2)
    throw InvalidArgument("--samples must be at least 2");
  if (o.gnuplot && o.out_path.empty())
    throw InvalidArgument("--gnuplot needs --out so the script can reference the CSV");
  const std::string format = o.format.empty() ? "csv" : o.format;
  const auto samples = sample_bands(cd, o.samples);

  std::ostringstream body;
  if (format == "json") {
    json rows = json::array();
    for (const auto& s : samples)
      rows.push_back(json{{"line", s.line_index},
                          {"param", s.param},
                          {"k", k_json(s.k)},
                          {"E_plus", o.kappa * s.energy_plus},
                          {"E_minus", o.kappa * s.energy_minus},
                          {"lambda", s.lambda_phase}});
    json p;
    p["kappa"] = o.kappa;
    p["samples_per_line"] = o.samples;
    p["line_count"] = allowed_lines(cd).size();
    p["rows"] = std::move(rows);
    emit("json", "bands", ch, p, body);
  } else {
    body << "line,param,k0,k1,k2,E_plus,E_minus,lambda\n";
    for (const auto& s : samples)
      body << csv_row(s, o.kappa) << '\n';
  }

  if (o.out_path.empty()) {
    out << body.str();
    return kOk;
  }
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
      throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f)
      throw IoError("failed writing '" + path + "'");
  };
  write(o.out_path, body.str());
  if (o.gnuplot)
    write(o.out_path + ".gp", gnuplot_script(o.out_path, cd, o.kappa));
  return kOk;
}

double relation_residual(const RepMatrices& r, Int n) {
  const Matrix2c id = Matrix2c::Identity();
  Matrix2c rn = id;
  for (Int i = 0; i < n; ++i)
    rn *= r.rho;
  const Matrix2c st = r.sigma * r.tau, rt = r.rho * r.tau;
  double worst = 0.0;
  for (const Matrix2c& m : {Matrix2c(r.rho * r.sigma - r.sigma * r.rho), Matrix2c(rn - id),
                            Matrix2c(r.tau * r.tau - id), Matrix2c(st * st - id),
                            Matrix2c(rt * rt - id)})
    worst = std::max(worst, m.cwiseAbs().maxCoeff());
  return worst;
}

double unitarity_residual(const RepMatrices& r) {
  const Matrix2c id = Matrix2c::Identity();
  double worst = 0.0;
  for (const Matrix2c* m : {&r.rho, &r.sigma, &r.tau})
    worst = std::max(worst, (m->adjoint() * *m - id).cwiseAbs().maxCoeff());
  return worst;
}

json character_json(const Character& c) {
  return json{{"rho", complex_json(c.rho)},
              {"sigma", complex_json(c.sigma)},
              {"tau", complex_json(c.tau)}};
}

int cmd_reps(const Options& o, std::ostream& out, std::ostream&) {
  const auto ch = read_chirality(o);
  const auto& cd = ch.cd;
  if (!cd.is_chiral())
    throw NotChiral("representations are defined for chiral tubes only; c=" +
                    std::string(to_string(cd.tube_class)));
  const KVector k = read_k(o.k, o.line, o.param, cd, "k");
  if (!on_allowed_line(k, cd)) {
    std::ostringstream os;
    os.precision(17);
    os << "k=" << k << " is not on an allowed line: <k,c>/2pi = " << line_coordinate(k, cd);
    throw OffAllowedLine(os.str());
  }
  const auto cls = classify(k, cd);

  json p;
  p["k"] = k_json(k);
  p["line"] = static_cast<Int>(std::llround(line_coordinate(k, cd)));
  p["in_B"] = hexagon_B_contains(k, kGeometryTolerance);
  p["energy"] = o.kappa * dispersion(k);
  p["lambda"] = lambda_phase(k);
  p["classification"] = std::string(to_string(cls.kind));
  p["rho_turns"] = cls.rho_turns;
  p["sigma_turns"] = cls.sigma_turns;

  if (cls.kind == RepKind::one_dimensional_pair) {
    const auto& lp = lambda_set()[cls.lambda_index];
    p["lambda_point"] = json{{"index", cls.lambda_index}, {"alpha", lp.alpha}, {"beta", lp.beta}};
    p["character_table"] = character_json(cls.characters.at(0));
  } else {
    const auto r = rep_matrices(k, cd);
    p["matrices"] = json{{"rho", matrix_json(r.rho)},
                         {"sigma", matrix_json(r.sigma)},
                         {"tau", matrix_json(r.tau)}};
    p["unitarity_residual"] = unitarity_residual(r);
    p["relation_residual"] = relation_residual(r, cd.n);
    if (cls.kind == RepKind::reducible_pair) {
      json parts = json::array();
      for (std::size_t i = 0; i < cls.characters.size(); ++i)
        parts.push_back(json{{"characters", character_json(cls.characters[i])},
                             {"projector", matrix_json(cls.projectors.at(i))}});
      p["m"] = cls.m;
      p["p"] = cls.p;
      p["decomposition"] = std::move(parts);
    }
  }
  emit(o.format.empty() ? "json" : o.format, "reps", ch, p, out);
  return kOk;
}

json reduction_json(const HexagonReduction& red) {
  json path = json::array();
  for (const auto& s : red.path)
    path.push_back(json{{"b", s.index}, {"sign", s.sign}});
  return json{{"k", k_json(red.k)}, {"path", std::move(path)}};
}

int cmd_cg(const Options& o, std::ostream& out, std::ostream&) {
  const auto ch = read_chirality(o);
  const auto& cd = ch.cd;
  if (!cd.is_chiral())
    throw NotChiral("Clebsch-Gordan decomposition is defined for chiral tubes only; c=" +
                    std::string(to_string(cd.tube_class)));
  const KVector k = read_k(o.k, o.line, o.param, cd, "k");
  const KVector kp = read_k(o.kprime, o.kprime_line, o.kprime_param, cd, "kprime");
  const auto res = clebsch_gordan(k, kp, cd);

  json M = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back(static_cast<int>(res.M(i, j)));
    M.push_back(std::move(row));
  }
  json coeffs = json::array();
  for (const auto& c : res.coefficients)
    coeffs.push_back(json{{"label", c.label()}, {"value", c.value}});

  json p;
  p["k"] = k_json(k);
  p["kprime"] = k_json(kp);
  p["M"] = std::move(M);
  p["coefficients"] = std::move(coeffs);
  p["residual"] = res.residual;
  p["k_plus"] = k_json(res.k_plus);
  p["k_minus"] = k_json(res.k_minus);
  p["k_plus_reduced"] = reduction_json(res.k_plus_reduced);
  p["k_minus_reduced"] = reduction_json(res.k_minus_reduced);
  emit(o.format.empty() ? "json" : o.format, "cg", ch, p, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const auto ch = read_chirality(o);
  if (o.trials < 1)
    throw InvalidArgument("--trials must be positive");
  const auto results = verify::run_all(ch.cd, verify::Options{o.seed, o.trials});
  const bool ok = verify::all_passed(results);
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format == "text") {
    for (const auto& r : results) {
      out << verify::to_string(r.status) << "  " << r.module << ": " << r.name << '\n';
      if (!r.detail.empty())
        out << "      " << r.detail << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  } else {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back(json{{"module", r.module},
                          {"name", r.name},
                          {"status", std::string(verify::to_string(r.status))},
                          {"detail", r.detail}});
    json p{{"seed", o.seed}, {"trials", o.trials}, {"passed", ok}, {"results", std::move(rows)}};
    emit(format, "verify", ch, p, out);
  }
  return ok ? kOk : kVerifyFailed;
}

} // namespace

std::string format_double(double x) {
  if (x == 0.0)
    x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integer three-axes carbon nanotube toolkit", "cntube"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "RNG seed for verify");
  app.add_option("--kappa", o.kappa, "Hopping energy scale");
  app.add_option("--c", o.c, "Chirality triple a,b,c");
  app.add_option("--hamada", o.hamada, "Chirality as Hamada indices n1,n2");

  auto* describe = app.add_subcommand("describe", "Chirality invariants");
  auto* bands = app.add_subcommand("bands", "Band structure along the allowed lines");
  bands->add_option("--samples", o.samples, "Samples per line (>= 2)");
  bands->add_option("--out", o.out_path, "Write output to this file");
  bands->add_flag("--gnuplot", o.gnuplot, "Also write <out>.gp");

  auto add_k = [](CLI::App* cmd, Options& opt) {
    cmd->add_option("--k", opt.k, "k as k0,k1,k2");
    cmd->add_option("--line", opt.line, "Allowed line index for k");
    cmd->add_option("--param", opt.param, "Position along the line for k");
  };
  auto* reps = app.add_subcommand("reps", "Two-dimensional representation at k");
  add_k(reps, o);
  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition of D(k) x D(k')");
  add_k(cg, o);
  cg->add_option("--kprime", o.kprime, "k' as k0,k1,k2");
  cg->add_option("--kprime-line", o.kprime_line, "Allowed line index for k'");
  cg->add_option("--kprime-param", o.kprime_param, "Position along the line for k'");
  auto* verify_cmd = app.add_subcommand("verify", "Randomized invariant suite");
  verify_cmd->add_option("--trials", o.trials, "Trials per check");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (!std::isfinite(o.kappa))
      throw InvalidArgument("--kappa must be finite");
    if (*describe)
      return cmd_describe(o, out, err);
    if (*bands)
      return cmd_bands(o, out, err);
    if (*reps)
      return cmd_reps(o, out, err);
    if (*cg)
      return cmd_cg(o, out, err);
    return cmd_verify(o, out, err);
  } catch (const CgPreconditionError& e) {
    err << "error: precondition on " << e.which() << " failed: " << e.what() << '\n';
    return kCgPrecondition;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

} // namespace cntube::cli
