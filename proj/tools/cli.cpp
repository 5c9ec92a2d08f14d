#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "odla/odla.hpp"

namespace odla::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  double float_tol = 1e-9;
  bool force_omega = false;
  std::string file = "-";
  std::string label;
  std::string param;
  std::uint64_t seed = 0;
};

/// Thrown for anything that should exit with the usage code.
struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& file, std::istream& in) {
  std::ostringstream buf;
  if (file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open '" + file + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

json scalars(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json scalars(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json floats(const FloatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

std::string tuple_text(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    s += (i ? ", " : "") + tuple_text(row);
  }
  return s + "]";
}

json omega_entries(const Matrix& w) {
  json out = json::array();
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = i + 1; j < w.dim(); ++j)
      if (!is_zero(w(i, j))) out.push_back({i + 1, j + 1, to_string(w(i, j))});
  return out;
}

json residual_json(const ResidualTensor& r) {
  json out = json::array();
  for (const auto& c : r.nonzero_components()) {
    out.push_back({{"m", c.m}, {"l", c.l}, {"j", c.j}, {"k", c.k}, {"value", to_string(c.value)}});
  }
  return out;
}

json base_report(const std::string& command) { return {{"schema_version", kReportSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const json& report) { out << report.dump(2) << "\n"; }

AlgebraSpec load(const Options& opt, std::istream& in) {
  AlgebraSpec spec = parse(read_input(opt.file, in));
  if (opt.force_omega && spec.dim() >= 3) spec.omega() = deformability(spec).candidate;
  return spec;
}

std::optional<Scalar> parse_param(const Options& opt, BianchiType type) {
  if (opt.param.empty()) {
    if (takes_parameter(type)) throw LabelError("type " + std::string(type_name(type)) + " needs --param");
    return std::nullopt;
  }
  try {
    return parse_scalar(opt.param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--param: ") + e.what());
  }
}

BianchiType parse_label(const std::string& name) {
  auto type = parse_type(name);
  if (!type) throw UsageError("unknown Bianchi type '" + name + "'");
  return *type;
}

void require_dim3(const AlgebraSpec& spec, const std::string& command) {
  if (spec.dim() != 3) throw UsageError(command + " needs a 3-dimensional algebra");
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
  const AlgebraSpec spec = load(opt, in);
  const ResidualTensor r = residual(spec);
  const bool valid = r.is_zero();
  std::optional<Vector> t;
  if (spec.dim() == 3) t = t_vector(decompose(spec));

  if (opt.json) {
    json report = base_report("validate");
    report["dim"] = spec.dim();
    report["valid"] = valid;
    if (t) report["t"] = scalars(*t);
    report["residual"] = residual_json(r);
    emit(out, report);
  } else {
    out << "dim: " << spec.dim() << "\n";
    out << "valid: " << (valid ? "yes" : "no") << "\n";
    if (t) out << "t: " << tuple_text(*t) << "\n";
    for (const auto& c : r.nonzero_components()) {
      out << "residual[" << c.m << "][" << c.l << "][" << c.j << "][" << c.k << "] = " << to_string(c.value) << "\n";
    }
  }
  return valid ? kExitOk : kExitNotAlgebra;
}

int cmd_decompose(const Options& opt, std::istream& in, std::ostream& out) {
  const AlgebraSpec spec = load(opt, in);
  require_dim3(spec, "decompose");
  const NabTriple t = decompose(spec);
  const Vector tv = t_vector(t);
  const Vector fb = forced_b(t.n, t.a);
  const bool valid = fb == t.b;

  if (opt.json) {
    json report = base_report("decompose");
    report["valid"] = valid;
    report["n"] = scalars(t.n);
    report["a"] = scalars(t.a);
    report["b"] = scalars(t.b);
    report["t"] = scalars(tv);
    report["forced_b"] = scalars(fb);
    emit(out, report);
  } else {
    out << "n: " << matrix_text(t.n) << "\n";
    out << "a: " << tuple_text(t.a) << "\n";
    out << "b: " << tuple_text(t.b) << "\n";
    out << "t: " << tuple_text(tv) << "\n";
    out << "forced b = -2 n a: " << tuple_text(fb) << "\n";
    out << "valid: " << (valid ? "yes" : "no") << "\n";
  }
  return valid ? kExitOk : kExitNotAlgebra;
}

json table_row_json(BianchiType type, std::optional<double> parameter) {
  // Row at a = 1, scaled in floats by the reported parameter.
  const NabTriple unit = table_triple(type, takes_parameter(type) ? std::optional<Scalar>(1) : std::nullopt);
  const double scale = parameter.value_or(1.0);
  json n = json::array(), a = json::array(), b = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    n.push_back(unit.n(i, i).get_num().get_si());
    a.push_back(unit.a[i].get_d() * scale);
    b.push_back(unit.b[i].get_d() * scale);
  }
  return {{"label", type_name(type)}, {"n", n}, {"a", a}, {"b", b}};
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
  const AlgebraSpec spec = load(opt, in);
  require_dim3(spec, "classify");
  const NabTriple t = decompose(spec);
  const Vector tv = t_vector(t);

  json report = base_report("classify");
  report["decomposition"] = {{"n", scalars(t.n)}, {"a", scalars(t.a)}, {"b", scalars(t.b)}};
  report["t"] = scalars(tv);

  NormalForm nf;
  try {
    nf = classify(spec, opt.float_tol);
  } catch (const NotAnAlgebraError& e) {
    report["valid"] = false;
    report["error"] = e.what();
    if (opt.json) {
      emit(out, report);
    } else {
      out << "valid: no\n" << "t: " << tuple_text(tv) << "\n";
    }
    return kExitNotAlgebra;
  }

  const auto& cert = nf.certificates;
  const Vector fb = forced_b(t.n, t.a);
  report["valid"] = true;
  report["label"] = type_name(nf.label.type);
  report["parameter"] = nf.label.parameter ? json(*nf.label.parameter) : json(nullptr);
  report["certificates"] = {
      {"inertia", {cert.inertia.positive, cert.inertia.negative, cert.inertia.zero}},
      {"a_zero", cert.a_zero},
      {"causal", causal_name(cert.causal)},
      {"parameter_squared", cert.parameter_squared ? json(to_string(*cert.parameter_squared)) : json(nullptr)},
      {"b_equals_minus_2na", fb == t.b},
  };
  report["table_row"] = table_row_json(nf.label.type, nf.label.parameter);
  report["transform"] = floats(nf.transform);
  report["transform_error"] = nf.transform_error;
  report["warnings"] = nf.warnings;

  if (opt.json) {
    emit(out, report);
  } else {
    out << "label: " << type_name(nf.label.type);
    if (nf.label.parameter) out << " (a = " << std::setprecision(12) << *nf.label.parameter << ")";
    out << "\n";
    out << "inertia of n: (" << cert.inertia.positive << ", " << cert.inertia.negative << ", " << cert.inertia.zero
        << ")\n";
    out << "causal character of a: " << causal_name(cert.causal) << "\n";
    if (cert.parameter_squared) out << "parameter^2 (exact): " << to_string(*cert.parameter_squared) << "\n";
    out << "n: " << matrix_text(t.n) << "\na: " << tuple_text(t.a) << "\nb: " << tuple_text(t.b) << "\n";
    out << "b = -2 n a: " << (fb == t.b ? "yes" : "no") << "\n";
    out << "table row: " << report["table_row"].dump() << "\n";
    out << "transform: " << report["transform"].dump() << "\n";
    out << "transform error: " << nf.transform_error << "\n";
    for (const auto& w : nf.warnings) out << "warning: " << w << "\n";
  }
  return kExitOk;
}

DocumentMetadata metadata_for(BianchiType type, const std::optional<Scalar>& param) {
  DocumentMetadata meta;
  meta.label = std::string(type_name(type));
  if (param) meta.parameter = to_string(*param);
  return meta;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  const BianchiType type = parse_label(opt.label);
  const auto param = parse_param(opt, type);
  out << serialize(generate(type, param), metadata_for(type, param));
  return kExitOk;
}

int cmd_orbit_sample(const Options& opt, std::ostream& out) {
  const BianchiType type = parse_label(opt.label);
  const auto param = parse_param(opt, type);
  out << serialize(orbit_sample(type, param, opt.seed), metadata_for(type, param));
  return kExitOk;
}

int cmd_tables(const Options& opt, std::ostream& out) {
  struct Table {
    const char* name;
    std::span<const BianchiType> types;
  };
  const std::array<Table, 2> tables = {{{"a=0", kUnimodularTypes}, {"a!=0", kNonUnimodularTypes}}};

  json report = base_report("tables");
  report["tables"] = json::array();
  std::ostringstream grid, docs;
  grid << std::left << std::setw(10) << "type" << std::setw(14) << "n" << std::setw(14) << "a" << "b\n";
  for (const auto& table : tables) {
    json rows = json::array();
    grid << "-- " << table.name << "\n";
    for (BianchiType type : table.types) {
      const std::optional<Scalar> param = takes_parameter(type) ? std::optional<Scalar>(1) : std::nullopt;
      const NabTriple t = table_triple(type, param);
      const std::string doc = serialize(generate(type, param), metadata_for(type, param));
      Vector n_diag = {t.n(0, 0), t.n(1, 1), t.n(2, 2)};
      rows.push_back({{"label", type_name(type)},
                      {"parameterized", takes_parameter(type)},
                      {"n", scalars(n_diag)},
                      {"a", scalars(t.a)},
                      {"b", scalars(t.b)},
                      {"document", json::parse(doc)}});
      grid << std::setw(10) << type_name(type) << std::setw(14) << tuple_text(n_diag) << std::setw(14)
           << tuple_text(t.a) << tuple_text(t.b) << (takes_parameter(type) ? "   [a = 1]" : "") << "\n";
      docs << "# " << type_name(type) << "\n" << doc;
    }
    report["tables"].push_back({{"name", table.name}, {"rows", rows}});
  }
  if (opt.json) {
    emit(out, report);
  } else {
    out << grid.str() << "\n" << docs.str();
  }
  return kExitOk;
}

int cmd_deformability(const Options& opt, std::istream& in, std::ostream& out) {
  const AlgebraSpec spec = parse(read_input(opt.file, in));
  if (spec.dim() < 3) throw UsageError("deformability needs dimension >= 3");
  const Deformability d = deformability(spec);
  if (opt.json) {
    json report = base_report("deformability");
    report["dim"] = spec.dim();
    report["admits"] = d.admits();
    report["candidate_omega_entries"] = omega_entries(d.candidate);
    json failures = json::array();
    for (const auto& c : d.failures) {
      failures.push_back({{"m", c.m}, {"l", c.l}, {"j", c.j}, {"k", c.k}, {"value", to_string(c.value)}});
    }
    report["failures"] = failures;
    emit(out, report);
  } else {
    out << "admits omega: " << (d.admits() ? "yes" : "no") << "\n";
    out << "candidate omega: " << matrix_text(d.candidate) << "\n";
    if (!d.admits()) out << "nonzero residual components: " << d.failures.size() << "\n";
  }
  return d.admits() ? kExitOk : kExitNotAlgebra;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact tools for omega-deformed Lie algebras", "odla"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_option("--float-tol", opt.float_tol, "Tolerance for float comparisons")->check(CLI::PositiveNumber);
  app.add_flag("--force-omega", opt.force_omega, "Replace the supplied 2-form by the forced one");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "Algebra document (default: standard input)");
    sub->fallthrough();
    return sub;
  };
  auto* validate_cmd = with_file(app.add_subcommand("validate", "Check the deformed Jacobi identity"));
  auto* decompose_cmd = with_file(app.add_subcommand("decompose", "Print the (n, a, b) triple of a 3D algebra"));
  auto* classify_cmd = with_file(app.add_subcommand("classify", "Bring a 3D algebra to its normal form"));
  auto* deform_cmd = with_file(app.add_subcommand("deformability", "Check whether a bracket admits a 2-form"));

  auto* generate_cmd = app.add_subcommand("generate", "Print the canonical document of a type");
  generate_cmd->add_option("LABEL", opt.label, "Bianchi type")->required();
  generate_cmd->add_option("--param", opt.param, "Type parameter a > 0 (p, p/q or decimal)");
  generate_cmd->fallthrough();

  auto* tables_cmd = app.add_subcommand("tables", "Print both classification tables");
  tables_cmd->fallthrough();

  auto* orbit_cmd = app.add_subcommand("orbit-sample", "Print a random basis change of a canonical algebra");
  orbit_cmd->add_option("LABEL", opt.label, "Bianchi type")->required();
  orbit_cmd->add_option("--param", opt.param, "Type parameter a > 0");
  orbit_cmd->add_option("--seed", opt.seed, "Random seed")->required();
  orbit_cmd->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("odla");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "odla: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, in, out);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, in, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, in, out);
    if (deform_cmd->parsed()) return cmd_deformability(opt, in, out);
    if (generate_cmd->parsed()) return cmd_generate(opt, out);
    if (tables_cmd->parsed()) return cmd_tables(opt, out);
    if (orbit_cmd->parsed()) return cmd_orbit_sample(opt, out);
  } catch (const ParseError& e) {
    err << "odla: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "odla: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LabelError& e) {
    err << "odla: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "odla: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace odla::cli
