#include "gqm/cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "gqm/classical.hpp"
#include "gqm/dynamics.hpp"
#include "gqm/io.hpp"
#include "gqm/models.hpp"
#include "gqm/representation.hpp"

namespace gqm::cli {

namespace {

using io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return value;
}

template <class T>
T need(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag ") + flag);
  return *value;
}

std::vector<double> time_grid(const RunConfig& c) {
  const double t0 = need(c.t0, "--t0");
  const double t1 = need(c.t1, "--t1");
  const long steps = need(c.steps, "--steps");
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (!(t1 > t0)) throw UsageError("--t1 must exceed --t0");
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (long k = 0; k <= steps; ++k)
    grid[static_cast<std::size_t>(k)] = k == steps ? t1 : t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(steps);
  return grid;
}

GroupoidPtr optional_groupoid(const RunConfig& c) { return c.groupoid.empty() ? nullptr : io::load_groupoid(c.groupoid); }

/// Writes to --out when given, otherwise to the result stream.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    io::write_file(c.out, text);
  }
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  const auto g = io::load_groupoid(need(c.groupoid, "--groupoid"));
  const auto report = validate(*g);
  emit(c, out, io::dump(io::to_json(report, *g)));
  return report.ok() ? ok : validation_failed;
}

int cmd_repr(const RunConfig& c, std::ostream& out) {
  const auto f = io::load_element(need(c.element, "--element"), optional_groupoid(c));
  const auto norm = cstar_norm(f);
  Json doc{{"operator", io::to_json(fundamental_rep(f))},
           {"norm", norm.value},
           {"faithful", norm.faithful},
           {"norm_method", norm.method}};
  emit(c, out, io::dump(doc));
  return ok;
}

std::string header_for_element(std::size_t n) {
  std::string h = "t";
  for (std::size_t i = 0; i < n; ++i) h += ",re_" + std::to_string(i) + ",im_" + std::to_string(i);
  return h;
}

std::string header_for_density(Eigen::Index n) {
  std::string h = "t";
  for (const char* prefix : {"rho", "drho"})
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index s = 0; s < n; ++s) {
        const std::string tag = std::string(prefix) + "_" + std::to_string(r) + "_" + std::to_string(s);
        h += ",re_" + tag + ",im_" + tag;
      }
  return h;
}

void append_complex(std::vector<double>& row, Complex z) {
  row.push_back(z.real());
  row.push_back(z.imag());
}

DensityMatrix load_density(const std::string& path, const GroupoidPtr& g) {
  const Json doc = io::parse_json(io::read_file(path), path);
  if (doc.is_object() && doc.contains("density")) {
    if (doc.size() != 1) throw InvalidSpecError(path + ": /: a density document has only the field 'density'");
    return DensityMatrix(io::operator_from_json(doc["density"], path, "/density"));
  }
  const State rho = io::state_from_json(doc, path, g);
  if (!rho.groupoid()->is_principal())
    throw PreconditionError("density evolution needs a principal groupoid");
  Operator m = Operator::Zero(static_cast<Eigen::Index>(g->event_count()), static_cast<Eigen::Index>(g->event_count()));
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const auto& tr = g->transition(TransitionId{i});
    m(static_cast<Eigen::Index>(tr.source.index), static_cast<Eigen::Index>(tr.target.index)) =
        rho.weights()[static_cast<Eigen::Index>(i)];
  }
  return DensityMatrix(std::move(m));
}

int cmd_evolve(const RunConfig& c, std::ostream& out) {
  const auto bound = optional_groupoid(c);
  const auto h_el = io::load_element(need(c.hamiltonian, "--hamiltonian"), bound);
  const Hamiltonian h(h_el);
  const auto g = h.groupoid();
  const auto grid = time_grid(c);
  if (c.element.empty() == c.state.empty()) throw UsageError("evolve needs exactly one of --element or --state");
  const std::string mode = c.mode.empty() ? "flow" : c.mode;
  if (mode != "flow" && mode != "rk4") throw UsageError("evolve --mode must be flow or rk4");

  std::ostringstream csv;
  if (!c.element.empty()) {
    const auto f0 = io::load_element(c.element, g);
    std::vector<AlgebraElement> series;
    if (mode == "rk4") {
      series = heisenberg_integrate(h, f0, grid, need(c.step, "--step"));
    } else {
      const Flow phi(h);
      for (double t : grid) series.push_back(phi(t, f0));
    }
    csv << header_for_element(f0.size()) << "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      std::vector<double> row{grid[k]};
      for (const auto& z : series[k].coeffs()) append_complex(row, z);
      csv << io::csv_row(row) << "\n";
    }
  } else {
    if (mode != "flow") throw UsageError("density evolution supports only --mode flow");
    const auto rho0 = load_density(c.state, g);
    const Operator H = fundamental_rep(h.element());
    csv << header_for_density(rho0.dim()) << "\n";
    for (double t : grid) {
      const auto rho = evolve_density(H, rho0, t);
      const Operator rate = density_rate(H, rho.entries());
      std::vector<double> row{t};
      for (const Operator* m : {&rho.entries(), &rate})
        for (Eigen::Index r = 0; r < m->rows(); ++r)
          for (Eigen::Index s = 0; s < m->cols(); ++s) append_complex(row, (*m)(r, s));
      csv << io::csv_row(row) << "\n";
    }
  }
  emit(c, out, csv.str());
  return ok;
}

int cmd_classical(const RunConfig& c, std::ostream& out) {
  const auto bound = optional_groupoid(c);
  const auto h1 = io::load_element(need(c.hamiltonian, "--hamiltonian"), bound);
  const auto mode = parse_generator_mode(c.mode.empty() ? "symmetric_rates" : c.mode);
  const auto K = markov_generator(kernel_from_hamiltonian(*h1.groupoid(), h1), mode);
  Json doc{{"mode", to_string(mode)},
           {"K", io::to_json(K.K)},
           {"conservation_defect", K.conservation_defect},
           {"warning", K.warning}};
  out << io::dump(doc);

  if (!c.state.empty()) {
    const auto grid = time_grid(c);
    const State rho = io::state_from_json(io::parse_json(io::read_file(c.state), c.state), c.state, h1.groupoid());
    const auto& g = *h1.groupoid();
    ClassicalObservable p0(static_cast<Eigen::Index>(g.event_count()));
    for (std::size_t a = 0; a < g.event_count(); ++a) {
      const Complex w = rho.weights()[static_cast<Eigen::Index>(g.unit_of(EventId{a}).index)];
      if (w.imag() != 0.0) throw PreconditionError("classical state weights on units must be real");
      p0[static_cast<Eigen::Index>(a)] = w.real();
    }
    const auto series = classical_evolve(K, p0, grid);
    std::ostringstream csv;
    csv << "tau";
    for (std::size_t a = 0; a < g.event_count(); ++a) csv << ",p_" << a;
    csv << "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      std::vector<double> row{grid[k]};
      for (double p : series[k]) row.push_back(p);
      csv << io::csv_row(row) << "\n";
    }
    io::write_file(need(c.out, "--out"), csv.str());
  }
  return ok;
}

int cmd_gns(const RunConfig& c, std::ostream& out) {
  const auto bound = optional_groupoid(c);
  const auto path = need(c.state, "--state");
  const State rho = io::state_from_json(io::parse_json(io::read_file(path), path), path, bound);
  const auto check = is_state(rho);
  Json doc{{"state", {{"ok", check.ok},
                      {"normalization_defect", check.normalization_defect},
                      {"hermiticity_defect", check.hermiticity_defect},
                      {"min_gram_eigenvalue", check.min_eigenvalue}}}};
  if (!check.ok) {
    emit(c, out, io::dump(doc));
    return validation_failed;
  }
  const auto gns = gns_construct(rho, c.tol.value_or(1e-10));
  double residual = 0.0;
  const auto& g = rho.groupoid();
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const auto d = delta(g, TransitionId{i});
    const Complex lhs = gns.cyclic_vector.dot(gns.represent(d) * gns.cyclic_vector);
    residual = std::max(residual, std::abs(lhs - rho(d)));
  }
  doc["dim"] = gns.dim;
  doc["ideal_rank"] = static_cast<std::size_t>(gns.ideal_basis.cols());
  doc["reproducing_residual"] = residual;
  emit(c, out, io::dump(doc));
  return ok;
}

int cmd_model(const RunConfig& c, std::ostream& out) {
  const std::string dir = need(c.out, "--out");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
  const auto path = [&](const char* name) { return (std::filesystem::path(dir) / name).string(); };

  std::vector<std::pair<const char*, AlgebraElement>> files;
  GroupoidPtr g;
  if (c.model == "qubit") {
    g = qubit();
    files.emplace_back("f1.json", pauli_compose(g, {0, 1, 0, 0}));
    files.emplace_back("f2.json", pauli_compose(g, {0, 0, 1, 0}));
    files.emplace_back("f3.json", pauli_compose(g, {0, 0, 0, 1}));
  } else if (c.model == "oscillator") {
    const long n = need(c.levels, "--levels");
    if (n < 2) throw UsageError("--levels must be at least 2");
    g = oscillator(static_cast<std::size_t>(n));
    auto l = ladder(g);
    auto qp = position_momentum(g);
    files.emplace_back("a.json", l.a);
    files.emplace_back("a_star.json", l.a_star);
    files.emplace_back("q.json", qp.q);
    files.emplace_back("p.json", qp.p);
    files.emplace_back("h0.json", oscillator_hamiltonian(g, 1.0, 0.0, 0.5).element());
  } else {
    throw UsageError("model must be qubit or oscillator");
  }
  io::write_file(path("groupoid.json"), io::dump(io::to_json(g->spec())));
  out << path("groupoid.json") << "\n";
  for (const auto& [name, f] : files) {
    io::write_file(path(name), io::dump(io::element_to_json(f)));
    out << path(name) << "\n";
  }
  return ok;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "validate") return cmd_validate(config, out);
    if (config.subcommand == "repr") return cmd_repr(config, out);
    if (config.subcommand == "evolve") return cmd_evolve(config, out);
    if (config.subcommand == "classical") return cmd_classical(config, out);
    if (config.subcommand == "gns") return cmd_gns(config, out);
    if (config.subcommand == "model") return cmd_model(config, out);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const PreconditionError& e) {
    err << "gqm: validation failed: " << e.what() << "\n";
    return validation_failed;
  } catch (const ComponentError& e) {
    err << "gqm: validation failed: " << e.what() << "\n";
    return validation_failed;
  } catch (const UnsupportedFrameError& e) {
    err << "gqm: validation failed: " << e.what() << "\n";
    return validation_failed;
  } catch (const Error& e) {
    err << "gqm: error: " << e.what() << "\n";
    return input_error;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoid quantum mechanics toolkit", "gqm"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--groupoid", c.groupoid, "groupoid spec JSON");
    sub->add_option("--out", c.out, "output path");
  };
  auto grid = [&c](CLI::App* sub) {
    sub->add_option("--t0", c.t0, "first grid time");
    sub->add_option("--t1", c.t1, "last grid time");
    sub->add_option("--steps", c.steps, "number of grid intervals");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the groupoid axioms");
  common(validate_cmd);

  auto* repr_cmd = app.add_subcommand("repr", "print the fundamental representation of an element");
  common(repr_cmd);
  repr_cmd->add_option("--element", c.element, "element JSON");

  auto* evolve_cmd = app.add_subcommand("evolve", "Heisenberg or density-matrix time series as CSV");
  common(evolve_cmd);
  grid(evolve_cmd);
  evolve_cmd->add_option("--hamiltonian", c.hamiltonian, "Hamiltonian element JSON");
  evolve_cmd->add_option("--element", c.element, "initial observable JSON");
  evolve_cmd->add_option("--state", c.state, "initial state or density JSON");
  evolve_cmd->add_option("--mode", c.mode, "flow (default) or rk4");
  evolve_cmd->add_option("--step", c.step, "RK4 substep");

  auto* classical_cmd = app.add_subcommand("classical", "Markov generator of the classical limit");
  common(classical_cmd);
  grid(classical_cmd);
  classical_cmd->add_option("--hamiltonian", c.hamiltonian, "first-order Hamiltonian h1 JSON");
  classical_cmd->add_option("--state", c.state, "initial state; its unit weights give p(0)");
  classical_cmd->add_option("--mode", c.mode, "symmetric_rates (default) or paper_literal");

  auto* gns_cmd = app.add_subcommand("gns", "GNS construction report for a state");
  common(gns_cmd);
  gns_cmd->add_option("--state", c.state, "state JSON");
  gns_cmd->add_option("--tol", c.tol, "relative null threshold for the Gram matrix");

  auto* model_cmd = app.add_subcommand("model", "write a model groupoid and its named elements");
  model_cmd->add_option("kind", c.model, "qubit or oscillator")->required();
  model_cmd->add_option("--out", c.out, "output directory");
  model_cmd->add_option("--levels", c.levels, "oscillator truncation N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gqm: usage error: " << e.what() << "\n";
    return input_error;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return run(c, out, err);
}

}  // namespace gqm::cli
