#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gio/app.hpp"
#include "gio/format.hpp"
#include "gio/gof.hpp"
#include "gio/inverse.hpp"
#include "gio/json_io.hpp"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw gio::InvalidInput("cannot open output file: " + out_path);
  out << payload;
}

std::string run_fit(const gio::Instance& inst, gio::NormSpec norm, int precision) {
  gio::InverseSolution sol;
  if (inst.c_constraints && inst.eps_constraints)
    throw gio::InvalidInput("instance sets both c_constraints and eps_constraints");
  if (inst.c_constraints)
    sol = gio::solve_gio_constrained_cost(inst.poly, inst.x_hat, norm, *inst.c_constraints);
  else if (inst.eps_constraints)
    sol = gio::solve_gio_constrained_eps(inst.poly, inst.x_hat, norm, *inst.eps_constraints);
  else
    sol = gio::solve_gio(inst.poly, inst.x_hat, norm);
  return gio::to_json(sol, inst.poly, precision).dump(2) + "\n";
}

std::string run_rho(const gio::Instance& inst, gio::NormSpec norm, bool adjust, int precision) {
  gio::StructuralConstraints sc;
  sc.cost = inst.c_constraints;
  sc.eps = inst.eps_constraints;
  const gio::FitReport report =
      gio::rho(inst.poly, inst.x_hat, norm, sc.empty() ? nullptr : &sc, adjust);
  return gio::to_json(report, precision).dump(2) + "\n";
}

std::string run_grid(const gio::Instance& inst, gio::NormSpec norm, int resolution,
                     int precision) {
  const auto grid = gio::rho_grid(inst.poly, norm, resolution);
  std::ostringstream os;
  gio::write_grid_csv(os, grid, precision);
  return os.str();
}

std::string run_classify(const gio::Instance& inst, int precision) {
  const gio::PointClass c = gio::classify(inst.poly, inst.x_hat);
  gio::ordered_json j;
  j["classification"] = gio::to_string(c);
  j["classical_io_feasible"] = gio::classical_io_feasible(inst.poly, inst.x_hat);
  const Eigen::VectorXd s = gio::slack(inst.poly, inst.x_hat);
  auto arr = gio::ordered_json::array();
  for (Eigen::Index i = 0; i < s.size(); ++i) arr.push_back(gio::round_sig(s(i), precision));
  j["slacks"] = arr;
  return j.dump(2) + "\n";
}

std::string run_app_demo(const std::string& table4_path, const std::string& models_path,
                         bool reseed, std::uint64_t seed, int precision) {
  const gio::AppData data = gio::load_app_data(table4_path);
  const auto models = gio::load_app_models(models_path);

  gio::app::AppInstance inst = data.instance;
  gio::app::AppPlan observed = data.observed;
  if (reseed) {
    inst = data.clean_instance;
    const gio::app::AppPlan optimum = gio::app::solve_app_forward(inst, data.true_cost);
    observed = gio::app::perturb_plan(optimum, inst, seed);
  }

  std::ostringstream os;
  os << "model    rho_a    c* (scaled to c2 = 21)                                constraints\n";
  for (const auto& model : models) {
    const gio::FitReport fit = gio::app::rho_a_app(inst, observed, model.constraints);
    const gio::app::AppInverseResult inv =
        gio::app::solve_inverse_app(inst, observed, model.constraints);
    const gio::app::AppCost scaled = gio::app::rescale_costs(inv.cost, 1, 21.0);
    std::string cvec = "[";
    for (int j = 0; j < 5; ++j) {
      cvec += gio::format_sig(scaled.c(j), precision);
      cvec += (j + 1 < 5) ? ", " : "]";
    }
    std::string row = model.name;
    row.resize(9, ' ');
    std::string rho_txt = gio::format_sig(fit.rho, 3);
    rho_txt.resize(8, ' ');
    cvec.resize(std::max<std::size_t>(cvec.size() + 1, 54), ' ');
    os << row << rho_txt << " " << cvec
       << (model.description.empty() ? std::string("None") : model.description) << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"generalized inverse optimization: fit cost vectors to observed LP "
               "solutions and score the fit"};
  cli.require_subcommand(1);

  std::string instance_path, out_path, norm_token = "p2";
  std::string table4_path = "data/app_table4.json", models_path = "data/app_models.json";
  int resolution = 50, precision = 6;
  std::uint64_t seed = 0;
  bool adjust = false;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance)
      sub->add_option("--instance", instance_path, "instance JSON file")->required();
    sub->add_option("--precision", precision, "significant digits in output (default 6)");
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* fit = cli.add_subcommand("fit", "impute (y*, c*, eps*) for the observed point");
  add_common(fit, true);
  fit->add_option("--norm", norm_token, "loss norm: p1|p2|pinf|abs|rel")->required();

  CLI::App* rho_cmd = cli.add_subcommand("rho", "goodness-of-fit report for the observed point");
  add_common(rho_cmd, true);
  rho_cmd->add_option("--norm", norm_token, "loss norm: p1|p2|pinf|abs|rel")->required();
  rho_cmd->add_flag("--adjust-denominator", adjust,
                    "screen denominator rows against the structural constraints");

  CLI::App* grid = cli.add_subcommand("grid", "rho/rho~ samples over a 2-D polyhedron (CSV)");
  add_common(grid, true);
  grid->add_option("--norm", norm_token, "loss norm: p1|p2|pinf|abs|rel")->required();
  grid->add_option("--resolution", resolution, "grid points per axis (default 50)");

  CLI::App* classify_cmd = cli.add_subcommand("classify", "interior/boundary/infeasible check");
  add_common(classify_cmd, true);

  CLI::App* app_demo = cli.add_subcommand("app-demo", "production-planning case study report");
  add_common(app_demo, false);
  app_demo->add_option("--table4", table4_path, "observed-plan data file");
  app_demo->add_option("--models", models_path, "model constraint sets file");
  CLI::Option* seed_opt =
      app_demo->add_option("--seed", seed, "regenerate the observed plan with this seed");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitInputError;
  }

  try {
    std::string payload;
    if (*fit) {
      payload = run_fit(gio::load_instance_file(instance_path), gio::NormSpec::parse(norm_token),
                        precision);
    } else if (*rho_cmd) {
      payload = run_rho(gio::load_instance_file(instance_path), gio::NormSpec::parse(norm_token),
                        adjust, precision);
    } else if (*grid) {
      payload = run_grid(gio::load_instance_file(instance_path),
                         gio::NormSpec::parse(norm_token), resolution, precision);
    } else if (*classify_cmd) {
      payload = run_classify(gio::load_instance_file(instance_path), precision);
    } else if (*app_demo) {
      payload = run_app_demo(table4_path, models_path, seed_opt->count() > 0, seed, precision);
    }
    emit(out_path, payload);
    return 0;
  } catch (const gio::InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gio::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gio::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}
