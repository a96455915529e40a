#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gio/app.hpp"
#include "gio/constrained.hpp"
#include "gio/geometry.hpp"
#include "gio/gof.hpp"
#include "gio/inverse.hpp"

namespace gio {

using ordered_json = nlohmann::ordered_json;

/// A parsed instance file: canonical polyhedron, observed point, and any
/// structural constraint blocks.
struct Instance {
  Polyhedron poly;
  Eigen::VectorXd x_hat;
  std::optional<CostConstraintSet> c_constraints;
  std::optional<EpsConstraintSet> eps_constraints;
};

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);

ordered_json to_json(const InverseSolution& sol, const Polyhedron& poly, int sig_digits);
ordered_json to_json(const FitReport& report, int sig_digits);

/// Shipped production-planning data: instance + observed (perturbed) plan,
/// plus the unperturbed optimum and the cost vector that generated it.
struct AppData {
  app::AppInstance instance;            // stocks of the observed plan
  app::AppPlan observed;
  app::AppInstance clean_instance;      // stocks of the unperturbed plan
  app::AppPlan unperturbed;
  app::AppCost true_cost;
};

AppData load_app_data(const std::string& path);

struct AppModel {
  std::string name;
  std::string description;
  CostConstraintSet constraints;
};

std::vector<AppModel> load_app_models(const std::string& path);

}  // namespace gio
