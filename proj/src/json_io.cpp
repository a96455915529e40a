#include "gio/json_io.hpp"

#include <fstream>

#include "gio/format.hpp"

namespace gio {

namespace {

using nlohmann::json;

Eigen::VectorXd to_vector(const json& arr, const char* what) {
  if (!arr.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw InvalidInput(std::string(what) + " must hold numbers");
    v(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd to_matrix(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) throw InvalidInput(std::string(what) + " must be a nonempty array of rows");
  const std::size_t cols = arr[0].size();
  Eigen::MatrixXd m(arr.size(), cols);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Eigen::VectorXd row = to_vector(arr[i], what);
    if (static_cast<std::size_t>(row.size()) != cols)
      throw InvalidInput(std::string(what) + " rows have mixed lengths");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

ConstraintSense parse_sense(const std::string& s) {
  if (s == ">=") return ConstraintSense::GE;
  if (s == "<=") return ConstraintSense::LE;
  if (s == "=" || s == "==") return ConstraintSense::EQ;
  throw InvalidInput("unknown sense '" + s + "' (expected >=, <= or =)");
}

CostConstraintSet parse_cost_constraints(const json& j, int n) {
  CostConstraintSet cc;
  cc.eq_rows.resize(0, n);
  cc.ineq_rows.resize(0, n);
  if (j.contains("eq")) {
    cc.eq_rows = to_matrix(j["eq"]["rows"], "c_constraints.eq.rows");
    cc.eq_rhs = to_vector(j["eq"]["rhs"], "c_constraints.eq.rhs");
  }
  if (j.contains("ineq")) {
    cc.ineq_rows = to_matrix(j["ineq"]["rows"], "c_constraints.ineq.rows");
    cc.ineq_rhs = to_vector(j["ineq"]["rhs"], "c_constraints.ineq.rhs");
  }
  if (j.contains("zero_pattern"))
    for (const auto& v : j["zero_pattern"]) cc.zero_pattern.push_back(v.get<int>());
  if (j.contains("lower_bounds"))
    for (const auto& pair : j["lower_bounds"])
      cc.lower_bounds.emplace_back(pair.at(0).get<int>(), pair.at(1).get<double>());
  if (j.contains("cone_rows")) cc.cone_rows = to_matrix(j["cone_rows"], "c_constraints.cone_rows");
  return cc;
}

EpsConstraintSet parse_eps_constraints(const json& j, int n) {
  EpsConstraintSet ec;
  ec.eq_rows.resize(0, n);
  ec.ineq_rows.resize(0, n);
  if (j.contains("eq")) {
    ec.eq_rows = to_matrix(j["eq"]["rows"], "eps_constraints.eq.rows");
    ec.eq_rhs = to_vector(j["eq"]["rhs"], "eps_constraints.eq.rhs");
  }
  if (j.contains("ineq")) {
    ec.ineq_rows = to_matrix(j["ineq"]["rows"], "eps_constraints.ineq.rows");
    ec.ineq_rhs = to_vector(j["ineq"]["rhs"], "eps_constraints.ineq.rhs");
  }
  return ec;
}

json round_array(const Eigen::VectorXd& v, int sig) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(round_sig(v(i), sig));
  return arr;
}

}  // namespace

Instance load_instance(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.contains("rows") || !j.contains("senses") || !j.contains("rhs") || !j.contains("x_hat"))
    throw InvalidInput("instance needs rows, senses, rhs and x_hat");

  const Eigen::MatrixXd rows = to_matrix(j["rows"], "rows");
  const Eigen::VectorXd rhs = to_vector(j["rhs"], "rhs");
  if (!j["senses"].is_array() || j["senses"].size() != static_cast<std::size_t>(rows.rows()))
    throw InvalidInput("senses must list one entry per row");
  if (rhs.size() != rows.rows()) throw InvalidInput("rhs must list one entry per row");

  std::vector<RawConstraint> constraints;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    constraints.push_back({rows.row(i).transpose(),
                           parse_sense(j["senses"][static_cast<std::size_t>(i)].get<std::string>()),
                           rhs(i), false});
  }
  Instance inst{canonicalize(constraints), to_vector(j["x_hat"], "x_hat"), {}, {}};
  if (inst.x_hat.size() != inst.poly.dim())
    throw InvalidInput("x_hat dimension does not match the rows");
  if (j.contains("c_constraints"))
    inst.c_constraints = parse_cost_constraints(j["c_constraints"], inst.poly.dim());
  if (j.contains("eps_constraints"))
    inst.eps_constraints = parse_eps_constraints(j["eps_constraints"], inst.poly.dim());
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file: " + path);
  return load_instance(in);
}

ordered_json to_json(const InverseSolution& sol, const Polyhedron& poly, int sig_digits) {
  ordered_json j;
  j["variant"] = sol.norm.name();
  j["i_star"] = sol.i_star;
  j["original_row"] = sol.i_star >= 0 ? poly.row_meta()[sol.i_star].original_id : -1;
  j["tie_rows"] = sol.tie_rows;
  j["loss"] = round_sig(sol.loss, sig_digits);
  if (sol.gap_value) j["gap_value"] = round_sig(*sol.gap_value, sig_digits);
  j["c_star"] = round_array(sol.c_star, sig_digits);
  j["y_star"] = round_array(sol.y_star, sig_digits);
  j["eps_star"] = round_array(sol.eps_star, sig_digits);
  j["x_star"] = round_array(sol.x_star, sig_digits);
  return j;
}

ordered_json to_json(const FitReport& report, int sig_digits) {
  ordered_json j;
  j["variant"] = report.variant.name();
  j["rho"] = round_sig(report.rho, sig_digits);
  j["rho_tilde"] = round_sig(report.rho_tilde, sig_digits);
  j["loss_star"] = round_sig(report.loss_star, sig_digits);
  j["denominator"] = round_sig(report.denominator, sig_digits);
  j["denominator_tilde"] = round_sig(report.denominator_tilde, sig_digits);
  j["negative_rho_warning"] = report.negative_rho_warning;
  ordered_json rows = ordered_json::array();
  for (const PerRowFit& r : report.per_row) {
    ordered_json row;
    row["row"] = r.row;
    if (r.eps_norm) row["eps_norm"] = round_sig(*r.eps_norm, sig_digits);
    else row["eps_norm"] = nullptr;
    row["eps_tilde_norm"] = round_sig(r.eps_tilde_norm, sig_digits);
    row["included_in_denominator"] = r.included_in_denominator;
    rows.push_back(row);
  }
  j["per_row"] = rows;
  return j;
}

AppData load_app_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open APP data file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("APP data is not valid JSON: ") + e.what());
  }

  AppData data;
  const Eigen::VectorXd d = to_vector(j.at("demand"), "demand");
  if (d.size() != 4) throw InvalidInput("demand must have 4 quarters");
  data.instance.demand = d;
  data.instance.a1 = j.at("a1").get<double>();
  data.instance.a2 = j.at("a2").get<double>();
  data.clean_instance = data.instance;

  auto parse_plan = [](const json& block, app::AppInstance& inst) {
    inst.init_inventory = block.at("init_inventory").get<double>();
    inst.init_backorder = block.at("init_backorder").get<double>();
    const json& plan = block.at("plan");
    app::AppPlan p;
    const char* cols[5] = {"regular", "overtime", "idle", "inventory", "backorder"};
    for (int c = 0; c < 5; ++c) {
      const Eigen::VectorXd col = to_vector(plan.at(cols[c]), cols[c]);
      if (col.size() != 4) throw InvalidInput("plan columns must have 4 quarters");
      for (int h = 0; h < 4; ++h) p.x(h, c) = col(h);
    }
    return p;
  };
  data.observed = parse_plan(j.at("observed"), data.instance);
  data.unperturbed = parse_plan(j.at("unperturbed"), data.clean_instance);
  const Eigen::VectorXd tc = to_vector(j.at("true_cost"), "true_cost");
  if (tc.size() != 5) throw InvalidInput("true_cost must have 5 entries");
  data.true_cost.c = tc;
  return data;
}

std::vector<AppModel> load_app_models(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open APP models file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("APP models file is not valid JSON: ") + e.what());
  }
  std::vector<AppModel> models;
  for (const auto& mj : j.at("models")) {
    AppModel m;
    m.name = mj.at("name").get<std::string>();
    m.description = mj.value("description", std::string{});
    m.constraints = parse_cost_constraints(mj.at("constraints"), 5);
    models.push_back(std::move(m));
  }
  return models;
}

}  // namespace gio
