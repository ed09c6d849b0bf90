#include "extremal/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace extremal {

namespace {

void write(const Json &v, std::string &out, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  const std::string inner(std::size_t(indent + 1) * 2, ' ');
  switch (v.type()) {
  case Json::value_t::object: {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto &[key, item] : v.items()) {
      if (!first)
        out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      write(item, out, indent + 1);
    }
    out += "\n" + pad + "}";
    return;
  }
  case Json::value_t::array: {
    out += "[";
    bool first = true;
    for (const auto &item : v) {
      if (!first)
        out += ", ";
      first = false;
      write(item, out, indent + 1);
    }
    out += "]";
    return;
  }
  case Json::value_t::number_float: {
    const double x = v.get<double>();
    out += std::isfinite(x) ? format_real(x) : "null";
    return;
  }
  default:
    out += v.dump();
  }
}

Json real(double x) {
  if (!std::isfinite(x))
    return nullptr;
  return x;
}

Json vector_json(const VectorXd &v) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    arr.push_back(real(v[k]));
  return arr;
}

VectorXd vector_from(const Json &arr) {
  VectorXd v(Eigen::Index(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k)
    v[Eigen::Index(k)] = arr[k].is_null() ? std::numeric_limits<double>::quiet_NaN()
                                          : arr[k].get<double>();
  return v;
}

double real_from(const Json &v) {
  return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

} // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const Json &value) {
  std::string out;
  write(value, out, 0);
  out += "\n";
  return out;
}

Json log_disc_json(const LogDiscriminant &disc) {
  Json j;
  j["sign"] = disc.sign;
  j["log_abs"] = disc.is_zero() ? Json(nullptr) : real(disc.log_abs);
  if (disc.is_zero())
    j["value"] = 0.0;
  else if (disc.log_abs < std::log(1e300))
    j["value"] = disc.value();
  else
    j["value"] = nullptr;
  return j;
}

Json to_json(const ExtremalSolution &s) {
  Json j;
  j["problem"] = to_string(s.problem);
  j["regime"] = to_string(s.regime);
  j["a"] = s.a;
  j["d"] = s.d;
  j["roots"] = vector_json(s.polys.front().roots());
  j["coeffs"] = vector_json(s.polys.front().coeffs());
  const bool pair = s.polys.size() > 1;
  j["mirror_roots"] = pair ? vector_json(s.polys[1].roots()) : Json::array();
  j["mirror_coeffs"] = pair ? vector_json(s.polys[1].coeffs()) : Json::array();
  j["achieved_m"] = real(s.achieved_m);
  j["log_m"] = real(s.log_m);
  j["log_disc"] = log_disc_json(s.achieved_disc);
  j["lambda_or_B"] = real(s.lambda_or_B);
  return j;
}

Json to_json(const DiskResult &disk) {
  Json j;
  j["center_x"] = disk.center_x;
  j["radius"] = disk.radius;
  j["boundary_point"] = {{"re", disk.boundary_point.real()}, {"im", disk.boundary_point.imag()}};
  j["empty_interior"] = disk.empty_interior;
  return j;
}

Json to_json(const ChargeConfig &c) {
  Json j;
  j["a"] = c.a;
  j["d"] = int(c.points.size());
  j["points"] = vector_json(c.points);
  j["potential_v"] = real(c.potential_v);
  if (c.finite_energy())
    j["energy_I"] = real(c.energy_I);
  else
    j["energy_I"] = "inf";
  j["log_disc"] = log_disc_json(c.log_disc);
  return j;
}

namespace {

ExtremalSolution parse_solution(const Json &j) {
  ExtremalSolution s;
  const std::string problem = j.at("problem").get<std::string>();
  if (problem == "MinAbs")
    s.problem = Problem::MinAbs;
  else if (problem == "MaxDisc")
    s.problem = Problem::MaxDisc;
  else
    throw InputError("unknown problem tag: " + problem);
  const std::string regime = j.at("regime").get<std::string>();
  if (regime == "FFamily")
    s.regime = Regime::FFamily;
  else if (regime == "GFamily")
    s.regime = Regime::GFamily;
  else if (regime == "Boundary")
    s.regime = Regime::Boundary;
  else
    throw InputError("unknown regime tag: " + regime);
  s.a = j.at("a").get<double>();
  s.d = j.at("d").get<int>();
  s.polys.emplace_back(vector_from(j.at("roots")));
  if (!j.at("mirror_roots").empty())
    s.polys.emplace_back(vector_from(j.at("mirror_roots")));
  s.achieved_m = real_from(j.at("achieved_m"));
  s.log_m = real_from(j.at("log_m"));
  const Json &disc = j.at("log_disc");
  s.achieved_disc.sign = disc.at("sign").get<int>();
  s.achieved_disc.log_abs = disc.at("log_abs").is_null()
                                ? -std::numeric_limits<double>::infinity()
                                : disc.at("log_abs").get<double>();
  s.lambda_or_B = real_from(j.at("lambda_or_B"));
  return s;
}

} // namespace

ExtremalSolution solution_from_json(const Json &j) {
  try {
    return parse_solution(j);
  } catch (const Json::exception &e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
}

ExtremalSolution solution_from_json(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
  return solution_from_json(j);
}

} // namespace extremal
