#include "bilateral/report_json.hpp"

#include <charconv>
#include <cmath>

#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

nlohmann::json to_json(Complex v) { return {{"re", number(v.real())}, {"im", number(v.imag())}}; }

nlohmann::json to_json(const SeriesResult& r) {
  return {{"value", to_json(r.value)},
          {"terms_used", r.terms_used},
          {"converged", r.converged},
          {"tail_estimate", number(r.tail_estimate)},
          {"decay_exponent", number(r.decay_exponent)},
          {"classification", std::string(to_string(r.classification))}};
}

nlohmann::json to_json(const TruncationPolicy& p) {
  return {{"rel_tolerance", p.rel_tolerance},
          {"max_half_width", p.max_half_width},
          {"tail_estimation", p.tail_estimation},
          {"allow_conditional", p.allow_conditional},
          {"acceleration", std::string(to_string(p.acceleration))}};
}

TruncationPolicy policy_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("policy must be a JSON object");
  TruncationPolicy p;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "rel_tolerance")
        p.rel_tolerance = value.get<double>();
      else if (key == "max_half_width")
        p.max_half_width = value.get<std::int64_t>();
      else if (key == "tail_estimation")
        p.tail_estimation = value.get<bool>();
      else if (key == "allow_conditional")
        p.allow_conditional = value.get<bool>();
      else if (key == "acceleration")
        p.acceleration = parse_acceleration(value.get<std::string>());
      else
        throw ConfigError("unknown policy key '" + key + "'");
    }
    p.validate();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed policy: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(e.what());
  }
  return p;
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& param : r.inputs)
    std::visit([&](const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>)
        inputs[param.name] = number(v);
      else
        inputs[param.name] = v;
    }, param.value);

  nlohmann::json diagnostics = nlohmann::json::array();
  for (const auto& d : r.diagnostics) {
    auto entry = to_json(d.result);
    entry["label"] = d.label;
    diagnostics.push_back(std::move(entry));
  }
  nlohmann::json extras = nlohmann::json::object();
  for (const auto& m : r.extras) extras[m.name] = number(m.value);
  nlohmann::json exact = nlohmann::json::array();
  for (const auto& e : r.exact)
    exact.push_back({{"label", e.label}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"equal", e.equal}});

  return {{"identity", r.identity},
          {"inputs", inputs},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"abs_residual", number(r.abs_residual)},
          {"rel_residual", number(r.rel_residual)},
          {"tolerance", r.tolerance},
          {"passed", r.passed},
          {"diagnostics", diagnostics},
          {"extras", extras},
          {"notes", r.notes},
          {"exact", exact},
          {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr)}};
}

std::string format_number(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_number(v.real());
  std::string out = format_number(v.real());
  if (!std::signbit(v.imag()) || std::isnan(v.imag())) out += '+';
  return out + format_number(v.imag()) + "i";
}

}  // namespace bilateral
