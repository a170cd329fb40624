#include "report.hpp"

namespace gradecheck {

namespace {

nlohmann::json opt_bool(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string yes_no(const std::optional<bool>& v) {
  if (!v) return "withheld (not verified Cohen-Macaulay)";
  return *v ? "yes" : "no";
}

}  // namespace

nlohmann::json report_to_json(const RingReport& rep, uint64_t seed,
                              const nlohmann::json& options) {
  nlohmann::json j;
  j["dim"] = rep.dim;
  j["embdim"] = rep.embdim;
  j["mult"] = rep.mult;
  j["hvector"] = rep.hvector;
  j["cm"] = rep.cm;
  j["gorenstein"] = opt_bool(rep.gorenstein);
  j["hypersurface"] = opt_bool(rep.hypersurface);
  j["ci"] = opt_bool(rep.ci);
  j["min_mult"] = opt_bool(rep.min_mult);
  j["stretched"] = opt_bool(rep.stretched);
  j["super_stretched"] = opt_bool(rep.super_stretched);
  j["h_class"] = rep.h_class ? nlohmann::json(h_class_name(*rep.h_class)) : nullptr;
  j["obstruction"] = rep.obstruction ? nlohmann::json(*rep.obstruction) : nullptr;
  j["seed"] = seed;
  j["options"] = options;
  return j;
}

std::string report_to_text(const RingReport& rep, uint64_t seed) {
  std::string out;
  out += "ring: " + rep.ring_description + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  out += "dimension:               " + std::to_string(rep.dim) + "\n";
  out += "embedding dimension:     " + std::to_string(rep.embdim) + "\n";
  out += "multiplicity:            " + std::to_string(rep.mult) + "\n";
  std::string h = "(";
  for (size_t i = 0; i < rep.hvector.size(); ++i) {
    if (i) h += ", ";
    h += std::to_string(rep.hvector[i]);
  }
  h += ")";
  out += "h-vector:                " + h +
         (rep.hvector_seed_dependent ? "  [seed-dependent quotient function]" : "") + "\n";
  out += "Cohen-Macaulay:          " + std::string(rep.cm ? "yes" : "no");
  if (!rep.cm) out += "  [" + rep.cm_diagnostic + "]";
  out += "\n";
  out += "Gorenstein:              " + yes_no(rep.gorenstein) + "\n";
  out += "hypersurface:            " + yes_no(rep.hypersurface) + "\n";
  out += "complete intersection:   " + yes_no(rep.ci) + "\n";
  out += "minimal multiplicity:    " + yes_no(rep.min_mult) + "\n";
  out += "stretched:               " + yes_no(rep.stretched) +
         (rep.dim == 0 ? "  [direct]\n" : "  [generic-sampled]\n");
  out += "super-stretched:         " + yes_no(rep.super_stretched) +
         (rep.dim == 0 ? "  [direct: graded pieces of degree >= 2]\n"
                       : "  [stretched + reduction identity J*m^2 = m^3]\n");
  out += "h-vector class:          " +
         (rep.h_class ? h_class_name(*rep.h_class) : std::string("withheld")) + "\n";
  out += "countable-type check:    ";
  if (!rep.obstruction)
    out += "withheld (not verified Cohen-Macaulay)";
  else if (*rep.obstruction == "none_found")
    out += "none_found  [necessary conditions hold; this is NOT a proof of countable type]";
  else
    out += "obstructed: " + *rep.obstruction;
  out += "\n";
  for (const std::string& n : rep.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace gradecheck
