#include "gfc/report.hpp"

#include <sstream>

namespace gfc {

std::string generator_label(Valence v, std::size_t a) {
  return (v == Valence::dual ? "e*" : "e") + std::to_string(a + 1);
}

Json json_form(const GForm& g) {
  Json arr = Json::array();
  for (std::size_t a = 0; a < g.generators(); ++a)
    for (const auto& [t, p] : g.comp(a).coeffs())
      arr.push_back({generator_label(g.valence(), a), tuple_str(t), p.to_string()});
  return arr;
}

Json json_scalar_form(const ScalarForm& f) {
  Json arr = Json::array();
  for (const auto& [t, p] : f.coeffs()) arr.push_back({tuple_str(t), p.to_string()});
  return arr;
}

std::string human_form(const GForm& g, const std::string& name) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t a = 0; a < g.generators(); ++a)
    for (const auto& [t, p] : g.comp(a).coeffs()) {
      os << name << "[" << generator_label(g.valence(), a) << "][" << tuple_str(t)
         << "] = " << p.to_string() << "\n";
      any = true;
    }
  if (!any) os << name << " = (zero)\n";
  return os.str();
}

std::string human_scalar_form(const ScalarForm& f, const std::string& name) {
  std::ostringstream os;
  bool any = false;
  for (const auto& [t, p] : f.coeffs()) {
    os << name << "[" << tuple_str(t) << "] = " << p.to_string() << "\n";
    any = true;
  }
  if (!any) os << name << " = (zero)\n";
  return os.str();
}

namespace {

std::string orientation_str(std::size_t m) {
  std::string s;
  for (std::size_t i = 0; i < m; ++i) {
    if (i) s += "^";
    s += "dq" + std::to_string(i);
  }
  return s;
}

}  // namespace

Json conventions_json(const Metric& g) {
  Json c = Json::object();
  c["metric"] = g.str();
  c["orientation"] = orientation_str(g.dim);
  c["hodge"] = "*(dq^I) = prod(g_i, i in I) * sign(I,I^c) dq^(I^c)";
  c["curvature_coefficient"] = "F(d_mu,d_nu) = d_mu A_nu - d_nu A_mu + [A_mu,A_nu], mu < nu";
  c["jet_index"] = "k[a][mu][lambda] = d_lambda A^a_mu";
  c["jet_split"] = "F[a][mu][lambda] = K'[a][lambda][mu] - K'[a][mu][lambda]";
  c["momentum_slot"] = "(-1)^m p";
  return c;
}

std::string conventions_human(const Metric& g) {
  std::ostringstream os;
  os << "metric: " << g.str() << "\n"
     << "orientation: " << orientation_str(g.dim) << "\n"
     << "hodge: *(dq^I) = prod(g_i, i in I) * sign(I,I^c) dq^(I^c)\n"
     << "curvature coefficient: F(d_mu,d_nu) = d_mu A_nu - d_nu A_mu + [A_mu,A_nu], mu < nu\n"
     << "jet index: k[a][mu][lambda] = d_lambda A^a_mu\n"
     << "jet split: F[a][mu][lambda] = K'[a][lambda][mu] - K'[a][mu][lambda]\n"
     << "momentum slot: (-1)^m p\n";
  return os.str();
}

}  // namespace gfc
