#include "oprad/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace oprad {

MatrixFile parse_matrix_json(const nlohmann::json& j,
                             const std::string& where) {
  if (!j.is_object())
    throw matrix_file_error(where + ": top level must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw matrix_file_error(where + ": field 'n' missing or not an integer");
  const long long n_ll = j["n"].get<long long>();
  if (n_ll < 1)
    throw matrix_file_error(where + ": field 'n' must be a positive integer");
  const std::size_t n = static_cast<std::size_t>(n_ll);

  if (!j.contains("entries") || !j["entries"].is_array())
    throw matrix_file_error(where + ": field 'entries' missing or not an array");
  const auto& entries = j["entries"];
  if (entries.size() != n * n)
    throw matrix_file_error(where + ": field 'entries' has " +
                            std::to_string(entries.size()) +
                            " elements, expected n*n = " +
                            std::to_string(n * n));

  std::vector<Complex> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw matrix_file_error(where + ": entries[" + std::to_string(i) +
                              "] must be a [re, im] number pair");
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw matrix_file_error(where + ": entries[" + std::to_string(i) +
                              "] is not finite");
    data.emplace_back(re, im);
  }

  MatrixFile out{ComplexMatrix(n, n, std::move(data)), ""};
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw matrix_file_error(where + ": field 'label' must be a string");
    out.label = j["label"].get<std::string>();
  }
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw matrix_file_error(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw matrix_file_error(path + ": invalid JSON: " + e.what());
  }
  return parse_matrix_json(j, path);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m,
                       const std::string& label) {
  if (!m.square()) throw matrix_file_error(path + ": matrix must be square");
  Json j;
  j["n"] = m.rows();
  Json entries = Json::array();
  for (const Complex& z : m.data())
    entries.push_back(Json::array({z.real(), z.imag()}));
  j["entries"] = std::move(entries);
  if (!label.empty()) j["label"] = label;
  std::ofstream out(path);
  if (!out) throw matrix_file_error(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

Json to_json(const ComplexVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i)
    a.push_back(Json::array({v[i].real(), v[i].imag()}));
  return a;
}

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const RadiusCertificate& c) {
  Json j;
  j["radius"] = c.radius;
  j["theta_star"] = c.theta_star;
  j["attaining_vector"] = to_json(c.attaining_vector);
  j["residual"] = c.residual;
  return j;
}

Json to_json(const WitnessRecord& w, bool reduced) {
  Json j;
  if (w.theta.has_value()) j["theta"] = *w.theta;
  if (!reduced) j["x"] = to_json(w.x);
  j["y"] = to_json(w.y);
  j["attainment_residual"] = w.attainment_residual;
  j["sign_or_product_residual"] = w.sign_or_product_residual;
  return j;
}

Json to_json(const OrthogonalityReport& r, bool reduced) {
  Json j;
  j["orthogonal"] = r.orthogonal;
  j["rho"] = r.rho;
  j["base_radius"] = r.base_radius;
  j["min_value"] = r.min_value;
  j["gamma_star"] = complex_json(r.gamma_star);
  j["tolerance"] = r.tolerance;
  j["degenerate"] = r.degenerate;
  Json ws = Json::array();
  for (const WitnessRecord& w : r.witnesses) ws.push_back(to_json(w, reduced));
  j["witnesses"] = std::move(ws);
  Json fs = Json::array();
  for (const WitnessRecord& w : r.failed_witnesses)
    fs.push_back(to_json(w, reduced));
  j["failed_witnesses"] = std::move(fs);
  return j;
}

Json to_json(const ParallelismReport& r, bool reduced) {
  Json j;
  j["parallel"] = r.parallel;
  j["rho"] = r.rho;
  j["sum_radius"] = r.sum_radius;
  j["max_value"] = r.max_value;
  j["lambda_star"] = complex_json(r.lambda_star);
  j["tolerance"] = r.tolerance;
  j["degenerate"] = r.degenerate;
  Json ws = Json::array();
  for (const WitnessRecord& w : r.witnesses) ws.push_back(to_json(w, reduced));
  j["witnesses"] = std::move(ws);
  Json fs = Json::array();
  for (const WitnessRecord& w : r.failed_witnesses)
    fs.push_back(to_json(w, reduced));
  j["failed_witnesses"] = std::move(fs);
  return j;
}

Json to_json(const OracleVerdict& v) {
  Json j;
  j["agrees"] = v.agrees;
  j["oracle_value"] = v.oracle_value;
  j["main_value"] = v.main_value;
  j["discrepancy"] = v.discrepancy;
  j["oracle_decision"] = v.oracle_decision;
  j["main_decision"] = v.main_decision;
  j["combined_tolerance"] = v.combined_tolerance;
  return j;
}

Json to_json(const SelfTestReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["all_passed"] = r.all_passed;
  Json props = Json::array();
  for (const PropertyResult& p : r.properties) {
    Json pj;
    pj["name"] = p.name;
    pj["trials"] = p.trials;
    pj["failures"] = p.failures;
    pj["worst_discrepancy"] = p.worst_discrepancy;
    if (!p.note.empty()) pj["note"] = p.note;
    props.push_back(std::move(pj));
  }
  j["properties"] = std::move(props);
  return j;
}

}  // namespace oprad
