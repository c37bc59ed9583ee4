// Matrix file parsing and JSON report serialization for the CLI.
//
// A matrix file is a single JSON object {"n": int, "entries": [[re, im], ...],
// "label": optional string} with entries in row-major order.

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "oprad/geometry.hpp"
#include "oprad/oracle.hpp"
#include "oprad/selftest.hpp"
#include "oprad/types.hpp"

namespace oprad {

struct matrix_file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  ComplexMatrix matrix;
  std::string label;
};

MatrixFile read_matrix_file(const std::string& path);
MatrixFile parse_matrix_json(const nlohmann::json& j, const std::string& where);
void write_matrix_file(const std::string& path, const ComplexMatrix& m,
                       const std::string& label = "");

using Json = nlohmann::ordered_json;

Json to_json(const ComplexVector& v);
Json to_json(const RadiusCertificate& c);
Json to_json(const WitnessRecord& w, bool reduced = false);
Json to_json(const OrthogonalityReport& r, bool reduced = false);
Json to_json(const ParallelismReport& r, bool reduced = false);
Json to_json(const OracleVerdict& v);
Json to_json(const SelfTestReport& r);

}  // namespace oprad
