#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>
#include <vector>

#include "qchoquet/capacity.hpp"
#include "qchoquet/choquet.hpp"
#include "qchoquet/reconstruct.hpp"

namespace qchoquet::io {

struct ParseError : Error {
    using Error::Error;
};

// Matrix literal: nested row-major array of [re, im] pairs. All formats are
// documented in docs/formats.md; parsers reject unknown fields.

HermitianMatrix parse_matrix(const nlohmann::json& j);
nlohmann::json matrix_to_json(const HermitianMatrix& m);

MatrixCapacity parse_lattice(const nlohmann::json& j);
nlohmann::json lattice_to_json(const MatrixCapacity& c);

/// Builder spec: {"singletons": [...], "weights": [{"subset": [...], "mu": {"r": w}}]}.
struct BuilderSpec {
    std::vector<HermitianMatrix> singletons;
    LatticeWeights weights;
};

BuilderSpec parse_builder_spec(const nlohmann::json& j);

ExpectationVector parse_expectation(const nlohmann::json& j);
nlohmann::json expectation_to_json(const ExpectationVector& ev);

nlohmann::json subset_to_json(const SubsetKey& k);
nlohmann::json choquet_result_to_json(const ChoquetResult& r);
nlohmann::json mobius_to_json(const MobiusTable& m);
nlohmann::json validation_to_json(const ValidationReport& r);
nlohmann::json report_to_json(const ReconstructionReport& r);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qchoquet::io
