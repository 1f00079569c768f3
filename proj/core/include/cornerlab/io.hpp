#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/extreal.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/hermlin.hpp"
#include "cornerlab/ncgraphs.hpp"

namespace cornerlab::io {

using nlohmann::json;

// Numbers are rounded to 9 significant digits; infinities become "inf"/"-inf".
json number(double x);
json number(const ExtReal& x);
ExtReal extreal_from_json(const json& j);

// {"d": d, "re": [[...]], "im": [[...]]}; "im" omitted for real matrices.
json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& j);

// {"dim": d, "generators": [matrix, ...]}
json corner_to_json(const GeneratedCorner& c);
GeneratedCorner corner_from_json(const json& j);

// {"dim": d, "vgen": [[...]]} or {"dim": d, "hpoly": [[...]]}
json diagonal_corner_to_json(const DiagonalCorner& c);
DiagonalCorner diagonal_corner_from_json(const json& j);

// {"n": n, "edges": [[i, j], ...]}, 0-indexed.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"dim": d, "basis": [matrix, ...]}
json opsys_to_json(const OperatorSystem& s);
OperatorSystem opsys_from_json(const json& j);

json param_report_to_json(const ParamReport& r);
json nc_params_to_json(const NcParams& p);
json entropy_result_to_json(const EntropyResult& r);

// ParseError on unreadable files or malformed JSON.
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace cornerlab::io
