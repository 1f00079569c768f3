#include "cornerlab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cornerlab/errors.hpp"

namespace cornerlab::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

json vector_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<double> vector_from(const json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(extreal_from_json(x).value());
  return v;
}

}  // namespace

json number(double x) { return number(ExtReal(x)); }

json number(const ExtReal& x) {
  if (!x.is_finite()) return x.to_string();
  return std::strtod(format_g9(x.value()).c_str(), nullptr);
}

ExtReal extreal_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
    fail(ErrorCode::ParseError, "expected a number or \"inf\", got \"" + s + "\"");
  }
  if (!j.is_number()) fail(ErrorCode::ParseError, "expected a number");
  return j.get<double>();
}

json matrix_to_json(const HermitianMatrix& m) {
  const int d = m.dim();
  json re = json::array();
  json im = json::array();
  bool complex = false;
  for (int i = 0; i < d; ++i) {
    json rr = json::array();
    json ir = json::array();
    for (int k = 0; k < d; ++k) {
      rr.push_back(number(m(i, k).real()));
      ir.push_back(number(m(i, k).imag()));
      complex = complex || m(i, k).imag() != 0.0;
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  json j{{"d", d}, {"re", re}};
  if (complex) j["im"] = im;
  return j;
}

HermitianMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const int d = field(j, "d").get<int>();
    if (d < 1) fail(ErrorCode::ParseError, "matrix dimension must be >= 1");
    const json& re = field(j, "re");
    const bool has_im = j.contains("im");
    CMatrix m(d, d);
    auto check_rows = [&](const json& a) {
      if (!a.is_array() || static_cast<int>(a.size()) != d) fail(ErrorCode::ParseError, "matrix must have d rows");
      for (const auto& row : a)
        if (!row.is_array() || static_cast<int>(row.size()) != d) fail(ErrorCode::ParseError, "matrix must have d columns");
    };
    check_rows(re);
    if (has_im) check_rows(j.at("im"));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const double im = has_im ? j.at("im")[i][k].get<double>() : 0.0;
        m(i, k) = Complex(re[i][k].get<double>(), im);
      }
    return HermitianMatrix(m);
  });
}

json corner_to_json(const GeneratedCorner& c) {
  json g = json::array();
  for (const auto& x : c.generators()) g.push_back(matrix_to_json(x));
  return {{"dim", c.dim()}, {"generators", g}};
}

GeneratedCorner corner_from_json(const json& j) {
  return guarded("corner", [&] {
    const int d = field(j, "dim").get<int>();
    std::vector<HermitianMatrix> g;
    for (const auto& x : field(j, "generators")) g.push_back(matrix_from_json(x));
    return GeneratedCorner(d, std::move(g));
  });
}

json diagonal_corner_to_json(const DiagonalCorner& c) {
  json rows = json::array();
  for (const auto& v : c.data()) rows.push_back(vector_json(v));
  return {{"dim", c.dim()}, {c.kind() == DiagonalCorner::Kind::VGen ? "vgen" : "hpoly", rows}};
}

DiagonalCorner diagonal_corner_from_json(const json& j) {
  return guarded("diagonal corner", [&] {
    const int d = field(j, "dim").get<int>();
    const bool vgen = j.contains("vgen");
    if (vgen == j.contains("hpoly")) fail(ErrorCode::ParseError, "diagonal corner needs exactly one of vgen/hpoly");
    std::vector<std::vector<double>> rows;
    for (const auto& r : j.at(vgen ? "vgen" : "hpoly")) rows.push_back(vector_from(r));
    return vgen ? DiagonalCorner::vgen(d, std::move(rows)) : DiagonalCorner::hpoly(d, std::move(rows));
  });
}

json graph_to_json(const Graph& g) {
  json e = json::array();
  for (auto [i, k] : g.edges()) e.push_back({i, k});
  return {{"n", g.n()}, {"edges", e}};
}

Graph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    const int n = field(j, "n").get<int>();
    if (n < 0) fail(ErrorCode::ParseError, "graph size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "edge must be a pair");
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) fail(ErrorCode::ParseError, "bad edge endpoints");
      edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
  });
}

json opsys_to_json(const OperatorSystem& s) {
  json b = json::array();
  for (const auto& x : s.basis()) b.push_back(matrix_to_json(x));
  return {{"dim", s.dim()}, {"basis", b}};
}

OperatorSystem opsys_from_json(const json& j) {
  return guarded("operator system", [&] {
    const int d = field(j, "dim").get<int>();
    std::vector<HermitianMatrix> b;
    for (const auto& x : field(j, "basis")) b.push_back(matrix_from_json(x));
    return OperatorSystem(d, std::move(b));
  });
}

json param_report_to_json(const ParamReport& r) {
  json j{{"gamma", number(r.gamma)},
         {"n_param", number(r.n_param)},
         {"n_gap", number(r.n_gap)},
         {"m_param", number(r.m_param)},
         {"gamma_ab", number(r.gamma_ab)},
         {"gamma_argmax", vector_json(r.gamma_argmax)},
         {"n_weights", vector_json(r.n_weights)},
         {"ill_conditioned", r.ill_conditioned}};
  j["ab_point"] = r.ab_point ? matrix_to_json(*r.ab_point) : json(nullptr);
  return j;
}

json nc_params_to_json(const NcParams& p) {
  auto v = [](const NcValue& x) { return json{{"value", number(x.value)}, {"exactness", exactness_name(x.exactness)}}; };
  return {{"alpha", v(p.alpha)},
          {"omega", v(p.omega)},
          {"omega_tilde", v(p.omega_tilde)},
          {"chi_f", v(p.chi_f)},
          {"omega_f", v(p.omega_f)},
          {"Omega_f", v(p.Omega_f)},
          {"Omega_tilde_f", v(p.Omega_tilde_f)},
          {"chi", v(p.chi)},
          {"Omega", v(p.Omega)},
          {"Omega_tilde", v(p.Omega_tilde)},
          {"chi_f_omega_f_residual", number(p.chi_f_omega_f_residual)}};
}

json entropy_result_to_json(const EntropyResult& r) {
  return {{"value", number(r.value)},
          {"gap", number(r.gap)},
          {"iterations", r.iterations},
          {"status", status_name(r.status)},
          {"exact", r.exact},
          {"weights", vector_json(r.weights)},
          {"minimizer", matrix_to_json(r.minimizer)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  return guarded(path.c_str(), [&] { return json::parse(text); });
}

}  // namespace cornerlab::io
