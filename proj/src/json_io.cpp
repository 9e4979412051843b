// Copyright 2026 The chanmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chanmetric/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace chanmetric::json {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) fail(where + "." + name, "missing");
  return *it;
}

Eigen::Index positive_int(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    fail(where + "." + name, "expected a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "not finite");
  return x;
}

}  // namespace

json encode_matrix(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix decode_matrix(const json& j, const std::string& where) {
  const Eigen::Index rows = positive_int(j, "rows", where);
  const Eigen::Index cols = positive_int(j, "cols", where);
  const json& data = field(j, "data", where);
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    fail(where + ".data", "expected " + std::to_string(rows * cols) + " entries");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows * cols; ++i) {
    const json& e = data[static_cast<std::size_t>(i)];
    const std::string at = where + ".data[" + std::to_string(i) + "]";
    if (e.is_number()) {
      m(i / cols, i % cols) = number(e, at);
    } else if (e.is_array() && e.size() == 2) {
      m(i / cols, i % cols) = Complex(number(e[0], at), number(e[1], at));
    } else {
      fail(at, "expected [re, im]");
    }
  }
  return m;
}

json encode_vector(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json encode_channel(const KrausChannel& ch) {
  json kraus = json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(encode_matrix(k));
  return {{"dim_in", ch.dim_in()},
          {"dim_out", ch.dim_out()},
          {"kraus", std::move(kraus)},
          {"kind", ch.is_channel() ? "channel" : "operation"}};
}

KrausChannel decode_channel(const json& j, const std::string& where) {
  const Eigen::Index dim_in = positive_int(j, "dim_in", where);
  const Eigen::Index dim_out = positive_int(j, "dim_out", where);
  const json& list = field(j, "kraus", where);
  if (!list.is_array() || list.empty()) fail(where + ".kraus", "expected a nonempty list");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".kraus[" + std::to_string(i) + "]";
    kraus.push_back(decode_matrix(list[i], at));
    if (kraus.back().rows() != dim_out || kraus.back().cols() != dim_in) {
      fail(at, "expected shape dim_out x dim_in");
    }
  }
  bool require_tp = true;
  if (j.contains("kind")) {
    const json& kind = j["kind"];
    if (kind == "operation") {
      require_tp = false;
    } else if (kind != "channel") {
      fail(where + ".kind", "expected \"channel\" or \"operation\"");
    }
  }
  try {
    return make_channel(std::move(kraus), require_tp);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

json encode_protocol(const CommitmentProtocol& p) {
  return {{"phi0", encode_channel(p.phi0())}, {"phi1", encode_channel(p.phi1())}};
}

CommitmentProtocol decode_protocol(const json& j, const std::string& where) {
  return CommitmentProtocol(decode_channel(field(j, "phi0", where), where + ".phi0"),
                            decode_channel(field(j, "phi1", where), where + ".phi1"));
}

json encode_kernel(const FiniteKernel& k) {
  const auto& p = k.matrix();
  json rows = json::array();
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < p.cols(); ++c) row.push_back(p(r, c));
    rows.push_back(std::move(row));
  }
  return {{"rows", p.rows()}, {"cols", p.cols()}, {"p", std::move(rows)}};
}

FiniteKernel decode_kernel(const json& j, const std::string& where) {
  const Eigen::Index rows = positive_int(j, "rows", where);
  const Eigen::Index cols = positive_int(j, "cols", where);
  const json& p = field(j, "p", where);
  if (!p.is_array() || static_cast<Eigen::Index>(p.size()) != rows) {
    fail(where + ".p", "expected " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = p[static_cast<std::size_t>(r)];
    const std::string at = where + ".p[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(at, "expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = number(row[static_cast<std::size_t>(c)], at + "[" + std::to_string(c) + "]");
    }
  }
  try {
    return FiniteKernel(std::move(m));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

json encode_povm(const Povm& m) {
  json out = json::array();
  for (const auto& e : m.elements()) out.push_back(encode_matrix(e));
  return out;
}

Povm decode_povm(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty list of matrices");
  std::vector<ComplexMatrix> elements;
  for (std::size_t i = 0; i < j.size(); ++i) {
    elements.push_back(decode_matrix(j[i], where + "[" + std::to_string(i) + "]"));
  }
  try {
    return Povm(std::move(elements));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    j = std::strtod(buf, nullptr);
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

}  // namespace chanmetric::json
