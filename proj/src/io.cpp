// Copyright 2026 The spcpm Authors
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

#include "spcpm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spcpm/error.hpp"

namespace spcpm::io {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::parse_error, message);
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Index positive_integer(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    fail(std::string(what) + " must be a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

json dims_to_json(const DecomposedSpace& s) { return json::array({s.d1(), s.d2()}); }

DecomposedSpace dims_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    fail(std::string(what) + " must be a pair [d1, d2]");
  }
  try {
    return DecomposedSpace(
        positive_integer(j[0], what), positive_integer(j[1], what));
  } catch (const Error& e) {
    fail(e.what());
  }
}

json header(const char* kind) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = kind;
  return j;
}

void require_kind(const json& j, const char* kind) {
  const json& format = member(j, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatTag) {
    fail(std::string("unsupported format tag, expected \"") + kFormatTag + "\"");
  }
  const json& k = member(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    fail(std::string("expected a \"") + kind + "\" document");
  }
}

// Library constructors throw shape and finiteness errors; inside a parse
// they are format errors.
template <typename F>
auto parse_guard(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    fail(e.what());
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const Index rows = positive_integer(member(j, "rows"), "rows");
  const Index cols = positive_integer(member(j, "cols"), "cols");
  const json& data = member(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    fail("matrix data must hold rows * cols entries");
  }
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index c = 0; c < cols; ++c) {
      const json& entry = data[static_cast<std::size_t>(i * cols + c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        fail("matrix entries must be [re, im] number pairs");
      }
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        fail("matrix entries must be finite");
      }
      m(i, c) = Complex(re, im);
    }
  }
  return m;
}

json channel_to_json(const KrausRep& rep) {
  json j = header("channel");
  j["source_dims"] = dims_to_json(rep.source());
  j["target_dims"] = dims_to_json(rep.target());
  json ops = json::array();
  for (const ComplexMatrix& v : rep.ops()) ops.push_back(matrix_to_json(v));
  j["kraus"] = std::move(ops);
  return j;
}

json f_matrix_to_json(const FMatrixRep& rep) {
  json j = header("f-matrix");
  j["source_dims"] = dims_to_json(rep.source());
  j["target_dims"] = dims_to_json(rep.target());
  j["basis"] = std::string(to_string(rep.basis()));
  j["F"] = matrix_to_json(rep.f());
  return j;
}

json orthonormal_to_json(
    const DecomposedSpace& source, const DecomposedSpace& target,
    const std::vector<WeightedOperator>& terms) {
  json j = header("orthonormal-kraus");
  j["source_dims"] = dims_to_json(source);
  j["target_dims"] = dims_to_json(target);
  json list = json::array();
  for (const WeightedOperator& t : terms) {
    list.push_back(json{{"weight", t.weight}, {"operator", matrix_to_json(t.op)}});
  }
  j["terms"] = std::move(list);
  return j;
}

json blocks_to_json(const SPBlockRep& blocks) {
  json j = header("sp-blocks");
  j["source_dims"] = dims_to_json(blocks.source());
  j["target_dims"] = dims_to_json(blocks.target());
  j["A"] = matrix_to_json(blocks.a());
  j["B"] = matrix_to_json(blocks.b());
  j["C"] = matrix_to_json(blocks.c());
  return j;
}

json dilation_to_json(const UnitaryDilation& dil) {
  json j = header("dilation");
  j["dims"] = dims_to_json(dil.space);
  j["ancilla_dim"] = dil.ancilla_dim;
  j["U"] = matrix_to_json(dil.u);
  j["V1"] = matrix_to_json(dil.v1);
  j["V2"] = matrix_to_json(dil.v2);
  return j;
}

KrausRep channel_from_json(const json& j) {
  return parse_guard([&] {
    require_kind(j, "channel");
    const DecomposedSpace source =
        dims_from_json(member(j, "source_dims"), "source_dims");
    const DecomposedSpace target =
        dims_from_json(member(j, "target_dims"), "target_dims");
    const json& list = member(j, "kraus");
    if (!list.is_array()) fail("\"kraus\" must be a list of matrices");
    std::vector<ComplexMatrix> ops;
    for (const json& m : list) ops.push_back(matrix_from_json(m));
    return KrausRep(source, target, std::move(ops));
  });
}

FMatrixRep f_matrix_from_json(const json& j) {
  return parse_guard([&] {
    require_kind(j, "f-matrix");
    const json& basis = member(j, "basis");
    if (!basis.is_string() ||
        basis.get<std::string>() != to_string(OperatorBasis::matrix_units)) {
      fail("only the \"matrix-units\" basis is supported");
    }
    return FMatrixRep(
        dims_from_json(member(j, "source_dims"), "source_dims"),
        dims_from_json(member(j, "target_dims"), "target_dims"),
        matrix_from_json(member(j, "F")));
  });
}

SPBlockRep blocks_from_json(const json& j) {
  return parse_guard([&] {
    require_kind(j, "sp-blocks");
    return SPBlockRep(
        dims_from_json(member(j, "source_dims"), "source_dims"),
        dims_from_json(member(j, "target_dims"), "target_dims"),
        matrix_from_json(member(j, "A")), matrix_from_json(member(j, "B")),
        matrix_from_json(member(j, "C")));
  });
}

UnitaryDilation dilation_from_json(const json& j) {
  return parse_guard([&] {
    require_kind(j, "dilation");
    UnitaryDilation dil{
        dims_from_json(member(j, "dims"), "dims"),
        positive_integer(member(j, "ancilla_dim"), "ancilla_dim"),
        matrix_from_json(member(j, "U")),
        matrix_from_json(member(j, "V1")),
        matrix_from_json(member(j, "V2"))};
    const Index n = dil.space.dim() * dil.ancilla_dim;
    for (const ComplexMatrix* m : {&dil.u, &dil.v1, &dil.v2}) {
      if (m->rows() != n || m->cols() != n) {
        fail("dilation matrices must be (d * ancilla_dim) square");
      }
    }
    return dil;
  });
}

KrausRep map_from_json(const json& j) {
  const json& kind = member(j, "kind");
  if (!kind.is_string()) fail("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "channel") return channel_from_json(j);
  if (k == "f-matrix") {
    const FMatrixRep f = f_matrix_from_json(j);
    try {
      return f_to_kraus(f);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (k == "sp-blocks") {
    const SPBlockRep blocks = blocks_from_json(j);
    return f_to_kraus(sp_from_blocks(blocks));
  }
  if (k == "orthonormal-kraus") {
    return parse_guard([&] {
      require_kind(j, "orthonormal-kraus");
      const DecomposedSpace source =
          dims_from_json(member(j, "source_dims"), "source_dims");
      const DecomposedSpace target =
          dims_from_json(member(j, "target_dims"), "target_dims");
      const json& terms = member(j, "terms");
      if (!terms.is_array()) fail("\"terms\" must be an array");
      std::vector<ComplexMatrix> ops;
      for (const json& t : terms) {
        const json& w = member(t, "weight");
        if (!w.is_number() || w.get<double>() < 0.0) {
          fail("term weights must be non-negative numbers");
        }
        ops.push_back(
            std::sqrt(w.get<double>()) * matrix_from_json(member(t, "operator")));
      }
      if (ops.empty()) {
        ops.push_back(ComplexMatrix::Zero(target.dim(), source.dim()));
      }
      return KrausRep(source, target, std::move(ops));
    });
  }
  fail("\"" + k + "\" documents do not describe a map");
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot write " + path.string());
  out << text;
  if (!out) fail("failed writing " + path.string());
}

}  // namespace spcpm::io
