// Copyright 2026 The Authors.
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

// File formats. Rows are samples in every format.
//
//   CSV     comma-separated decimals, one row per line, optional header line.
//   Binary  "SUBSELv1" | rows u64 LE | cols u64 LE | rows*cols f64 LE, row-major.
//   Result  JSON object, "schema": 1.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsel/datagen.hpp"
#include "subsel/linalg.hpp"
#include "subsel/selection.hpp"

namespace subsel {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<char, 8> kMatrixMagic = {'S', 'U', 'B', 'S', 'E', 'L', 'v', '1'};
inline constexpr int kResultSchema = 1;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view field, std::size_t line, std::size_t column) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": cannot parse '" +
                      std::string(field) + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": NaN and Inf are not accepted");
  }
  return value;
}

inline std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

template <typename T>
T to_little_endian(T value) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return value;
}

}  // namespace detail

inline DataMatrix parse_csv(std::istream& in, bool has_header = false) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t lineno = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view text = detail::trim(line);
    if (text.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
      values.push_back(detail::parse_double(field, lineno, count + 1));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw FormatError("line " + std::to_string(lineno) + ": ragged row with " + std::to_string(count) +
                        " fields, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw FormatError("CSV input contains no data rows");
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = values[i * cols + j];
  }
  return DataMatrix(std::move(m));
}

inline DataMatrix read_csv(const std::string& path, bool has_header = false) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return parse_csv(in, has_header);
}

/// Shortest decimal form that parses back to the identical double.
inline void write_csv(const DataMatrix& a, std::ostream& out) {
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ',';
      out << detail::format_double(a(i, j));
    }
    out << '\n';
  }
}

inline void write_csv(const DataMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_csv(a, out);
}

inline void write_binary(const DataMatrix& a, std::ostream& out) {
  out.write(kMatrixMagic.data(), kMatrixMagic.size());
  const auto rows = detail::to_little_endian(static_cast<std::uint64_t>(a.rows()));
  const auto cols = detail::to_little_endian(static_cast<std::uint64_t>(a.cols()));
  out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const double v = detail::to_little_endian(a(i, j));
      out.write(reinterpret_cast<const char*>(&v), sizeof v);
    }
  }
}

inline void write_binary(const DataMatrix& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_binary(a, out);
}

inline DataMatrix parse_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMatrixMagic) {
    throw FormatError("not a SUBSELv1 matrix file (bad magic)");
  }
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  if (!in.read(reinterpret_cast<char*>(&rows), sizeof rows) || !in.read(reinterpret_cast<char*>(&cols), sizeof cols)) {
    throw FormatError("truncated matrix header");
  }
  rows = detail::to_little_endian(rows);
  cols = detail::to_little_endian(cols);
  if (rows == 0 || cols == 0) throw FormatError("matrix file declares an empty matrix");
  if (rows > (std::uint64_t{1} << 40) / cols) throw FormatError("matrix file declares an implausible size");
  std::vector<double> payload(static_cast<std::size_t>(rows * cols));
  const auto bytes = static_cast<std::streamsize>(payload.size() * sizeof(double));
  if (!in.read(reinterpret_cast<char*>(payload.data()), bytes)) {
    throw FormatError("truncated payload: expected " + std::to_string(bytes) + " bytes");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after payload");
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::uint64_t i = 0; i < rows; ++i) {
    for (std::uint64_t j = 0; j < cols; ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = detail::to_little_endian(payload[i * cols + j]);
    }
  }
  if (!m.allFinite()) throw FormatError("matrix file contains NaN or Inf");
  return DataMatrix(std::move(m));
}

inline DataMatrix read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return parse_binary(in);
}

inline bool is_binary_path(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".bin";
}

/// Binary for *.bin, CSV otherwise.
inline DataMatrix read_matrix(const std::string& path, bool has_header = false) {
  return is_binary_path(path) ? read_binary(path) : read_csv(path, has_header);
}

inline void write_matrix(const DataMatrix& a, const std::string& path) {
  if (is_binary_path(path)) {
    write_binary(a, path);
  } else {
    write_csv(a, path);
  }
}

/// One non-negative score per row: a single CSV column or a single row.
inline std::vector<double> read_scores(const std::string& path) {
  const DataMatrix s = read_csv(path, false);
  if (s.rows() != 1 && s.cols() != 1) throw FormatError("scores file must be a single row or a single column");
  return {s.values().data(), s.values().data() + s.values().size()};
}

inline void write_labels(const std::vector<int>& labels, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  for (int l : labels) out << l << '\n';
}

inline nlohmann::json result_to_json(const SelectionResult& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : r.parameters) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  return {{"schema", kResultSchema},
          {"method", r.method},
          {"indices", r.indices},
          {"sigmas", r.sigmas},
          {"residual_energies", r.residual_energies},
          {"elapsed_seconds", r.elapsed_seconds},
          {"parameters", params},
          {"warnings", r.warnings}};
}

inline SelectionResult result_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kResultSchema) {
      throw FormatError("unsupported result schema " + j.at("schema").dump());
    }
    SelectionResult r;
    r.method = j.at("method").get<std::string>();
    r.indices = j.at("indices").get<std::vector<Index>>();
    r.sigmas = j.at("sigmas").get<std::vector<double>>();
    r.residual_energies = j.at("residual_energies").get<std::vector<double>>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    for (const auto& [key, value] : j.at("parameters").items()) {
      if (value.is_number_integer()) {
        r.parameters[key] = value.get<std::int64_t>();
      } else if (value.is_number()) {
        r.parameters[key] = value.get<double>();
      } else if (value.is_string()) {
        r.parameters[key] = value.get<std::string>();
      } else {
        throw FormatError("parameter '" + key + "' has unsupported type");
      }
    }
    if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed result JSON: ") + e.what());
  }
}

inline void write_result(const SelectionResult& r, std::ostream& out) { out << result_to_json(r).dump(2) << '\n'; }

inline void write_result(const SelectionResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_result(r, out);
}

inline SelectionResult read_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
  return result_from_json(j);
}

/// SynthSpec fields from a JSON object; absent keys keep the defaults in base.
inline SynthSpec synth_spec_from_json(const nlohmann::json& j, SynthSpec base = {}) {
  try {
    if (j.contains("kind")) base.kind = parse_synth_kind(j.at("kind").get<std::string>());
    if (j.contains("M")) base.m = j.at("M").get<Index>();
    if (j.contains("N")) base.n = j.at("N").get<Index>();
    if (j.contains("subspaces")) base.subspaces = j.at("subspaces").get<Index>();
    if (j.contains("subspace_dim")) base.subspace_dim = j.at("subspace_dim").get<Index>();
    if (j.contains("clusters")) base.clusters = j.at("clusters").get<Index>();
    if (j.contains("cluster_spread")) base.cluster_spread = j.at("cluster_spread").get<double>();
    if (j.contains("center_scale")) base.center_scale = j.at("center_scale").get<double>();
    if (j.contains("singular_values")) base.singular_values = j.at("singular_values").get<std::vector<double>>();
    if (j.contains("noise_sigma")) base.noise_sigma = j.at("noise_sigma").get<double>();
    if (j.contains("outlier_count")) base.outlier_count = j.at("outlier_count").get<Index>();
    if (j.contains("outlier_scale")) base.outlier_scale = j.at("outlier_scale").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed synth spec: ") + e.what());
  }
  return base;
}

}  // namespace subsel
