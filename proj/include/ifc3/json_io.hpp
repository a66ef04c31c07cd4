// ifc3 — sum-rate outer bounds for the three-user Gaussian interference channel
// Copyright (C) 2026 the ifc3 authors
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

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "channel.hpp"
#include "classic_bounds.hpp"
#include "common.hpp"

namespace ifc3 {

using nlohmann::json;

inline json complex_to_json(cd z) { return json::array({z.real(), z.imag()}); }

inline cd complex_from_json(const json& j) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw BadInput("expected [re, im] for a complex value");
  return cd(j[0].get<double>(), j[1].get<double>());
}

// {"H": [[[re,im] x3] x3]}, row-major receiver-by-transmitter gains.  Any
// nonzero-diagonal matrix is accepted and brought to standard form.
inline json channel_to_json(const ChannelMatrix& ch) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(ch(i, j)));
    rows.push_back(row);
  }
  return {{"H", rows}};
}

inline ChannelMatrix channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("H"))
    throw BadInput("channel JSON must be an object with an \"H\" field");
  const json& rows = j["H"];
  if (!rows.is_array() || rows.size() != 3)
    throw BadInput("\"H\" must be a 3x3 array");
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3)
      throw BadInput("\"H\" must be a 3x3 array");
    for (int c = 0; c < 3; ++c) m(i, c) = complex_from_json(rows[i][c]);
  }
  return ChannelMatrix::standardize(m);
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::FullySymmetric: return "fully_symmetric";
    case Family::CyclicSymmetric: return "cyclic_symmetric";
    case Family::MixedStrongVeryStrong: return "mixed_strong_very_strong";
    case Family::Custom: return "custom";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  if (s == "fully_symmetric") return Family::FullySymmetric;
  if (s == "cyclic_symmetric") return Family::CyclicSymmetric;
  if (s == "mixed_strong_very_strong") return Family::MixedStrongVeryStrong;
  if (s == "custom") return Family::Custom;
  throw BadInput("unknown family \"" + s + "\"");
}

// {"family": name, "power_db": x, "h1": [re,im], "h2": [re,im]}
inline json family_to_json(const FamilySpec& spec) {
  return {{"family", family_name(spec.family)},
          {"power_db", spec.power_db},
          {"h1", complex_to_json(spec.h1)},
          {"h2", complex_to_json(spec.h2)}};
}

inline FamilySpec family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("power_db"))
    throw BadInput("family JSON needs \"family\" and \"power_db\"");
  FamilySpec spec;
  spec.family = family_from_name(j["family"].get<std::string>());
  if (!j["power_db"].is_number()) throw BadInput("\"power_db\" must be a number");
  spec.power_db = j["power_db"].get<double>();
  if (j.contains("h1")) spec.h1 = complex_from_json(j["h1"]);
  if (j.contains("h2")) spec.h2 = complex_from_json(j["h2"]);
  return spec;
}

inline json bound_to_json(const BoundResult& r) {
  return {{"bound", bound_kind_name(r.kind)},
          {"value_bits", r.value_bits},
          {"detail", r.detail}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadInput(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return j;
}

}  // namespace ifc3
