// Copyright 2026 The lorentz-torus Authors
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

#include "cli/record.hpp"

#include <sstream>

namespace lorentz::cli {
namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

bool all_scalars(const Json& array) {
  for (const auto& element : array) {
    if (element.is_structured()) return false;
  }
  return true;
}

void flatten(const std::string& key, const Json& value, std::ostream& os) {
  if (value.is_object()) {
    for (const auto& [name, child] : value.items()) {
      flatten(key.empty() ? name : key + "." + name, child, os);
    }
    return;
  }
  if (value.is_array()) {
    if (all_scalars(value)) {
      os << key << ":";
      for (const auto& element : value) os << ' ' << scalar_text(element);
      os << '\n';
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(key + "[" + std::to_string(i) + "]", value[i], os);
    }
    return;
  }
  os << key << ": " << scalar_text(value) << '\n';
}

}  // namespace

Json exact_value(const Rational& value, int digits) {
  return Json{{"exact", value.to_string()},
              {"decimal", value.to_decimal(digits)}};
}

Json exact_value(const QuadraticSurd& value, int digits) {
  return Json{{"exact", value.to_string()},
              {"decimal", value.to_decimal(digits)}};
}

Json triple_json(const Triple& t) {
  return Json{{"m", t.m().get_str()},
              {"n", t.n().get_str()},
              {"p", t.p().get_str()}};
}

std::string render_text(const Json& record) {
  std::ostringstream os;
  flatten("", record, os);
  return os.str();
}

}  // namespace lorentz::cli
