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

#pragma once

#include <string>

#include "json.hpp"
#include "lorentz/params.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/surd.hpp"

namespace lorentz::cli {

using Json = nlohmann::ordered_json;

// {"exact": "2/3", "decimal": "0.666..."}
Json exact_value(const Rational& value, int digits);
Json exact_value(const QuadraticSurd& value, int digits);

// {"m": "3", "n": "2", "p": "4"}; integers are always strings.
Json triple_json(const Triple& t);

// One "key: value" line per leaf. Nested keys are joined with '.', array
// elements are indexed as key[i], and arrays of scalars are written on one
// line separated by spaces.
std::string render_text(const Json& record);

}  // namespace lorentz::cli
