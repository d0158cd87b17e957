// Copyright 2026 The spinclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

namespace spinclone::cli {

using Json = nlohmann::ordered_json;

/// %.17g, with non-finite values spelled "NaN", "inf", "-inf".
std::string format_number(double x);

/// Serializes like nlohmann::json::dump, except floating-point numbers use
/// 17 significant digits and non-finite numbers become null.
std::string dump_json(const Json& value, int indent = 2);

}  // namespace spinclone::cli
