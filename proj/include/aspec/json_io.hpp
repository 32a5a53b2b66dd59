// Copyright 2026 The aspec authors
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
//
// JSON encodings of the wire formats: depth profiles, groupoids, spectra.

#ifndef ASPEC_JSON_IO_HPP_
#define ASPEC_JSON_IO_HPP_

#include <json.hpp>

#include "aspec/bracketing.hpp"
#include "aspec/groupoid.hpp"
#include "aspec/spectrum.hpp"

namespace aspec {

/// {"depths":[...], "left":[...], "right":[...], "fmpf":["00", ...]}
nlohmann::json to_json(const DepthProfile& p);

/// {"size": g, "table": [[...], ...]} with table[a][b] = a o b.
nlohmann::json to_json(const Groupoid& g);
Groupoid groupoid_from_json(const nlohmann::json& j);

/// {"s":[1,1,2,...], "catalan_prefix": n, "stabilized_at": n|null}, plus
/// "witnesses" when they were collected.
nlohmann::json to_json(const Spectrum& s);

}  // namespace aspec

#endif  // ASPEC_JSON_IO_HPP_
