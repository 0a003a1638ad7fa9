/*
   Copyright 2026 The lietype Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIETYPE_IO_HPP
#define LIETYPE_IO_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lietype/errors.hpp"

namespace lietype {

using Json = nlohmann::json;

inline constexpr int kJsonSchema = 1;

enum class Format { Text, Json, Tsv };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    throw UsageError("unknown output format '" + s + "'");
}

/// rounds to 1e-9 and clears negative zero so that output is stable
inline double stable_double(double x) {
    double r = std::round(x * 1e9) / 1e9;
    return r == 0.0 ? 0.0 : r;
}

inline Json complex_json(std::complex<double> z) {
    const double re = stable_double(z.real()), im = stable_double(z.imag());
    if (im == 0.0 && re == std::round(re)) return static_cast<long long>(re);
    return Json::array({re, im});
}

inline std::string format_double(double x) {
    x = stable_double(x);
    if (x == std::round(x) && std::abs(x) < 1e15) return std::to_string(static_cast<long long>(x));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::string complex_string(std::complex<double> z) {
    const double re = stable_double(z.real()), im = stable_double(z.imag());
    if (im == 0.0) return format_double(re);
    if (re == 0.0) return format_double(im) + "i";
    return format_double(re) + (im < 0 ? "-" : "+") + format_double(std::abs(im)) + "i";
}

/// top-level document with the schema version and the command name
inline Json json_document(const std::string& command) {
    Json j;
    j["schema"] = kJsonSchema;
    j["command"] = command;
    return j;
}

inline void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

inline void write_tsv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
        os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

}  // namespace lietype

#endif
