// Copyright 2026 The piezoloss authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "piezoloss/units.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "piezoloss/errors.hpp"

namespace piezoloss::units {

namespace {

using SuffixTable = std::vector<std::pair<std::string_view, double>>;

const SuffixTable& table_for(Dimension dim)
{
    static const SuffixTable frequency{{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}};
    static const SuffixTable temperature{{"mK", 1e-3}, {"uK", 1e-6}, {"K", 1.0}};
    static const SuffixTable length{{"angstrom", 1e-10}, {"mm", 1e-3}, {"um", 1e-6},
                                    {"nm", 1e-9},        {"A", 1e-10}, {"m", 1.0}};
    static const SuffixTable area{{"mm2", 1e-6}, {"um2", 1e-12}, {"nm2", 1e-18},
                                  {"A2", 1e-20}, {"m2", 1.0}};
    static const SuffixTable volume{{"mm3", 1e-9}, {"um3", 1e-18}, {"nm3", 1e-27},
                                    {"A3", 1e-30}, {"m3", 1.0}};
    static const SuffixTable none{};
    switch (dim) {
    case Dimension::frequency: return frequency;
    case Dimension::temperature: return temperature;
    case Dimension::length: return length;
    case Dimension::area: return area;
    case Dimension::volume: return volume;
    case Dimension::dimensionless: return none;
    }
    return none;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

double parse_quantity(std::string_view text, Dimension dim)
{
    const std::string_view trimmed = trim(text);
    if (trimmed.empty())
        throw InvalidInputError("empty quantity");

    const std::string buf(trimmed);
    char* end = nullptr;
    const double value = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str() || !std::isfinite(value))
        throw InvalidInputError("malformed quantity '" + buf + "'");

    const std::string_view suffix = trim(std::string_view(end));
    if (suffix.empty())
        return value; // bare number: already SI

    for (const auto& [name, scale] : table_for(dim)) {
        if (suffix == name)
            return value * scale;
    }
    throw InvalidInputError("quantity '" + buf + "': unknown unit '" + std::string(suffix) +
                            "' (accepted: " + suffix_list(dim) + ")");
}

std::string suffix_list(Dimension dim)
{
    const auto& table = table_for(dim);
    if (table.empty())
        return "none";
    std::string out;
    for (const auto& [name, scale] : table) {
        (void)scale;
        if (!out.empty())
            out += ", ";
        out += name;
    }
    return out;
}

} // namespace piezoloss::units
