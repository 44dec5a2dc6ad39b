#pragma once

#include <string>

#include <json.hpp>

#include "gimel/chain.hpp"
#include "gimel/filtration.hpp"

namespace gimel {

using Json = nlohmann::json;

GradedFreeComplex fixture_from_json(const Json& j);
Json fixture_to_json(const GradedFreeComplex& c);
GradedFreeComplex load_fixture(const std::string& path);
void save_fixture(const GradedFreeComplex& c, const std::string& path);

Json piecewise_to_json(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_json(const Json& j);

Json report_to_json(const GimelReport& r);
GimelReport report_from_json(const Json& j);
GimelReport load_report(const std::string& path);

// "t,value" rows at the breakpoints and at 100 uniform samples, values rendered
// with 12 decimals.
std::string plot_csv(const PiecewiseLinear& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
// Pretty-printed JSON with a trailing newline; key order is canonical.
std::string dump_json(const Json& j);

}  // namespace gimel
