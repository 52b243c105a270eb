#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lvt/liouville/numbers.hpp"
#include "lvt/rmap/rational_map.hpp"

namespace lvt::cli {

/// Entry point of lvtool. argv[0] is the program name. Exit status: 0 when
/// every check passes, 1 on a certified failure, 2 on usage errors.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// "series:10:factorial", "series:2:list:1,2,3", "ell", "cf:0,9,11",
/// "strongcf:k", "strongcf:2", or the JSON forms {"series":{"base":..,
/// "schedule":..}}, {"cf":[..]}, {"strongcf":..}.
std::shared_ptr<ApproximableReal> parse_number(std::string_view text);

/// Map DSL ("theta*x") or {"num":[[..]..],"den":[[..]..]}.
RationalMap parse_map(std::string_view text, const FieldPtr& K);

/// "2..6", "1,3,5" or a single index.
std::vector<unsigned long> parse_k_range(std::string_view text);

/// Default refinement budget: LVT_REFINE_BUDGET if set, else 16.
unsigned default_refine_budget();

/// Short decimal rendering (6 significant digits), exact for any exponent range.
std::string approx(const Rational& x);

}  // namespace lvt::cli
