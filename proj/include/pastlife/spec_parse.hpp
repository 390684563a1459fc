#pragma once

#include <string>

#include "pastlife/distribution.hpp"

namespace pastlife {

/// Parses a distribution spec string into a law.
///
/// Grammar: pipeline stages separated by '|', applied left to right. Each
/// stage is whitespace-separated key=value pairs, optionally led by a bare
/// stage name:
///
///   family=uniform b=1
///   family=exponential lambda=0.5 | linear a=2 b=1
///   family=uniform b=1 | prhr a=3 | transform=linear a=2 b=0
///
/// The first stage must name a family (uniform b=, exponential lambda=,
/// power k=, weibull shape= [scale=]); later stages are transforms
/// (`linear a= b=`, `prhr a=`), written either bare or as transform=NAME.
/// Throws parse_error on any malformed input.
DistPtr parse_distribution_spec(const std::string& spec);

} // namespace pastlife
