#pragma once

#include <string>

#include "wallx/stability.hpp"

namespace wallx {

// Text forms used by the CLI and the C API. Rationals are "p" or
// "p/q"; eps-polynomials are sums of terms like "1", "-1/2", "e",
// "2e^3" with 'e' the formal infinitesimal; weights are comma
// separated eps-polynomials, or the keywords "plus"/"minus" for the
// two special weight families (which need the rank).
Rational parse_rational(const std::string& text);
EpsPoly parse_eps_poly(const std::string& text);
ParabolicWeight parse_weights(const std::string& text, long long rank);

}  // namespace wallx
