#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Exit status: 0 on success, 1 on inconsistent evidence, domain errors, or an
 * inconclusive verdict under --strict, 2 on malformed input (bad flags,
 * unparsable numbers, bad descriptor files).
 */

#include <ostream>

namespace curvebound {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvebound
