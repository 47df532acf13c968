#pragma once

#include <cstdint>

#include "diagcube/report.hpp"

namespace diagcube {

// The invariant suites behind the `selftest` subcommand: field axioms,
// gcd/squarefree re-multiplication, cube-test/specialization agreement,
// tower inversion, parse/print round-trip.
Report run_selftest(std::uint64_t seed);

} // namespace diagcube
