#pragma once

#include "beztate/report.hpp"

namespace beztate {

/// Golden fixtures: power Bezoutians, the complete intersection (x_0^2, x_1^2)
/// and the basepoint-free net (x^2, y^2, xy), plus a small full window.
Report run_selftest();

}  // namespace beztate
