#pragma once

namespace hcurve {

/// Per-sample kernels run either as a plain loop (the reference path) or as an OpenMP loop.
enum class Execution { serial, parallel };

}  // namespace hcurve
