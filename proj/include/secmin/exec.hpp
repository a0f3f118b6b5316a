#pragma once

namespace secmin {

/// Selects the OpenMP kernel or the serial reference kernel. Both must give
/// identical results; the serial path exists for testing and benchmarks.
enum class Exec { serial, parallel };

}  // namespace secmin
