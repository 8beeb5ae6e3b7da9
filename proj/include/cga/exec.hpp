#pragma once

namespace cga {

/// Selects the serial reference kernel or its OpenMP counterpart. Both must
/// produce identical results; the serial path exists for testing.
enum class Exec { Serial, Parallel };

}  // namespace cga
