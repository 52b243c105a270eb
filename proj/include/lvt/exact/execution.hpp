#pragma once

namespace lvt {

/// Selects the OpenMP kernel or its serial reference. Both produce identical,
/// deterministically ordered results.
enum class Execution { Serial, Parallel };

}  // namespace lvt
