#pragma once

namespace bentforge {

// Execution policy for the enumeration and transform kernels. Serial paths
// are straightforward reference implementations; Parallel paths partition
// the index space across OpenMP workers and merge with order-independent
// reductions, so both produce identical results.
enum class Exec { Serial, Parallel };

// Number of workers used by Parallel kernels: BENTFORGE_THREADS if set to a
// positive integer, otherwise the OpenMP default for this machine.
int worker_count();

}  // namespace bentforge
