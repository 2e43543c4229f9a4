#pragma once

// Worker-count control for the OpenMP kernels.

namespace ncflab {

/// Current upper bound on OpenMP workers used by the parallel kernels.
int worker_count();

/// Bound the worker count; values < 1 reset to the OpenMP default.
void set_worker_count(int workers);

/// Apply NCFLAB_THREADS if it is set to a positive integer. Returns the bound in effect.
int configure_workers_from_env();

}  // namespace ncflab
