#pragma once

namespace homlab {

/// Whether a kernel may split work across OpenMP threads. `serial` runs the
/// same algorithm on one thread and must produce identical results.
enum class Execution { serial, parallel };

/// Number of worker threads used by parallel kernels (0 = OpenMP default).
void set_jobs(int jobs);
int jobs();
/// True when called from inside an active parallel region.
bool in_parallel_region();

}  // namespace homlab
