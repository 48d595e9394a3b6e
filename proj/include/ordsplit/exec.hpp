#pragma once

namespace ordsplit {

// Selects the kernel flavour. `serial` is the reference implementation kept
// for testing; `parallel` runs the OpenMP kernel. Both return identical
// results for identical inputs.
enum class Exec { serial, parallel };

// Forwards to omp_set_num_threads; n <= 0 leaves the runtime default.
void set_thread_count(int n);

}  // namespace ordsplit
