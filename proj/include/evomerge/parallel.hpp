#pragma once

#include <functional>

namespace evomerge {

// EVOMERGE_JOBS env var if set, else hardware concurrency (min 1).
int default_jobs();

// Runs fn(0..n-1) across up to `jobs` worker threads (jobs <= 0 picks
// default_jobs()). Blocks until all indices are done. fn must be safe to
// call concurrently for distinct indices; exceptions propagate to the
// caller.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace evomerge
