#pragma once

#include <functional>

namespace dynuq {

/// Worker cap for internal parallelism. Reads DYNUQ_THREADS once per process;
/// falls back to the hardware concurrency when unset or unparsable.
int max_threads();

/// Runs fn(i) for i in [begin, end) across up to max_threads() workers.
/// Indices are partitioned into contiguous chunks, so results written to
/// disjoint per-index storage are identical to a sequential run. Nested
/// calls from inside a worker execute sequentially.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

} // namespace dynuq
