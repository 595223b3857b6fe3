#pragma once

namespace mlcif {

/// Worker count for parallel kernels: MLCIF_THREADS if set and positive,
/// otherwise the hardware concurrency. Always at least 1.
int thread_count();

/// Resolves an explicit request (0 = use thread_count()).
int resolve_threads(int requested);

}  // namespace mlcif
