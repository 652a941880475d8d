#pragma once

#include <cstddef>
#include <functional>

namespace vsasm {

// Worker count used when a caller passes 0: VSASM_THREADS if set, else the
// hardware concurrency.
int default_threads();
void set_default_threads(int n);

// Runs body(block) for block in [0, blocks) on up to `threads` workers. Each
// block is handled by exactly one worker; callers write results into
// per-block slots and merge them in block order.
void parallel_blocks(std::size_t blocks, int threads, const std::function<void(std::size_t)>& body);

}  // namespace vsasm
