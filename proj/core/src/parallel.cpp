#include "vsasm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace vsasm {

namespace {
std::atomic<int> g_default_threads{0};
// Nested calls from inside a worker run serially.
thread_local bool t_in_worker = false;
}

int default_threads() {
  int n = g_default_threads.load();
  if (n > 0) return n;
  if (const char* env = std::getenv("VSASM_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(int n) { g_default_threads.store(n); }

void parallel_blocks(std::size_t blocks, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 0) threads = default_threads();
  std::size_t workers = std::min<std::size_t>(blocks, static_cast<std::size_t>(threads));
  if (t_in_worker) workers = 1;
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(blocks);
  auto run = [&] {
    t_in_worker = true;
    while (true) {
      std::size_t b = next.fetch_add(1);
      if (b >= blocks) {
        t_in_worker = false;
        return;
      }
      try {
        body(b);
      } catch (...) {
        errors[b] = std::current_exception();
        next.store(blocks);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  // The lowest failing block is always claimed, so the reported error does
  // not depend on scheduling.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace vsasm
