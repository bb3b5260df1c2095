#include "schur/parallel.hpp"

namespace schur {
namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned default_threads() { return g_threads.load(); }

void set_default_threads(unsigned n) { g_threads = n == 0 ? std::max(1u, std::thread::hardware_concurrency()) : n; }

}  // namespace schur
