#include "radon/parallel.hpp"

namespace radon {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) { g_max_threads = n; }
int max_threads() { return g_max_threads; }

} // namespace radon
