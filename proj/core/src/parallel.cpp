#include "isotri/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace isotri {

namespace {
std::atomic<int> g_default_threads{0};

int env_threads() {
    if (const char* s = std::getenv("ISOTRI_THREADS")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 0;
}
} // namespace

void set_default_threads(int n) { g_default_threads.store(n > 0 ? n : 0); }

int default_threads() {
    int v = g_default_threads.load();
    if (v > 0) return v;
    if (int e = env_threads(); e > 0) return e;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int effective_threads(int requested) {
    return requested > 0 ? requested : default_threads();
}

} // namespace isotri
