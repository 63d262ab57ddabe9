#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace heisgeo {

// Worker cap honoring the HEISGEO_THREADS environment variable.
inline int max_threads() {
    if (const char* env = std::getenv("HEISGEO_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace heisgeo
