#include "mimetic/threads.hpp"

#include <atomic>
#include <cstdlib>

namespace mimetic {

namespace {

int env_thread_count() {
    const char* s = std::getenv("MIMETIC_THREADS");
    if (s == nullptr) return 1;
    char* end = nullptr;
    long n = std::strtol(s, &end, 10);
    if (end == s || n < 1) return 1;
    return static_cast<int>(n);
}

std::atomic<int>& count_slot() {
    static std::atomic<int> count{env_thread_count()};
    return count;
}

}  // namespace

int thread_count() { return count_slot().load(std::memory_order_relaxed); }

void set_thread_count(int n) {
    count_slot().store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

}  // namespace mimetic
