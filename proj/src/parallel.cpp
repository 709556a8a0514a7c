#include "hdx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hdx {

unsigned thread_count() {
    unsigned requested = 0;
    if (const char* env = std::getenv("HDX_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            requested = static_cast<unsigned>(v);
        }
    }
    if (requested == 0) {
        requested = std::max(1U, std::thread::hardware_concurrency());
    }
    return requested;
}

unsigned default_chunks(std::uint64_t total) {
    // Small problems are not worth the thread start-up.
    if (total < (1ULL << 14)) {
        return 1;
    }
    return 64;
}

void for_each_chunk(std::uint64_t total, unsigned chunks,
                    const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    chunks = std::max(1U, chunks);
    auto bounds = [&](unsigned c) {
        return total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    };

    const unsigned workers = std::min(thread_count(), chunks);
    if (workers <= 1) {
        for (unsigned c = 0; c < chunks; ++c) {
            body(c, bounds(c), bounds(c + 1));
        }
        return;
    }

    std::atomic<unsigned> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (unsigned c = next++; c < chunks; c = next++) {
                    try {
                        body(c, bounds(c), bounds(c + 1));
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace hdx
