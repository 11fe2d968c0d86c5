#include "sgk/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace sgk {

std::size_t thread_count() {
    if (const char* env = std::getenv("SGK_THREADS")) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
        if (ec == std::errc{} && *ptr == '\0' && n > 0) return n;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

std::size_t chunk_count_for(std::size_t n, bool parallel) {
    if (!parallel || n == 0) return n == 0 ? 0 : 1;
    return std::clamp<std::size_t>(thread_count(), 1, n);
}

void parallel_chunks(std::size_t n, std::size_t chunk_count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (chunk_count <= 1) {
        if (n > 0) body(0, 0, n);
        return;
    }
    const std::size_t step = (n + chunk_count - 1) / chunk_count;
    std::vector<std::exception_ptr> errors(chunk_count);
    {
        std::vector<std::jthread> workers;
        workers.reserve(chunk_count);
        for (std::size_t c = 0; c < chunk_count; ++c) {
            std::size_t begin = std::min(n, c * step);
            std::size_t end = std::min(n, begin + step);
            workers.emplace_back([&, c, begin, end] {
                try {
                    body(c, begin, end);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace detail
}  // namespace sgk
