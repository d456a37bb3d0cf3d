#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace logdeg {

// Runs fn(chunk_index, begin, end) over a contiguous partition of [0, count)
// into at most `workers` chunks, one thread per chunk. The caller provides
// per-chunk result slots, so no synchronization is needed beyond join.
template <class Fn>
int parallel_chunks(std::size_t count, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    std::size_t nchunks = std::min<std::size_t>(workers, count ? count : 1);
    if (nchunks <= 1) {
        fn(0, std::size_t{0}, count);
        return 1;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(nchunks);
    std::size_t per = count / nchunks, extra = count % nchunks, begin = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t end = begin + per + (c < extra ? 1 : 0);
        threads.emplace_back([&fn, &errors, c, begin, end] {
            try {
                fn(static_cast<int>(c), begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return static_cast<int>(nchunks);
}

}  // namespace logdeg
