#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace leibniz {

namespace detail {
inline std::atomic<std::size_t> &worker_override()
{
	static std::atomic<std::size_t> v{0};
	return v;
}
} // namespace detail

constexpr const char *worker_env_var = "LEIBNIZ_WORKERS";
constexpr std::size_t max_workers = 64;

/// Worker threads used by the enumeration kernels: the active override if
/// any, else $LEIBNIZ_WORKERS, else 1.
inline std::size_t worker_count()
{
	if (auto o = detail::worker_override().load())
		return o;
	if (const char *env = std::getenv(worker_env_var)) {
		char *end = nullptr;
		unsigned long v = std::strtoul(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
			return std::min<std::size_t>(v, max_workers);
	}
	return 1;
}

/// Overrides worker_count() for the lifetime of the object.
class ScopedWorkerCount
{
  public:
	explicit ScopedWorkerCount(std::size_t n) : prev_(detail::worker_override().exchange(std::clamp<std::size_t>(n, 1, max_workers))) {}
	~ScopedWorkerCount() { detail::worker_override().store(prev_); }
	ScopedWorkerCount(const ScopedWorkerCount &) = delete;
	ScopedWorkerCount &operator=(const ScopedWorkerCount &) = delete;

  private:
	std::size_t prev_;
};

/// Splits [0, count) into contiguous chunks, one per worker, and returns
/// fn(begin, end) per chunk in chunk order. Exceptions propagate from the
/// lowest-numbered failing chunk.
template <class F>
auto parallel_chunks(std::size_t count, F &&fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))>
{
	using R = decltype(fn(std::size_t{}, std::size_t{}));
	const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), count));
	std::vector<R> results(workers);
	if (workers == 1) {
		results[0] = fn(std::size_t{0}, count);
		return results;
	}
	std::vector<std::exception_ptr> errors(workers);
	{
		std::vector<std::jthread> threads;
		threads.reserve(workers);
		for (std::size_t w = 0; w < workers; ++w) {
			std::size_t begin = count * w / workers, end = count * (w + 1) / workers;
			threads.emplace_back([&, w, begin, end] {
				try {
					results[w] = fn(begin, end);
				} catch (...) {
					errors[w] = std::current_exception();
				}
			});
		}
	}
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
	return results;
}

} // namespace leibniz
