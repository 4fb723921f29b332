#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace addlaw {

inline constexpr const char* kToolName = "addlaw";
inline constexpr const char* kToolVersion = "0.1.0";

// Error thrown on violated preconditions and failed contracts.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define ADDLAW_CHECK(cond, msg)                      \
  do {                                               \
    if (!(cond)) throw ::addlaw::error(msg);         \
  } while (0)

// Deterministic 64-bit PRNG (splitmix64). All randomness in the toolkit flows
// through explicitly seeded instances of this generator so that identical
// seeds reproduce identical runs on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) by rejection; n must be nonzero.
  uint64_t below(uint64_t n) {
    ADDLAW_CHECK(n != 0, "Rng::below: n must be nonzero");
    if ((n & (n - 1)) == 0) return next() & (n - 1);
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  bool coin() { return next() & 1; }

  // Derive an independent child generator (for sub-tasks that must not
  // perturb the parent stream).
  Rng fork() { return Rng(next() ^ 0xa5a5a5a5deadbeefULL); }

 private:
  uint64_t state_;
};

// Minimal SHA-256, used to fingerprint certificates. Returns lowercase hex.
std::string sha256_hex(const std::string& data);

// Runs fn(begin, end) over [0, n) split into contiguous chunks on `jobs`
// threads (jobs <= 1 or n small => serial). Chunk results are combined in
// chunk order, so the outcome is independent of scheduling; a worker
// exception is rethrown after all workers finish (earliest chunk wins).
template <class R, class MapChunk, class Combine>
R parallel_reduce(size_t n, unsigned jobs, R init, MapChunk map_chunk, Combine combine) {
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs == 1 || n < 1024) {
    if (n == 0) return init;
    R r = map_chunk(size_t{0}, n);
    return combine(std::move(init), std::move(r));
  }
  size_t nchunks = std::min<size_t>(jobs, n);
  std::vector<R> results(nchunks);
  std::vector<std::exception_ptr> errors(nchunks);
  std::vector<std::thread> threads;
  threads.reserve(nchunks);
  size_t per = n / nchunks, extra = n % nchunks, begin = 0;
  for (size_t c = 0; c < nchunks; ++c) {
    size_t len = per + (c < extra ? 1 : 0);
    size_t b = begin, e = begin + len;
    begin = e;
    threads.emplace_back([&results, &errors, c, b, e, &map_chunk] {
      try {
        results[c] = map_chunk(b, e);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
  R acc = std::move(init);
  for (auto& r : results) acc = combine(std::move(acc), std::move(r));
  return acc;
}

// Integer helpers.
inline uint64_t ipow_u64(uint64_t b, unsigned e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n);  // distinct primes, ascending
bool is_prime_u64(uint64_t n);

}  // namespace addlaw
