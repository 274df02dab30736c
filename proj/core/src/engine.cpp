#include "bschur/engine.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace bschur {

const MurphyBasis& murphy_engine(int n, const ParamSpec& p) {
  static std::mutex mu;
  static std::map<std::pair<int, ParamSpec>, std::shared_ptr<MurphyBasis>> pool;
  std::pair<int, ParamSpec> key{n, p};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = pool.find(key);
    if (it != pool.end()) return *it->second;
  }
  // build outside the lock; duplicate builds are harmless and rare
  auto built = std::make_shared<MurphyBasis>(n, p);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = pool.emplace(key, built);
  return *it->second;
}

void parallel_for(long count, const std::function<void(long)>& fn, int jobs) {
  if (count <= 0) return;
  if (jobs <= 1 || count == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&]() {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int nthreads = static_cast<int>(std::min<long>(jobs, count));
  threads.reserve(static_cast<size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

int default_jobs() {
  const char* env = std::getenv("BSCHUR_JOBS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace bschur
