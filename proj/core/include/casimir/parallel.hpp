#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace casimir {

// Fixed-size fork-join worker pool. Results of map() are collected by index,
// so the outcome is independent of scheduling; determinism across thread
// counts is the caller's responsibility (fixed work decomposition).
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned size() const;

  // Runs jobs[i]() for all i and blocks until completion. The first exception
  // thrown by a job is rethrown here after the batch drains.
  void run_batch(const std::vector<std::function<void()>>& jobs);

  template <class R>
  std::vector<R> map(std::size_t n, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    std::vector<std::function<void()>> jobs;
    jobs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      jobs.push_back([&out, &fn, i] { out[i] = fn(i); });
    }
    run_batch(jobs);
    return out;
  }

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace casimir
