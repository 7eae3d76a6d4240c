#include "casimir/parallel.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

namespace casimir {

struct ThreadPool::Impl {
  std::vector<std::thread> workers;
  std::deque<std::function<void()>> queue;
  std::mutex mtx;
  std::condition_variable cv_work;
  std::condition_variable cv_done;
  std::size_t pending = 0;
  bool stopping = false;
  std::exception_ptr first_error;

  void worker_loop() {
    for (;;) {
      std::function<void()> job;
      {
        std::unique_lock lk(mtx);
        cv_work.wait(lk, [this] { return stopping || !queue.empty(); });
        if (stopping && queue.empty()) return;
        job = std::move(queue.front());
        queue.pop_front();
      }
      try {
        job();
      } catch (...) {
        std::lock_guard lk(mtx);
        if (!first_error) first_error = std::current_exception();
      }
      {
        std::lock_guard lk(mtx);
        if (--pending == 0) cv_done.notify_all();
      }
    }
  }
};

ThreadPool::ThreadPool(unsigned threads) : impl_(new Impl) {
  if (threads < 1) threads = 1;
  if (threads > 1) {
    impl_->workers.reserve(threads);
    for (unsigned i = 0; i < threads; ++i)
      impl_->workers.emplace_back([this] { impl_->worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lk(impl_->mtx);
    impl_->stopping = true;
  }
  impl_->cv_work.notify_all();
  for (auto& w : impl_->workers) w.join();
  delete impl_;
}

unsigned ThreadPool::size() const {
  return impl_->workers.empty() ? 1u
                                : static_cast<unsigned>(impl_->workers.size());
}

void ThreadPool::run_batch(const std::vector<std::function<void()>>& jobs) {
  if (impl_->workers.empty()) {
    for (const auto& j : jobs) j();
    return;
  }
  {
    std::lock_guard lk(impl_->mtx);
    impl_->first_error = nullptr;
    impl_->pending += jobs.size();
    for (const auto& j : jobs) impl_->queue.push_back(j);
  }
  impl_->cv_work.notify_all();
  std::exception_ptr err;
  {
    std::unique_lock lk(impl_->mtx);
    impl_->cv_done.wait(lk, [this] { return impl_->pending == 0; });
    err = impl_->first_error;
    impl_->first_error = nullptr;
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace casimir
