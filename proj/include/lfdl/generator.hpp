#ifndef LFDL_GENERATOR_HPP
#define LFDL_GENERATOR_HPP

#include <cassert>
#include <coroutine>
#include <exception>
#include <utility>

namespace lfdl {

/// Minimal pull-based coroutine generator. Single-owner, resumable on the
/// owning thread only.
///
///   auto g = produce();
///   while (g.next()) consume(g.value());
template <typename T>
class [[nodiscard]] Generator {
 public:
  struct promise_type {
    const T* current = nullptr;
    std::exception_ptr error;

    Generator get_return_object() {
      return Generator(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(const T& value) noexcept {
      current = &value;
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  Generator() = default;
  Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      destroy();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() { destroy(); }

  /// Advances to the next yielded value; false once the stream is finished.
  bool next() {
    if (!handle_ || handle_.done()) return false;
    handle_.resume();
    if (handle_.done()) {
      if (handle_.promise().error) std::rethrow_exception(handle_.promise().error);
      return false;
    }
    return true;
  }

  const T& value() const {
    assert(handle_ && handle_.promise().current);
    return *handle_.promise().current;
  }

 private:
  explicit Generator(std::coroutine_handle<promise_type> h) : handle_(h) {}
  void destroy() {
    if (handle_) handle_.destroy();
  }

  std::coroutine_handle<promise_type> handle_;
};

}  // namespace lfdl

#endif
