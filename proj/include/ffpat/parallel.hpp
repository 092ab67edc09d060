#ifndef FFPAT_PARALLEL_HPP
#define FFPAT_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>

namespace ffpat {

/// 0 selects the OpenMP default.
unsigned resolve_workers(unsigned workers);

/// Contiguous block b of `blocks` equal-as-possible blocks of [0, total).
inline void block_range(std::uint64_t total, std::uint64_t blocks, std::uint64_t b, std::uint64_t& begin,
                        std::uint64_t& end) {
  const std::uint64_t base = total / blocks, extra = total % blocks;
  begin = b * base + (b < extra ? b : extra);
  end = begin + base + (b < extra ? 1 : 0);
}

/// Keeps the exception raised at the lowest key inside a parallel region,
/// so that exceptions never cross the region boundary.
class FirstError {
 public:
  template <class Fn>
  void guard(std::uint64_t key, Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (key < key_) {
        key_ = key;
        err_ = std::current_exception();
      }
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::uint64_t key_ = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr err_;
};

}  // namespace ffpat

#endif  // FFPAT_PARALLEL_HPP
