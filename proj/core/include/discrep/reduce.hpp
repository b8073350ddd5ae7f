#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <type_traits>
#include <vector>

namespace discrep {

// Kahan-Neumaier compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  void add(const KahanSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Number of worker threads used by parallel kernels. Defaults to
// hardware_concurrency; a value of 1 disables threading entirely.
// Results never depend on this setting: work is split into fixed-size
// blocks and block partials are always folded in block order.
int thread_count();
void set_thread_count(int n);

namespace detail {
void run_blocks(std::size_t n_blocks, void* ctx, void (*fn)(void*, std::size_t));
}

// Partition [0, n) into fixed blocks of `block_size` items, evaluate
// fn(block_begin, block_end) for each, and return the per-block results
// indexed by block. The block layout is independent of the thread count.
template <typename T, typename Fn>
std::vector<T> parallel_blocks(std::size_t n, std::size_t block_size, Fn&& fn) {
  std::size_t n_blocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
  std::vector<T> out(n_blocks);
  using FnT = std::remove_reference_t<Fn>;
  struct Ctx {
    std::vector<T>* out;
    FnT* fn;
    std::size_t n, block_size;
  } ctx{&out, std::addressof(fn), n, block_size};
  detail::run_blocks(n_blocks, &ctx, [](void* p, std::size_t b) {
    auto& c = *static_cast<Ctx*>(p);
    std::size_t lo = b * c.block_size;
    std::size_t hi = lo + c.block_size < c.n ? lo + c.block_size : c.n;
    (*c.out)[b] = (*c.fn)(lo, hi);
  });
  return out;
}

// Deterministic compensated sum of fn(lo, hi) -> KahanSum block partials.
template <typename Fn>
double parallel_compensated_sum(std::size_t n, std::size_t block_size, Fn&& fn) {
  auto partials = parallel_blocks<KahanSum>(n, block_size, fn);
  KahanSum total;
  for (const auto& part : partials) total.add(part);
  return total.value();
}

}  // namespace discrep
