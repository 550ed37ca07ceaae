#pragma once

// Dense ranking of sorted multisets through the combinatorial number system.
//
// A sorted multiset a_0 <= a_1 <= ... <= a_{k-1} over [0, d) maps to the strictly
// increasing b_i = a_i + i over [0, d+k-1), whose colex rank is sum C(b_i, i+1).

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace surround {

class MultisetCodec {
 public:
  MultisetCodec() = default;

  // Multisets of size up to max_size over a domain of `domain` values.
  MultisetCodec(std::size_t domain, std::size_t max_size) : d_(domain), kmax_(max_size) {
    const std::size_t rows = domain + max_size + 1;
    binom_.assign(rows * (max_size + 2), 0);
    for (std::size_t n = 0; n < rows; ++n) {
      at(n, 0) = 1;
      for (std::size_t r = 1; r <= max_size + 1 && r <= n; ++r) {
        std::uint64_t x = at(n - 1, r - 1), y = at(n - 1, r);
        if (x > std::numeric_limits<std::uint64_t>::max() - y)
          throw std::overflow_error("multiset codec: binomial overflow");
        at(n, r) = x + y;
      }
    }
  }

  std::size_t domain() const { return d_; }
  std::size_t max_size() const { return kmax_; }

  std::uint64_t binom(std::size_t n, std::size_t r) const {
    if (r > n) return 0;
    return binom_[n * (kmax_ + 2) + r];
  }

  // Number of multisets of size k over the domain: C(d+k-1, k).
  std::uint64_t count(std::size_t k) const {
    if (k == 0) return 1;
    if (d_ == 0) return 0;
    return binom(d_ + k - 1, k);
  }

  std::uint64_t rank(std::span<const std::uint32_t> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + i, i + 1);
    return r;
  }

  void unrank(std::uint64_t r, std::size_t k, std::uint32_t* out) const {
    // Greedy from the largest coordinate: find the largest b with C(b, i+1) <= r.
    std::size_t hi = d_ + k - 1;
    for (std::size_t i = k; i-- > 0;) {
      std::size_t lo = i;  // C(i, i+1) = 0 <= r always
      std::size_t top = hi;  // exclusive
      while (top - lo > 1) {
        std::size_t mid = lo + (top - lo) / 2;
        if (binom(mid, i + 1) <= r)
          lo = mid;
        else
          top = mid;
      }
      r -= binom(lo, i + 1);
      out[i] = static_cast<std::uint32_t>(lo - i);
      hi = lo;
    }
  }

  std::vector<std::uint32_t> unrank(std::uint64_t r, std::size_t k) const {
    std::vector<std::uint32_t> out(k);
    unrank(r, k, out.data());
    return out;
  }

 private:
  std::uint64_t& at(std::size_t n, std::size_t r) { return binom_[n * (kmax_ + 2) + r]; }

  std::size_t d_ = 0;
  std::size_t kmax_ = 0;
  std::vector<std::uint64_t> binom_;
};

}  // namespace surround
