#pragma once

#include <cstdint>
#include <cstring>

namespace znsum::detail {

constexpr std::uint32_t word_count(std::uint32_t n) { return (n + 63u) / 64u; }

/// Mask selecting the valid bits of the top word of an n-bit vector.
constexpr std::uint64_t top_word_mask(std::uint32_t n) {
  std::uint32_t rem = n % 64u;
  return rem == 0 ? ~0ull : ((1ull << rem) - 1);
}

/// dst = src << s over an n-bit field, bits shifted past n are dropped.
/// dst and src must not alias. s < n.
inline void shl_bits(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t w,
                     std::uint32_t n, std::uint32_t s) {
  const std::uint32_t ws = s / 64u, bs = s % 64u;
  for (std::uint32_t i = w; i-- > 0;) {
    std::uint64_t v = 0;
    if (i >= ws) {
      v = src[i - ws] << bs;
      if (bs != 0 && i > ws) v |= src[i - ws - 1] >> (64u - bs);
    }
    dst[i] = v;
  }
  dst[w - 1] &= top_word_mask(n);
}

/// dst = src >> s over an n-bit field. dst and src must not alias. s < n.
inline void shr_bits(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t w,
                     std::uint32_t s) {
  const std::uint32_t ws = s / 64u, bs = s % 64u;
  for (std::uint32_t i = 0; i < w; ++i) {
    std::uint64_t v = 0;
    if (i + ws < w) {
      v = src[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < w) v |= src[i + ws + 1] << (64u - bs);
    }
    dst[i] = v;
  }
}

/// dst = src rotated left by s within n bits (bit r of src lands at (r+s) mod n).
/// dst and src must not alias. Requires s < n.
inline void rotl_bits(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t w,
                      std::uint32_t n, std::uint32_t s) {
  if (s == 0) {
    std::memcpy(dst, src, w * sizeof(std::uint64_t));
    return;
  }
  shl_bits(dst, src, w, n, s);
  // fold in the wrapped high bits: src >> (n - s)
  const std::uint32_t t = n - s;
  const std::uint32_t ws = t / 64u, bs = t % 64u;
  for (std::uint32_t i = 0; i < w; ++i) {
    std::uint64_t v = 0;
    if (i + ws < w) {
      v = src[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < w) v |= src[i + ws + 1] << (64u - bs);
    }
    dst[i] |= v;
  }
  dst[w - 1] &= top_word_mask(n);
}

}  // namespace znsum::detail
