#pragma once

#include <cstddef>
#include <utility>

namespace rcm {

/// Fixed-order pairwise reduction of term(lo), ..., term(hi-1). The bracketing
/// depends only on the index range, so results are bit-reproducible.
template <class Term>
auto pairwise_sum(std::size_t lo, std::size_t hi, Term&& term)
    -> decltype(term(std::size_t{0})) {
  if (hi - lo <= 8) {
    auto acc = term(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  auto left = pairwise_sum(lo, mid, term);
  auto right = pairwise_sum(mid, hi, term);
  left += right;
  return left;
}

/// Sum over term(0), ..., term(n-1); n must be at least 1.
template <class Term>
auto pairwise_sum(std::size_t n, Term&& term) -> decltype(term(std::size_t{0})) {
  return pairwise_sum(std::size_t{0}, n, std::forward<Term>(term));
}

}  // namespace rcm
