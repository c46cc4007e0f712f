#include <algorithm>
#include <stdexcept>

#include "regtrace/census.hpp"

namespace regtrace {

int primitive_root_length(std::span<const Vertex> word) {
  const std::size_t n = word.size();
  if (n == 0) throw std::invalid_argument("primitive_root_length of an empty word");
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return static_cast<int>(d);
  }
  return static_cast<int>(n);
}

std::vector<Vertex> canonical_rotation(std::span<const Vertex> word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex a = word[(r + i) % n];
      const Vertex b = word[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<Vertex> out(word.begin() + static_cast<std::ptrdiff_t>(best), word.end());
  out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(best));
  return out;
}

bool is_cyclically_reduced(std::span<const Vertex> word) {
  const std::size_t n = word.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] == word[(i + 2) % n]) return false;
  }
  return true;
}

GeodesicClass make_geodesic_class(std::span<const Vertex> word) {
  GeodesicClass gc;
  gc.canonical_word = canonical_rotation(word);
  gc.length = static_cast<int>(word.size());
  gc.lambda = primitive_root_length(gc.canonical_word);
  gc.is_primitive = gc.lambda == gc.length;
  return gc;
}

namespace {

HomotopyClass classify(std::span<const Vertex> reduced) {
  if (reduced.empty()) return Contractible{};
  return make_geodesic_class(reduced);
}

HomotopyClass reduce_with_stack(std::span<const Vertex> word) {
  if (word.size() <= 1) return Contractible{};

  // Free reduction of the linear walk w_0 ... w_(n-1) w_0.
  std::vector<Vertex> stack;
  stack.reserve(word.size() + 1);
  auto feed = [&stack](Vertex x) {
    if (stack.size() >= 2 && stack[stack.size() - 2] == x) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  };
  for (Vertex x : word) feed(x);
  feed(word.front());

  // stack = [w_0, ..., w_0]; drop the closing copy and trim matching ends.
  std::size_t lo = 0;
  std::size_t hi = stack.size() - 1;  // exclusive
  while (hi - lo >= 2 && stack[hi - 1] == stack[lo + 1]) {
    ++lo;
    --hi;
  }
  if (hi - lo < 2) return Contractible{};
  return classify(std::span<const Vertex>(stack).subspan(lo, hi - lo));
}

HomotopyClass reduce_naively(std::span<const Vertex> word, bool leftmost) {
  std::vector<Vertex> w(word.begin(), word.end());
  while (w.size() >= 2) {
    const std::size_t n = w.size();
    std::size_t found = n;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = leftmost ? k : n - 1 - k;
      if (w[i] == w[(i + 2) % n]) {
        found = i;
        break;
      }
    }
    if (found == n) break;
    // v, x, v -> v: drop x and the second v.
    std::size_t a = (found + 1) % n;
    std::size_t b = (found + 2) % n;
    if (a < b) std::swap(a, b);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(a));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(b));
  }
  if (w.size() < 2) w.clear();
  return classify(w);
}

}  // namespace

HomotopyClass cyclic_reduce(std::span<const Vertex> word, ReductionOrder order) {
  switch (order) {
    case ReductionOrder::Stack: return reduce_with_stack(word);
    case ReductionOrder::LeftmostFirst: return reduce_naively(word, true);
    case ReductionOrder::RightmostFirst: return reduce_naively(word, false);
  }
  throw std::invalid_argument("unknown reduction order");
}

}  // namespace regtrace
