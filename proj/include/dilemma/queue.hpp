#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "dilemma/types.hpp"

namespace dilemma {

/// Priority structure over revisitable states. pop_min returns the entry
/// with the smallest selection score; ties break FIFO by insertion counter,
/// so pop order is a total order and fully deterministic. A node is owned
/// by exactly one entry, which makes double membership impossible by
/// construction.
///
/// The heap is hand-rolled (plain binary heap over a vector) so that entry
/// layout and pop behaviour do not depend on the standard library
/// implementation.
template <Problem P>
class DilemmaQueue {
 public:
  struct Entry {
    double score = 0.0;
    double gap = 0.0;  // f_best - f_second snapshot behind the score
    std::uint64_t counter = 0;
    SearchNode<P> node;
  };

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  /// Entries in unspecified (heap) order; for inspection and rank-based
  /// removal policies.
  const std::vector<Entry>& entries() const { return heap_; }

  void push(double score, double gap, SearchNode<P> node) {
    heap_.push_back(Entry{score, gap, next_counter_++, std::move(node)});
    sift_up(heap_.size() - 1);
  }

  Entry pop_min() { return pop_index(0); }

  /// Removes and returns the entry at position `i` of entries().
  Entry pop_index(std::size_t i) {
    Entry out = std::move(heap_[i]);
    if (i + 1 != heap_.size()) {
      heap_[i] = std::move(heap_.back());
      heap_.pop_back();
      if (!sift_down(i)) sift_up(i);
    } else {
      heap_.pop_back();
    }
    return out;
  }

 private:
  static bool before(const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.counter < b.counter;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      std::swap(heap_[i], heap_[parent]);
      i = parent;
    }
  }

  // Returns true if the element moved.
  bool sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    bool moved = false;
    while (true) {
      std::size_t smallest = i;
      const std::size_t left = 2 * i + 1;
      const std::size_t right = 2 * i + 2;
      if (left < n && before(heap_[left], heap_[smallest])) smallest = left;
      if (right < n && before(heap_[right], heap_[smallest])) smallest = right;
      if (smallest == i) return moved;
      std::swap(heap_[i], heap_[smallest]);
      i = smallest;
      moved = true;
    }
  }

  std::vector<Entry> heap_;
  std::uint64_t next_counter_ = 0;
};

}  // namespace dilemma
