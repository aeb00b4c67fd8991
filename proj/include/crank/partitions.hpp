#pragma once

// Brute-force partition enumeration and per-partition statistics. This is the
// combinatorial oracle every generating-function result is checked against.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "crank/bivariate.hpp"
#include "crank/error.hpp"

namespace crank {

inline constexpr int kEnumerationCap = 80;

class Partition {
 public:
  Partition() = default;

  /// Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class PartitionGenerator;
  std::vector<int> parts_;
  int n_ = 0;
};

/// Yields every partition of n exactly once, in increasing lexicographic order
/// of the part sequence: 1^n first, (n) last.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    if (n > kEnumerationCap) throw ResourceError("partition enumeration is capped at n = 80");
    current_.parts_.assign(static_cast<std::size_t>(n), 1);
    current_.n_ = n;
  }

  const Partition& current() const noexcept { return current_; }
  bool done() const noexcept { return done_; }

  void advance() {
    auto& p = current_.parts_;
    // Rightmost position that can grow by one unit taken from the tail.
    int tail = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (tail >= 1 && (i == 0 || p[i] < p[i - 1])) {
        ++p[i];
        p.resize(i + 1);
        p.insert(p.end(), static_cast<std::size_t>(tail - 1), 1);
        return;
      }
      tail += p[i];
    }
    done_ = true;
  }

 private:
  Partition current_;
  bool done_ = false;
};

class PartitionRange {
 public:
  explicit PartitionRange(int n) : n_(n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    if (n > kEnumerationCap) throw ResourceError("partition enumeration is capped at n = 80");
  }

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n) : gen_(std::make_shared<PartitionGenerator>(n)) {}

    const Partition& operator*() const { return gen_->current(); }
    const Partition* operator->() const { return &gen_->current(); }
    iterator& operator++() {
      gen_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.gen_ || it.gen_->done(); }

   private:
    std::shared_ptr<PartitionGenerator> gen_;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  int n_;
};

inline PartitionRange partitions_of(int n) { return PartitionRange(n); }

struct PartitionStats {
  int rank = 0;
  int crank = 0;
  int durfee = 0;
  int smallest_part_count = 0;
  int string_count = 0;
};

namespace detail {

inline std::vector<int> multiplicities(const Partition& lambda) {
  std::vector<int> mult(static_cast<std::size_t>(lambda.largest()) + 2, 0);
  for (int part : lambda.parts()) ++mult[static_cast<std::size_t>(part)];
  return mult;
}

}  // namespace detail

/// Number of even and odd strings. A run starting at v is v, v+1, ..., v+L-1 all
/// present with v+L absent. Odd string: v = 2k+1 occurring once, L >= 2k+1.
/// Even string: v = 2k with 2k-1 absent, L odd and L >= 2k-1.
inline int string_count(const Partition& lambda) {
  if (lambda.empty()) return 0;
  const auto mult = detail::multiplicities(lambda);
  const int top = lambda.largest();
  auto present = [&](int v) { return v >= 1 && v <= top && mult[static_cast<std::size_t>(v)] > 0; };
  int count = 0;
  for (int v = 1; v <= top; ++v) {
    if (!present(v)) continue;
    int run = 0;
    while (present(v + run)) ++run;
    if (v % 2 == 1) {
      if (mult[static_cast<std::size_t>(v)] == 1 && run >= v) ++count;
    } else {
      if (!present(v - 1) && run % 2 == 1 && run >= v - 1) ++count;
    }
  }
  return count;
}

inline int crank_of(const Partition& lambda) {
  if (lambda.empty()) return 0;
  int ones = 0;
  for (int part : lambda.parts()) ones += part == 1;
  if (ones == 0) return lambda.largest();
  int above = 0;
  for (int part : lambda.parts()) above += part > ones;
  return above - ones;
}

inline PartitionStats stats_of(const Partition& lambda) {
  PartitionStats s;
  if (lambda.empty()) return s;
  const auto& parts = lambda.parts();
  s.rank = lambda.largest() - static_cast<int>(parts.size());
  s.crank = crank_of(lambda);
  for (std::size_t i = 0; i < parts.size() && parts[i] >= static_cast<int>(i) + 1; ++i) s.durfee = static_cast<int>(i) + 1;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == lambda.smallest(); ++it) ++s.smallest_part_count;
  s.string_count = string_count(lambda);
  return s;
}

using Histogram = std::map<int, std::int64_t>;

/// Histogram of the raw combinatorial crank or rank over partitions of n. For the
/// crank at n = 1 this is {-1: 1}; convention reconciliation happens in the moment engine.
inline Histogram brute_distribution(int n, Statistic kind) {
  Histogram h;
  for (const auto& lambda : partitions_of(n)) {
    const auto s = stats_of(lambda);
    ++h[kind == Statistic::crank ? s.crank : s.rank];
  }
  return h;
}

struct BruteAggregates {
  std::int64_t spt = 0;
  std::int64_t ospt_strings = 0;
  std::int64_t durfee_sum = 0;
  std::int64_t count = 0;  // p(n)
};

inline BruteAggregates brute_aggregates(int n) {
  BruteAggregates a;
  for (const auto& lambda : partitions_of(n)) {
    const auto s = stats_of(lambda);
    a.spt += s.smallest_part_count;
    a.ospt_strings += s.string_count;
    a.durfee_sum += s.durfee;
    ++a.count;
  }
  return a;
}

inline void write_aggregates_csv(std::ostream& os, int nmax) {
  os << "N,spt,ospt_strings,durfee_sum,p\n";
  for (int n = 0; n <= nmax; ++n) {
    const auto a = brute_aggregates(n);
    os << n << ',' << a.spt << ',' << a.ospt_strings << ',' << a.durfee_sum << ',' << a.count << '\n';
  }
}

}  // namespace crank
