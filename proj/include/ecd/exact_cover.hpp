#pragma once

// Dancing-links exact cover (Algorithm X) with secondary items.
//
// Primary items must be covered exactly once; secondary items at most once.
// Branching picks the primary item with the fewest remaining options, ties
// going to the lowest item index.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ecd {

class ExactCover {
 public:
  ExactCover(std::size_t primary_items, std::size_t secondary_items);

  /// Items are 0-based: primary in [0, primary), secondary in [primary, primary + secondary).
  /// Returns the option id.
  std::size_t add_option(std::span<const std::size_t> items);

  [[nodiscard]] std::size_t option_count() const noexcept { return option_count_; }
  [[nodiscard]] std::size_t primary_count() const noexcept { return primary_; }

  enum class Outcome { Complete, Stopped, TimedOut };

  struct Stats {
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
  };

  struct Control {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Root branches (by position in the chosen item's option list) to explore; all when empty.
    std::function<bool(std::size_t)> root_filter;
    /// Polled periodically; set by another worker to stop this one.
    const std::atomic<bool>* stop = nullptr;
  };

  /// Calls on_solution with the chosen option ids (in choice order); the
  /// callback returns false to stop the search.
  Outcome search(const std::function<bool(const std::vector<std::size_t>&)>& on_solution, const Control& control,
                 Stats& stats);

 private:
  void cover(std::size_t c);
  void uncover(std::size_t c);
  bool recurse(std::size_t depth);

  std::size_t primary_;
  std::size_t items_;
  std::size_t option_count_ = 0;
  // node arrays; nodes [0, items_] are headers with 0 the root
  std::vector<std::size_t> left_, right_, up_, down_, column_, row_;
  std::vector<std::size_t> size_;

  // per-search state
  std::vector<std::size_t> chosen_;
  const std::function<bool(const std::vector<std::size_t>&)>* on_solution_ = nullptr;
  const Control* control_ = nullptr;
  Stats* stats_ = nullptr;
  Outcome outcome_ = Outcome::Complete;
};

}  // namespace ecd
