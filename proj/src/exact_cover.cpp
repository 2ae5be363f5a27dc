#include "ecd/exact_cover.hpp"

#include <stdexcept>

namespace ecd {

ExactCover::ExactCover(std::size_t primary_items, std::size_t secondary_items)
    : primary_(primary_items), items_(primary_items + secondary_items) {
  const std::size_t headers = items_ + 1;
  left_.resize(headers);
  right_.resize(headers);
  up_.resize(headers);
  down_.resize(headers);
  column_.resize(headers);
  row_.assign(headers, static_cast<std::size_t>(-1));
  size_.assign(headers, 0);
  for (std::size_t h = 0; h < headers; ++h) {
    up_[h] = down_[h] = column_[h] = h;
    left_[h] = right_[h] = h;
  }
  // root list holds primary items 1..primary in order; secondary headers stay self-linked
  std::size_t prev = 0;
  for (std::size_t h = 1; h <= primary_; ++h) {
    right_[prev] = h;
    left_[h] = prev;
    prev = h;
  }
  right_[prev] = 0;
  left_[0] = prev;
}

std::size_t ExactCover::add_option(std::span<const std::size_t> items) {
  if (items.empty()) throw std::invalid_argument("exact cover option without items");
  const std::size_t id = option_count_++;
  std::size_t first = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k] >= items_) throw std::out_of_range("exact cover item out of range");
    const std::size_t col = items[k] + 1;
    const std::size_t node = left_.size();
    left_.push_back(node);
    right_.push_back(node);
    column_.push_back(col);
    row_.push_back(id);
    // append at bottom of column
    up_.push_back(up_[col]);
    down_.push_back(col);
    down_[up_[col]] = node;
    up_[col] = node;
    ++size_[col];
    if (k == 0) {
      first = node;
    } else {
      left_[node] = left_[first];
      right_[node] = first;
      right_[left_[first]] = node;
      left_[first] = node;
    }
  }
  return id;
}

void ExactCover::cover(std::size_t c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::size_t i = down_[c]; i != c; i = down_[i]) {
    for (std::size_t j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
  }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = up_[c]; i != c; i = up_[i]) {
    for (std::size_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

ExactCover::Outcome ExactCover::search(const std::function<bool(const std::vector<std::size_t>&)>& on_solution,
                                       const Control& control, Stats& stats) {
  chosen_.clear();
  on_solution_ = &on_solution;
  control_ = &control;
  stats_ = &stats;
  outcome_ = Outcome::Complete;
  recurse(0);
  return outcome_;
}

// Returns false when the search must unwind (stopped or timed out).
bool ExactCover::recurse(std::size_t depth) {
  ++stats_->nodes;
  if (depth > stats_->max_depth) stats_->max_depth = depth;
  if ((stats_->nodes & 1023U) == 0) {
    if (control_->stop && control_->stop->load(std::memory_order_relaxed)) {
      outcome_ = Outcome::Stopped;
      return false;
    }
    if (control_->deadline && std::chrono::steady_clock::now() > *control_->deadline) {
      outcome_ = Outcome::TimedOut;
      return false;
    }
  }
  if (right_[0] == 0) {
    if (!(*on_solution_)(chosen_)) {
      outcome_ = Outcome::Stopped;
      return false;
    }
    return true;
  }
  std::size_t best = right_[0];
  for (std::size_t c = right_[best]; c != 0; c = right_[c]) {
    if (size_[c] < size_[best]) best = c;
  }
  if (size_[best] == 0) return true;

  cover(best);
  std::size_t branch = 0;
  bool keep_going = true;
  for (std::size_t r = down_[best]; r != best && keep_going; r = down_[r], ++branch) {
    if (depth == 0 && control_->root_filter && !control_->root_filter(branch)) continue;
    chosen_.push_back(row_[r]);
    for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
    keep_going = recurse(depth + 1);
    for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
    chosen_.pop_back();
  }
  uncover(best);
  return keep_going;
}

}  // namespace ecd
