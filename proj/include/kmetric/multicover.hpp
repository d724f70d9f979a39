#pragma once

// 0-1 set multicover: choose the fewest columns (vertices) such that every
// row holds at least `demand` chosen columns. The k-metric ILP is exactly
// this problem with one row per vertex pair.
//
// solve_exact runs in two phases:
//   1. branch-and-bound for the optimum value (greedy incumbent, counting
//      lower bound, most-constrained-row branching, optional parallel
//      subtrees sharing one atomic incumbent);
//   2. lexicographically smallest optimal column set, extracted by deciding
//      columns in ascending order with include-before-exclude feasibility
//      queries under budget = optimum. Sequential, so the witness does not
//      depend on the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kmetric/error.hpp"

namespace kmetric {

struct MulticoverInstance {
  int universe_size = 0;
  int demand = 0;
  std::vector<std::vector<int>> rows;  // each sorted, subset of [0, universe_size)

  bool feasible() const {
    return std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
      return static_cast<int>(r.size()) >= demand;
    });
  }

  friend bool operator==(const MulticoverInstance&, const MulticoverInstance&) = default;
};

struct SolverStats {
  long long nodes = 0;
  int rows = 0;    // rows left after dominance pruning
  int pruned = 0;  // rows removed by dominance pruning

  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

struct DimResult {
  int k = 0;
  std::optional<int> value;  // nullopt means infinite
  std::vector<int> basis;
  bool optimal = true;
  SolverStats stats;

  bool infinite() const noexcept { return !value.has_value(); }

  friend bool operator==(const DimResult&, const DimResult&) = default;
};

struct SolveOptions {
  int threads = 1;
  long long node_limit = 0;  // 0: unlimited; otherwise optimal=false on hitting it
  bool prune_dominated = true;
};

namespace detail {

class RowBits {
 public:
  explicit RowBits(int universe) : words_((universe + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool subset_of(const RowBits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Removes duplicate rows and every row that contains another row. With a
// uniform demand a superset row is satisfied whenever its subset is.
inline std::vector<std::vector<int>> prune_dominated_rows(std::vector<std::vector<int>> rows,
                                                          int universe) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<std::vector<int>> kept;
  std::vector<RowBits> kept_bits;
  for (auto& row : rows) {
    RowBits bits(universe);
    for (int c : row) bits.set(c);
    bool dominated = false;
    for (const auto& k : kept_bits)
      if (k.subset_of(bits)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    kept_bits.push_back(std::move(bits));
    kept.push_back(std::move(row));
  }
  return kept;
}

struct Problem {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;  // rows containing each column

  Problem(int n_, int k_, std::vector<std::vector<int>> rows_)
      : n(n_), k(k_), rows(std::move(rows_)), cols(n_) {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int c : rows[r]) cols[c].push_back(r);
  }
};

struct SharedBest {
  std::atomic<int> size;
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::vector<int> solution;
  long long node_limit = 0;
  bool first_only = false;  // decision mode: stop at the first solution

  explicit SharedBest(int initial) : size(initial) {}

  void offer(const std::vector<int>& candidate) {
    int s = static_cast<int>(candidate.size());
    std::lock_guard lock(mutex);
    if (s < size.load()) {
      size.store(s);
      solution = candidate;
    }
    if (first_only) stop.store(true);
  }
};

enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = -1 };

// Incremental DFS state over one Problem; decisions are undone in LIFO order.
class Search {
 public:
  explicit Search(const Problem& p)
      : p_(p),
        status_(p.n, kUndecided),
        cover_(p.rows.size(), 0),
        avail_(p.rows.size()),
        score_(p.n, 0) {
    for (std::size_t r = 0; r < p.rows.size(); ++r)
      avail_[r] = static_cast<int>(p.rows[r].size());
    unsatisfied_ = p.k > 0 ? static_cast<int>(p.rows.size()) : 0;
  }

  int chosen() const { return chosen_; }
  const std::vector<std::pair<int, bool>>& trail() const { return trail_; }
  std::int8_t status(int v) const { return status_[v]; }

  // Returns false when some row can no longer reach the demand. The state
  // is updated either way and must be undone by the caller.
  bool decide(int v, bool in) {
    status_[v] = in ? kIn : kOut;
    trail_.emplace_back(v, in);
    if (in) ++chosen_;
    bool ok = true;
    for (int r : p_.cols[v]) {
      --avail_[r];
      if (in) {
        if (++cover_[r] == p_.k) --unsatisfied_;
      } else if (cover_[r] + avail_[r] < p_.k) {
        ok = false;
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, in] = trail_.back();
      trail_.pop_back();
      for (int r : p_.cols[v]) {
        ++avail_[r];
        if (in && cover_[r]-- == p_.k) ++unsatisfied_;
      }
      if (in) --chosen_;
      status_[v] = kUndecided;
    }
  }

  std::vector<int> chosen_set() const {
    std::vector<int> out;
    for (int v = 0; v < p_.n; ++v)
      if (status_[v] == kIn) out.push_back(v);
    return out;
  }

  // Includes every undecided column of rows with zero slack, to a fixpoint.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < p_.rows.size(); ++r) {
        if (cover_[r] >= p_.k) continue;
        if (cover_[r] + avail_[r] < p_.k) return false;
        if (cover_[r] + avail_[r] == p_.k && avail_[r] > 0) {
          for (int c : p_.rows[r])
            if (status_[c] == kUndecided)
              if (!decide(c, true)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  struct Branch {
    int lower_bound = 0;  // additional columns needed, at least
    int vertex = -1;
  };

  // Counting bound over unsatisfied rows: the largest single deficit, and
  // the total deficit spread over the best-scoring column. Also picks the
  // branching column: inside the row with least slack (ties: larger
  // deficit, then lower index) the column hitting the most unsatisfied rows
  // (ties: lower index).
  Branch evaluate() {
    std::fill(score_.begin(), score_.end(), 0);
    long long total_deficit = 0;
    int max_deficit = 0;
    int best_row = -1, best_slack = std::numeric_limits<int>::max(), best_row_deficit = 0;
    for (int r = 0; r < static_cast<int>(p_.rows.size()); ++r) {
      int deficit = p_.k - cover_[r];
      if (deficit <= 0) continue;
      total_deficit += deficit;
      max_deficit = std::max(max_deficit, deficit);
      for (int c : p_.rows[r])
        if (status_[c] == kUndecided) ++score_[c];
      int slack = avail_[r] - deficit;
      if (slack < best_slack || (slack == best_slack && deficit > best_row_deficit)) {
        best_slack = slack;
        best_row = r;
        best_row_deficit = deficit;
      }
    }
    Branch b;
    if (best_row < 0) return b;
    int max_score = *std::max_element(score_.begin(), score_.end());
    int spread = static_cast<int>((total_deficit + max_score - 1) / max_score);
    b.lower_bound = std::max(max_deficit, spread);
    int best_score = -1;
    for (int c : p_.rows[best_row])
      if (status_[c] == kUndecided && score_[c] > best_score) {
        best_score = score_[c];
        b.vertex = c;
      }
    return b;
  }

  bool satisfied() const { return unsatisfied_ == 0; }

  void dfs(SharedBest& shared) {
    if (shared.stop.load(std::memory_order_relaxed)) return;
    long long count = shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared.node_limit > 0 && count > shared.node_limit) {
      shared.stop.store(true);
      aborted_ = true;
      return;
    }
    const std::size_t mark = trail_.size();
    if (!propagate() || chosen_ >= shared.size.load(std::memory_order_relaxed)) {
      undo_to(mark);
      return;
    }
    if (satisfied()) {
      shared.offer(chosen_set());
      undo_to(mark);
      return;
    }
    Branch b = evaluate();
    if (chosen_ + b.lower_bound >= shared.size.load(std::memory_order_relaxed)) {
      undo_to(mark);
      return;
    }
    const std::size_t branch_mark = trail_.size();
    if (decide(b.vertex, true)) dfs(shared);
    undo_to(branch_mark);
    if (decide(b.vertex, false)) dfs(shared);
    undo_to(mark);
  }

  // Expands the tree breadth-first (in DFS child order) until `target` open
  // nodes exist; returns their decision trails for independent replay.
  std::vector<std::vector<std::pair<int, bool>>> split(int target, SharedBest& shared) {
    std::vector<std::vector<std::pair<int, bool>>> frontier{{}}, next;
    while (static_cast<int>(frontier.size()) < target && !frontier.empty()) {
      next.clear();
      bool expanded = false;
      for (const auto& decisions : frontier) {
        undo_to(0);
        if (!replay(decisions) || !propagate()) continue;
        if (satisfied()) {
          shared.offer(chosen_set());
          continue;
        }
        Branch b = evaluate();
        if (chosen_ + b.lower_bound >= shared.size.load()) continue;
        auto base = trail_;
        for (bool in : {true, false}) {
          auto child = base;
          child.emplace_back(b.vertex, in);
          next.push_back(std::move(child));
        }
        expanded = true;
      }
      std::swap(frontier, next);
      if (!expanded) break;
    }
    undo_to(0);
    return frontier;
  }

  bool replay(const std::vector<std::pair<int, bool>>& decisions) {
    for (auto [v, in] : decisions)
      if (!decide(v, in)) return false;
    return true;
  }

  bool aborted() const { return aborted_; }

 private:
  const Problem& p_;
  std::vector<std::int8_t> status_;
  std::vector<int> cover_;
  std::vector<int> avail_;
  std::vector<int> score_;
  std::vector<std::pair<int, bool>> trail_;
  int unsatisfied_ = 0;
  int chosen_ = 0;
  bool aborted_ = false;
};

inline std::vector<int> greedy_cover(const Problem& p) {
  std::vector<int> cover(p.rows.size(), 0);
  std::vector<char> in(p.n, 0);
  std::vector<int> out;
  int unsatisfied = static_cast<int>(p.rows.size());
  while (unsatisfied > 0) {
    int best = -1, best_gain = 0;
    for (int v = 0; v < p.n; ++v) {
      if (in[v]) continue;
      int gain = 0;
      for (int r : p.cols[v])
        if (cover[r] < p.k) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    in[best] = 1;
    out.push_back(best);
    for (int r : p.cols[best])
      if (++cover[r] == p.k) --unsatisfied;
  }
  // Drop redundant picks, latest first.
  for (auto it = out.rbegin(); it != out.rend();) {
    int v = *it;
    bool needed = std::any_of(p.cols[v].begin(), p.cols[v].end(),
                              [&](int r) { return cover[r] <= p.k; });
    if (!needed) {
      for (int r : p.cols[v]) --cover[r];
      it = decltype(it)(out.erase(std::next(it).base()));
    } else {
      ++it;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Branch-and-bound for the minimum, starting from `incumbent`.
inline bool minimize(const Problem& p, SharedBest& shared, int threads) {
  if (threads <= 1 || p.n < 24) {
    Search s(p);
    s.dfs(shared);
    return !s.aborted() && !shared.stop.load();
  }
  std::vector<std::vector<std::pair<int, bool>>> tasks;
  {
    Search s(p);
    tasks = s.split(threads * 8, shared);
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        Search s(p);
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          s.undo_to(0);
          if (s.replay(tasks[i])) s.dfs(shared);
          if (s.aborted()) aborted.store(true);
        }
      });
  }
  return !aborted.load() && !shared.stop.load();
}

// Smallest column set of size `optimum` in lexicographic order. `witness`
// is any optimal solution.
inline std::vector<int> lexicographic_optimum(const Problem& p, int optimum,
                                              std::vector<int> witness, long long& nodes) {
  Search s(p);
  std::vector<char> in_witness(p.n, 0);
  for (int v : witness) in_witness[v] = 1;
  for (int v = 0; v < p.n; ++v) {
    if (s.chosen() == optimum) {
      s.decide(v, false);
      continue;
    }
    if (in_witness[v]) {
      s.decide(v, true);
      continue;
    }
    const std::size_t mark = s.trail().size();
    SharedBest query(optimum + 1);
    query.first_only = true;
    bool found = false;
    if (s.decide(v, true)) {
      s.dfs(query);
      found = !query.solution.empty();
    }
    nodes += query.nodes.load();
    if (found) {
      std::fill(in_witness.begin(), in_witness.end(), 0);
      for (int w : query.solution) in_witness[w] = 1;
    } else {
      s.undo_to(mark);
      s.decide(v, false);
    }
  }
  return s.chosen_set();
}

}  // namespace detail

inline DimResult solve_exact(const MulticoverInstance& inst, const SolveOptions& options = {}) {
  DimResult result;
  result.k = inst.demand;
  result.optimal = true;
  for (const auto& row : inst.rows)
    for (int c : row)
      if (c < 0 || c >= inst.universe_size)
        throw Error(ErrorCode::kIndexOutOfRange, "row entry " + std::to_string(c));

  if (!inst.feasible()) {
    result.stats.rows = static_cast<int>(inst.rows.size());
    return result;
  }
  if (inst.rows.empty() || inst.demand <= 0) {
    result.value = 0;
    result.stats.rows = static_cast<int>(inst.rows.size());
    return result;
  }

  auto rows = options.prune_dominated
                  ? detail::prune_dominated_rows(inst.rows, inst.universe_size)
                  : inst.rows;
  result.stats.rows = static_cast<int>(rows.size());
  result.stats.pruned = static_cast<int>(inst.rows.size() - rows.size());
  detail::Problem problem(inst.universe_size, inst.demand, std::move(rows));

  auto greedy = detail::greedy_cover(problem);
  detail::SharedBest shared(static_cast<int>(greedy.size()));
  shared.solution = greedy;
  shared.node_limit = options.node_limit;
  bool complete = detail::minimize(problem, shared, std::max(1, options.threads));
  result.stats.nodes = shared.nodes.load();

  if (!complete) {
    result.optimal = false;
    result.value = shared.size.load();
    result.basis = shared.solution;
    return result;
  }
  const int optimum = shared.size.load();
  long long extra = 0;
  result.basis = detail::lexicographic_optimum(problem, optimum, shared.solution, extra);
  result.stats.nodes += extra;
  result.value = optimum;
  return result;
}

// Debug/diff format: "n k r" then one sorted, space-separated row per line.
inline std::string dump_instance(const MulticoverInstance& inst) {
  std::ostringstream out;
  out << inst.universe_size << ' ' << inst.demand << ' ' << inst.rows.size() << '\n';
  for (const auto& row : inst.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

inline MulticoverInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  MulticoverInstance inst;
  std::size_t r = 0;
  if (!(in >> inst.universe_size >> inst.demand >> r))
    throw Error(ErrorCode::kParse, "instance header must be 'n k r'");
  std::string line;
  std::getline(in, line);
  for (std::size_t i = 0; i < r; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "missing instance row");
    std::istringstream row_in(line);
    std::vector<int> row;
    for (int c; row_in >> c;) {
      if (c < 0 || c >= inst.universe_size) throw Error(ErrorCode::kParse, "row entry out of range");
      row.push_back(c);
    }
    if (!std::is_sorted(row.begin(), row.end())) throw Error(ErrorCode::kParse, "row not sorted");
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

}  // namespace kmetric
