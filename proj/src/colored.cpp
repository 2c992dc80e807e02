#include "degopt/colored.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <string>
#include <thread>

#include "degopt/error.hpp"

namespace degopt {

namespace {

using Key = std::uint64_t;
using Index = std::uint32_t;

struct Cell {
  Key key;
  Value value;
};

// Back pointers of one construction step; their meaning depends on the step.
struct Stage {
  enum class Kind { merge_child, add_edge, finalize } kind;
  std::size_t ref = 0;  // child vertex or edge index
  std::vector<std::pair<Index, Index>> back;
};

// Open-addressing map from packed key to cell, keeping the first cell that
// reaches the maximum value for each key.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t expected = 16) {
    std::size_t cap = 32;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    shift_ = 64 - std::countr_zero(cap);
  }

  void offer(Key key, Value value, Index a, Index b) {
    std::size_t pos = slot_of(key);
    while (true) {
      const Index s = slots_[pos];
      if (s == kEmpty) break;
      Cell& c = cells_[s];
      if (c.key == key) {
        if (value > c.value) {
          c.value = value;
          back_[s] = {a, b};
        }
        return;
      }
      pos = (pos + 1) & (slots_.size() - 1);
    }
    if (cells_.size() >= 0xFFFFFFF0u) throw LimitError("DP table exceeds 2^32 cells");
    slots_[pos] = static_cast<Index>(cells_.size());
    cells_.push_back({key, value});
    back_.push_back({a, b});
    if (cells_.size() * 2 > slots_.size()) grow();
  }

  std::vector<Cell> take_cells() { return std::move(cells_); }
  std::vector<std::pair<Index, Index>> take_back() { return std::move(back_); }

 private:
  static constexpr Index kEmpty = 0xFFFFFFFFu;

  std::size_t slot_of(Key key) const { return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_); }

  void grow() {
    slots_.assign(slots_.size() * 2, kEmpty);
    --shift_;
    for (Index i = 0; i < cells_.size(); ++i) {
      std::size_t pos = slot_of(cells_[i].key);
      while (slots_[pos] != kEmpty) pos = (pos + 1) & (slots_.size() - 1);
      slots_[pos] = i;
    }
  }

  std::vector<Index> slots_;
  int shift_;
  std::vector<Cell> cells_;
  std::vector<std::pair<Index, Index>> back_;
};

class ForestDp {
 public:
  ForestDp(const Graph& host, const EliminationForest& forest, const std::optional<EdgeColoring>& coloring,
           const SeparableObjective& objective)
      : host_(host), forest_(forest), objective_(objective) {
    if (objective.num_vertices() != static_cast<std::size_t>(host.num_vertices()))
      throw InputError("objective does not match the graph");
    if (auto bad = find_violating_edge(host, forest))
      throw PreconditionError("forest is not valid: edge {" + std::to_string(host.edge(*bad).u + 1) + "," +
                              std::to_string(host.edge(*bad).v + 1) + "} joins vertices that are not ancestor-related");
    if (coloring) {
      coloring->validate(host);
      color_ = coloring->color;
      counts_ = coloring->counts;
      class_sizes_ = coloring->class_sizes();
    }
    layout_colors();
    layout_vertices();
  }

  ColoredSolution run(int threads) {
    const auto& roots = forest_.roots();
    // Each root's tree touches only its own vertices' state.
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || roots.size() < 2) {
      for (int r : roots) solve_tree(r);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t k = w; k < roots.size(); k += workers) solve_tree(roots[k]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    // Virtual super-root: convolve the root tables over colour counts only.
    std::vector<Cell> acc{{0, 0}};
    std::vector<Stage> top;
    for (int r : roots) {
      auto child = std::move(output_[static_cast<std::size_t>(r)]);
      top.push_back(Stage{Stage::Kind::merge_child, static_cast<std::size_t>(r), {}});
      acc = convolve(acc, child, top.back());
    }

    ColoredSolution sol;
    sol.forest_height = forest_.height();
    sol.table_cells = cells_created_;
    Key target = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k) target += static_cast<Key>(counts_[k]) << color_shift_[k];
    const auto hit = std::find_if(acc.begin(), acc.end(), [&](const Cell& c) { return c.key == target; });
    if (hit == acc.end()) return sol;

    sol.feasible = true;
    sol.value = hit->value;
    sol.subset = EdgeSubset(host_.num_edges());
    Index idx = static_cast<Index>(hit - acc.begin());
    for (std::size_t s = top.size(); s-- > 0;) {
      const auto [prev, child_idx] = top[s].back[idx];
      trace(static_cast<int>(top[s].ref), child_idx, sol.subset);
      idx = prev;
    }
    if (!counts_.empty()) {
      sol.color_counts.assign(counts_.size(), 0);
      for (std::size_t e = 0; e < host_.num_edges(); ++e)
        if (sol.subset.contains(e)) ++sol.color_counts[static_cast<std::size_t>(color_[e])];
    }
    return sol;
  }

 private:
  void layout_colors() {
    int shift = 0;
    for (int m : counts_) {
      const int width = std::bit_width(static_cast<unsigned>(2 * m + 1));  // radix > 2m: sums never carry
      color_shift_.push_back(shift);
      color_mask_.push_back((Key{1} << width) - 1);
      shift += width;
    }
    if (shift > 60) throw LimitError("colour counts too large for the DP key");
    color_bits_ = shift;
  }

  void layout_vertices() {
    const auto n = static_cast<std::size_t>(host_.num_vertices());
    strides_.assign(n, {});
    owned_.assign(n, {});
    remaining_.assign(n, class_sizes_);
    output_.assign(n, {});
    stages_.assign(n, {});
    for (int v = 0; v < host_.num_vertices(); ++v) {
      const auto path = forest_.ancestors(v);
      auto& st = strides_[static_cast<std::size_t>(v)];
      unsigned __int128 stride = static_cast<unsigned __int128>(1) << color_bits_;
      for (int a : path) {
        st.push_back(static_cast<Key>(stride));
        stride *= static_cast<unsigned>(host_.degree(a) + 1);
      }
      st.push_back(static_cast<Key>(stride));
      stride *= static_cast<unsigned>(host_.degree(v) + 1);
      if (stride >> 63)
        throw LimitError("forest too tall or degrees too large for the DP key (height " +
                         std::to_string(forest_.height()) + ")");
      for (std::size_t e : host_.incident(v)) {
        const int a = host_.edge(e).other(v);
        if (forest_.depth(a) < forest_.depth(v)) owned_[static_cast<std::size_t>(v)].push_back(e);
      }
    }
  }

  bool colors_ok(Key key) const {
    for (std::size_t k = 0; k < counts_.size(); ++k)
      if (static_cast<int>((key >> color_shift_[k]) & color_mask_[k]) > counts_[k]) return false;
    return true;
  }

  std::vector<Cell> convolve(const std::vector<Cell>& a, const std::vector<Cell>& b, Stage& stage) {
    TableBuilder out(std::max(a.size(), b.size()));
    for (Index i = 0; i < a.size(); ++i)
      for (Index j = 0; j < b.size(); ++j) {
        const Key key = a[i].key + b[j].key;
        if (!colors_ok(key)) continue;
        out.offer(key, checked::add(a[i].value, b[j].value), i, j);
      }
    stage.back = out.take_back();
    auto cells = out.take_cells();
    count_cells(cells.size());
    return cells;
  }

  void count_cells(std::size_t k) {
    // relaxed bookkeeping; only read after all workers joined
    __atomic_fetch_add(&cells_created_, k, __ATOMIC_RELAXED);
  }

  void solve_vertex(int v) {
    const auto vi = static_cast<std::size_t>(v);
    const auto& st = strides_[vi];
    const std::size_t top_slot = st.size() - 1;
    auto& stages = stages_[vi];

    std::vector<Cell> table{{0, 0}};
    for (int c : forest_.children(v)) {
      auto child = std::move(output_[static_cast<std::size_t>(c)]);
      stages.push_back(Stage{Stage::Kind::merge_child, static_cast<std::size_t>(c), {}});
      table = convolve(table, child, stages.back());
      for (std::size_t k = 0; k < class_sizes_.size(); ++k)
        remaining_[vi][k] = remaining_[vi][k] - (class_sizes_[k] - remaining_[static_cast<std::size_t>(c)][k]);
    }

    for (std::size_t e : owned_[vi]) {
      const int a = host_.edge(e).other(v);
      Key delta = st[static_cast<std::size_t>(forest_.depth(a) - 1)] + st[top_slot];
      if (!color_.empty()) delta += Key{1} << color_shift_[static_cast<std::size_t>(color_[e])];
      TableBuilder out(table.size() * 2);
      for (Index i = 0; i < table.size(); ++i) {
        out.offer(table[i].key, table[i].value, i, 0);
        const Key k2 = table[i].key + delta;
        if (colors_ok(k2)) out.offer(k2, table[i].value, i, 1);
      }
      stages.push_back(Stage{Stage::Kind::add_edge, e, out.take_back()});
      table = out.take_cells();
      count_cells(table.size());
      if (!color_.empty()) --remaining_[vi][static_cast<std::size_t>(color_[e])];
    }

    // v's degree is final: score it, drop its slot, and discard colour
    // counts that can no longer reach m_k with the edges left outside.
    TableBuilder out(table.size());
    const Key stride = st[top_slot];
    for (Index i = 0; i < table.size(); ++i) {
      const Key deg = table[i].key / stride;
      const Key rest = table[i].key % stride;
      bool ok = true;
      for (std::size_t k = 0; k < counts_.size() && ok; ++k)
        ok = static_cast<int>((rest >> color_shift_[k]) & color_mask_[k]) + remaining_[vi][k] >= counts_[k];
      if (!ok) continue;
      out.offer(rest, checked::add(table[i].value, objective_.at(v, static_cast<int>(deg))), i, 0);
    }
    stages.push_back(Stage{Stage::Kind::finalize, 0, out.take_back()});
    output_[vi] = out.take_cells();
    count_cells(output_[vi].size());
  }

  void solve_tree(int root) {
    // Post-order without recursion.
    std::vector<int> order, stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : forest_.children(v)) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) solve_vertex(*it);
  }

  void trace(int v, Index idx, EdgeSubset& chosen) const {
    const auto& stages = stages_[static_cast<std::size_t>(v)];
    for (std::size_t s = stages.size(); s-- > 0;) {
      const Stage& stage = stages[s];
      const auto [prev, extra] = stage.back[idx];
      switch (stage.kind) {
        case Stage::Kind::finalize:
          break;
        case Stage::Kind::add_edge:
          if (extra) chosen.set(stage.ref);
          break;
        case Stage::Kind::merge_child:
          trace(static_cast<int>(stage.ref), extra, chosen);
          break;
      }
      idx = prev;
    }
  }

  const Graph& host_;
  const EliminationForest& forest_;
  const SeparableObjective& objective_;
  std::vector<int> color_, counts_, class_sizes_;
  std::vector<int> color_shift_;
  std::vector<Key> color_mask_;
  int color_bits_ = 0;

  std::vector<std::vector<Key>> strides_;          // per vertex: slot strides along its root path, then itself
  std::vector<std::vector<std::size_t>> owned_;    // edges to ancestors
  std::vector<std::vector<int>> remaining_;        // per colour: edges not owned inside the subtree
  std::vector<std::vector<Cell>> output_;
  std::vector<std::vector<Stage>> stages_;
  std::size_t cells_created_ = 0;
};

// Lexicographic order of the ascending index lists of two masks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int low = std::countr_zero(a ^ b);
  const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
  if (a >> low & 1) return (b & above) != 0;  // b continues past the common prefix with a larger element
  return (a & above) == 0;
}

}  // namespace

ColoredSolution solve_colored_dp(const Graph& host, const EliminationForest& forest,
                                 const std::optional<EdgeColoring>& coloring, const SeparableObjective& objective,
                                 const ColoredDpOptions& options) {
  return ForestDp(host, forest, coloring, objective).run(options.threads);
}

ColoredSolution solve_colored_bruteforce(const Graph& host, const std::optional<EdgeColoring>& coloring,
                                         const SeparableObjective& objective, std::size_t edge_cap) {
  const std::size_t ne = host.num_edges();
  if (ne > edge_cap || ne >= 63)
    throw LimitError("colored brute force is capped at " + std::to_string(edge_cap) + " edges; got " +
                     std::to_string(ne));
  if (objective.num_vertices() != static_cast<std::size_t>(host.num_vertices()))
    throw InputError("objective does not match the graph");
  if (coloring) coloring->validate(host);

  DegreeSequence deg(static_cast<std::size_t>(host.num_vertices()), 0);
  std::vector<int> used(coloring ? coloring->counts.size() : 0, 0);
  Value value = 0;
  for (int v = 0; v < host.num_vertices(); ++v) value = checked::add(value, objective.at(v, 0));

  ColoredSolution sol;
  std::uint64_t best_mask = 0;
  auto consider = [&](std::uint64_t mask) {
    if (coloring && used != coloring->counts) return;
    if (!sol.feasible || value > sol.value || (value == sol.value && mask_lex_less(mask, best_mask))) {
      sol.feasible = true;
      sol.value = value;
      best_mask = mask;
    }
  };

  // Gray-code walk: one edge toggles per step.
  std::uint64_t mask = 0;
  consider(mask);
  const std::uint64_t total = std::uint64_t{1} << ne;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto e = static_cast<std::size_t>(std::countr_zero(step));
    const bool adding = !(mask >> e & 1);
    mask ^= std::uint64_t{1} << e;
    for (int w : {host.edge(e).u, host.edge(e).v}) {
      const auto wi = static_cast<std::size_t>(w);
      const Value before = objective.at(w, deg[wi]);
      deg[wi] += adding ? 1 : -1;
      value = checked::add(checked::sub(value, before), objective.at(w, deg[wi]));
    }
    if (coloring) used[static_cast<std::size_t>(coloring->color[e])] += adding ? 1 : -1;
    consider(mask);
  }

  if (sol.feasible) {
    sol.subset = EdgeSubset(ne);
    for (std::size_t e = 0; e < ne; ++e)
      if (best_mask >> e & 1) sol.subset.set(e);
    if (coloring) sol.color_counts = coloring->counts_of(sol.subset);
  }
  return sol;
}

}  // namespace degopt
