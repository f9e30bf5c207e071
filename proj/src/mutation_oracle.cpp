#include "sfc/mutation_oracle.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace sfc::oracle {

namespace {

constexpr std::size_t kAbsent = ~std::size_t{0};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::logic_error("mutation oracle: " + message);
  }
}

bool adjacent(unsigned d, unsigned levels, ZKey a, ZKey b) {
  const auto ca = key_to_coords(d, levels, a);
  const auto cb = key_to_coords(d, levels, b);
  return l1_distance(ca, cb) == 1;
}

// Checks the edge set of the cycles restricted to the central parallelepiped:
// only the pairs (inner_alpha, outer_alpha) may be joined inside it.
void check_central_restriction(unsigned d, unsigned levels, std::span<const CycleGraph> blocks) {
  const unsigned block_bits = d * (levels - 1);
  const Digit count = Digit{1} << d;
  std::vector<ZKey> cells;
  for (Digit alpha = 0; alpha < count; ++alpha) {
    const auto pair = central_pair(d, levels, alpha);
    cells.push_back(pair.inner);
    cells.push_back(pair.outer);
  }
  for (Digit alpha = 0; alpha < count; ++alpha) {
    const auto pair = central_pair(d, levels, alpha);
    const ZKey base = alpha << block_bits;
    const auto& block = blocks[alpha];
    require(block.has_edge(pair.inner - base, pair.outer - base),
            "central pair of block " + std::to_string(alpha) + " is not a cycle edge");
    for (ZKey cell : {pair.inner, pair.outer}) {
      for (ZKey other : cells) {
        if (other == pair.inner || other == pair.outer || (other >> block_bits) != alpha) {
          continue;
        }
        require(!block.has_edge(cell - base, other - base),
                "unexpected edge inside the central parallelepiped");
      }
    }
  }
}

}  // namespace

CycleGraph::CycleGraph(unsigned d, unsigned m, std::vector<ZKey> order)
    : d_(d), m_(m), order_(std::move(order)) {
  require(d >= 1 && m >= 1 && d * m <= kMaxOracleBits, "graph size out of range");
  const std::size_t cells = std::size_t{1} << (d * m);
  require(order_.size() == cells, "cycle does not cover the cube");
  position_.assign(cells, kAbsent);
  for (std::size_t i = 0; i < cells; ++i) {
    require(order_[i] < cells && position_[order_[i]] == kAbsent, "cycle repeats a cell");
    position_[order_[i]] = i;
  }
  for (std::size_t i = 0; i < cells; ++i) {
    require(adjacent(d, m, order_[i], order_[(i + 1) % cells]), "cycle step is not unit length");
  }
}

CycleGraph base_cycle(unsigned d) {
  if (d < 2 || d > 6) {
    throw std::domain_error("base_cycle: d must be in 2..6");
  }
  std::vector<ZKey> order;
  for (Digit t = 0; t < (Digit{1} << d); ++t) {
    order.push_back(detail::gray_code(t));
  }
  return CycleGraph(d, 1, std::move(order));
}

CentralPair central_pair(unsigned d, unsigned levels, Digit alpha) {
  const Digit complement = ~alpha & low_mask(d);
  ZKey inner = alpha;
  for (unsigned j = 1; j < levels; ++j) {
    inner = (inner << d) | complement;
  }
  return {inner, inner ^ 1u};
}

CycleGraph merge_step(unsigned d, std::span<const CycleGraph> blocks) {
  require(d >= 2 && blocks.size() == (std::size_t{1} << d), "need 2^d blocks");
  const unsigned m = blocks[0].levels();
  for (const auto& block : blocks) {
    require(block.dimension() == d && block.levels() == m, "blocks differ in shape");
  }
  const unsigned levels = m + 1;
  require(d * levels <= kMaxOracleBits, "merged cube too large");
  check_central_restriction(d, levels, blocks);

  const Digit count = Digit{1} << d;
  const unsigned block_bits = d * m;

  // Entry cell per position in the Gray chain; the exit is the other pair member.
  auto chain_from = [&](bool start_outer) -> std::optional<std::vector<ZKey>> {
    std::vector<ZKey> entries(count);
    auto pair0 = central_pair(d, levels, detail::gray_code(0));
    entries[0] = start_outer ? pair0.outer : pair0.inner;
    for (Digit t = 0; t < count; ++t) {
      const auto here = central_pair(d, levels, detail::gray_code(t));
      const ZKey exit = entries[t] == here.inner ? here.outer : here.inner;
      const auto next = central_pair(d, levels, detail::gray_code((t + 1) % count));
      const bool to_inner = adjacent(d, levels, exit, next.inner);
      const bool to_outer = adjacent(d, levels, exit, next.outer);
      require(!(to_inner && to_outer), "ambiguous endpoint pairing");
      if (!to_inner && !to_outer) {
        return std::nullopt;
      }
      const ZKey entry = to_inner ? next.inner : next.outer;
      if (t + 1 == count) {
        if (entry != entries[0]) {
          return std::nullopt;
        }
      } else {
        entries[t + 1] = entry;
      }
    }
    return entries;
  };

  auto entries = chain_from(true);
  if (!entries) {
    entries = chain_from(false);
  }
  require(entries.has_value(), "subcycles do not close into one cycle");

  std::vector<ZKey> order;
  order.reserve(count << block_bits);
  std::vector<bool> backwards(count);
  for (Digit t = 0; t < count; ++t) {
    const Digit alpha = detail::gray_code(t);
    const ZKey base = alpha << block_bits;
    const auto& block = blocks[alpha];
    const auto pair = central_pair(d, levels, alpha);
    const ZKey entry = (*entries)[t] - base;
    const ZKey exit = ((*entries)[t] == pair.inner ? pair.outer : pair.inner) - base;
    // The removed edge is exit -> entry (walk forward) or entry -> exit (walk back).
    const bool forward = block.successor(exit) == entry;
    require(forward || block.successor(entry) == exit, "entry and exit are not neighbours");
    backwards[alpha] = !forward;
    ZKey cell = entry;
    for (std::size_t k = 0; k < block.size(); ++k) {
      order.push_back(base + cell);
      cell = forward ? block.successor(cell) : block.predecessor(cell);
    }
    require(order.back() == base + exit, "path does not end at the exit cell");
  }
  CycleGraph merged(d, levels, std::move(order));
  merged.set_walked_backwards(std::move(backwards));
  return merged;
}

CycleGraph build_cycle_graph(unsigned d, unsigned n) {
  if (d < 2 || d > 6 || n < 1 || d * n > kMaxOracleBits) {
    throw std::domain_error("build_cycle: need 2 <= d <= 6, n >= 1, d*n <= 20");
  }
  CycleGraph graph = base_cycle(d);
  for (unsigned level = 1; level < n; ++level) {
    std::vector<CycleGraph> blocks(std::size_t{1} << d, graph);
    graph = merge_step(d, blocks);
  }
  return graph;
}

std::vector<ZKey> build_cycle(unsigned d, unsigned n) {
  const CycleGraph graph = build_cycle_graph(d, n);
  return {graph.order().begin(), graph.order().end()};
}

}  // namespace sfc::oracle
