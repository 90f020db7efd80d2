#include "coarse/cheeger.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <thread>

#include "coarse/errors.hpp"
#include "coarse/parallel.hpp"

namespace coarse {
namespace {

struct Candidate {
  std::size_t boundary = 0;
  std::size_t size = 0;
  std::uint64_t mask = 0;
  bool valid = false;
};

// Lexicographic order of the sorted vertex lists encoded by two masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
  if (a >> p & 1u) return (b & above) != 0;
  return (a & above) == 0;
}

bool better(const Candidate& x, const Candidate& y) {
  if (!y.valid) return x.valid;
  if (!x.valid) return false;
  const auto lhs = x.boundary * y.size;
  const auto rhs = y.boundary * x.size;
  if (lhs != rhs) return lhs < rhs;
  return lex_less(x.mask, y.mask);
}

struct Neighbours {
  std::vector<std::vector<Vertex>> of;  // non-loop neighbours with multiplicity
};

Candidate scan_chunk(const Neighbours& nb, std::size_t n, std::size_t low_bits, std::uint64_t high) {
  const std::size_t half = n / 2;
  std::uint64_t mask = high << low_bits;
  std::size_t size = static_cast<std::size_t>(std::popcount(mask));
  long boundary = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1u)
      for (Vertex w : nb.of[v])
        if (!(mask >> w & 1u)) ++boundary;

  Candidate best;
  auto consider = [&] {
    if (size == 0 || size > half) return;
    Candidate c{static_cast<std::size_t>(boundary), size, mask, true};
    if (better(c, best)) best = c;
  };
  consider();
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i));
    const bool adding = !(mask >> v & 1u);
    long delta = 0;
    for (Vertex w : nb.of[v]) delta += (mask >> w & 1u) ? -1 : 1;
    boundary += adding ? delta : -delta;
    mask ^= std::uint64_t{1} << v;
    size = adding ? size + 1 : size - 1;
    consider();
  }
  return best;
}

}  // namespace

std::size_t edge_boundary(const LabeledGraph& g, const std::vector<Vertex>& subset) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : subset) in[v] = true;
  std::size_t count = 0;
  for (const EdgeSpec& e : g.edge_specs())
    if (in[e.u] != in[e.v]) ++count;
  return count;
}

CheegerResult cheeger_exact(const LabeledGraph& g, const CheegerOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.vertex_cap || n > 62)
    throw CapExceeded("cheeger_exact: " + std::to_string(n) + " vertices exceeds the enumeration cap of " +
                      std::to_string(options.vertex_cap));
  if (n < 2) throw InputError("cheeger_exact: need at least two vertices");
  if (!g.connected()) throw InputError("cheeger_exact: graph is disconnected");

  Neighbours nb;
  nb.of.resize(n);
  for (const Dart& d : g.darts())
    if (d.source != d.target) nb.of[d.source].push_back(d.target);

  const std::size_t high_bits = n > 14 ? std::min<std::size_t>(6, n - 10) : 0;
  const std::size_t low_bits = n - high_bits;
  const std::size_t chunks = std::size_t{1} << high_bits;
  std::vector<Candidate> results(chunks);
  const std::size_t workers = std::min(thread_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) results[c] = scan_chunk(nb, n, low_bits, c);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < chunks; c += workers) results[c] = scan_chunk(nb, n, low_bits, c);
      });
    for (auto& th : pool) th.join();
  }
  Candidate best;
  for (const auto& c : results)
    if (better(c, best)) best = c;

  CheegerResult r{best.boundary, best.size, {}};
  for (Vertex v = 0; v < n; ++v)
    if (best.mask >> v & 1u) r.witness.push_back(v);
  return r;
}

}  // namespace coarse
