#include "coarse/lps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

namespace modular {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1u) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

int legendre(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % m) + m) % m);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t sqrt_minus_one(std::uint64_t q) {
  if (q % 4 != 1) throw InputError("sqrt_minus_one: q must be 1 mod 4");
  std::uint64_t n = 2;
  while (legendre(static_cast<std::int64_t>(n), q) != -1) ++n;
  return pow_mod(n, (q - 1) / 4, q);
}

}  // namespace modular

LpsParams lps_params(std::uint32_t p, std::uint32_t q) {
  if (!modular::is_prime(p) || !modular::is_prime(q)) throw InputError("lps: p and q must be prime");
  if (p == q) throw InputError("lps: p and q must be distinct");
  if (p % 4 != 1 || q % 4 != 1) throw InputError("lps: p and q must be congruent to 1 mod 4");
  return {p, q, modular::legendre(p, q)};
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  return static_cast<std::uint32_t>(modular::pow_mod(a, q - 2, q));
}

std::uint32_t key(const Pgl2Group::Matrix& m, std::uint32_t q) {
  return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

}  // namespace

Pgl2Group::Pgl2Group(std::uint32_t q) : q_(q) {
  if (!modular::is_prime(q)) throw InputError("pgl2: q must be prime");
  // Canonical classes in lexicographic order: (0,1,c,d) with c ≠ 0, then (1,b,c,d) with d ≠ bc.
  for (std::uint32_t a = 0; a <= 1; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if (a == 0 && (b != 1 || c == 0)) continue;
          if (a == 1 && d == (b * c) % q) continue;
          elements_.push_back({a, b, c, d});
        }
  index_.reserve(elements_.size());
  for (Element e = 0; e < elements_.size(); ++e) index_.emplace(key(elements_[e], q), e);
  identity_ = index_.at(key({1, 0, 0, 1}, q));
}

Pgl2Group::Matrix Pgl2Group::canonical(const Matrix& m) const {
  std::uint32_t lead = 0;
  for (std::uint32_t x : m)
    if (x % q_) {
      lead = x % q_;
      break;
    }
  if (lead == 0) throw InputError("pgl2: zero matrix");
  const std::uint32_t s = inv_mod(lead, q_);
  Matrix out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = static_cast<std::uint32_t>((std::uint64_t{m[i]} % q_) * s % q_);
  return out;
}

Element Pgl2Group::index_of(const Matrix& m) const {
  const Matrix c = canonical(m);
  const auto it = index_.find(key(c, q_));
  if (it == index_.end()) throw InputError("pgl2: singular matrix");
  return it->second;
}

Element Pgl2Group::mul(Element x, Element y) const {
  const Matrix& a = elements_[x];
  const Matrix& b = elements_[y];
  const std::uint64_t q = q_;
  Matrix r{static_cast<std::uint32_t>((std::uint64_t{a[0]} * b[0] + std::uint64_t{a[1]} * b[2]) % q),
           static_cast<std::uint32_t>((std::uint64_t{a[0]} * b[1] + std::uint64_t{a[1]} * b[3]) % q),
           static_cast<std::uint32_t>((std::uint64_t{a[2]} * b[0] + std::uint64_t{a[3]} * b[2]) % q),
           static_cast<std::uint32_t>((std::uint64_t{a[2]} * b[1] + std::uint64_t{a[3]} * b[3]) % q)};
  return index_of(r);
}

Element Pgl2Group::inv(Element x) const {
  // The adjugate is the inverse up to a scalar.
  const Matrix& a = elements_[x];
  return index_of({a[3], (q_ - a[1]) % q_, (q_ - a[2]) % q_, a[0]});
}

FiniteGroupTable Pgl2Group::table(std::vector<Element> generators) const {
  const std::size_t n = order();
  std::vector<Element> mul_table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) mul_table[std::size_t{x} * n + y] = mul(x, y);
  return FiniteGroupTable(n, std::move(mul_table), std::move(generators));
}

LpsGraph lps_graph(std::uint32_t p, std::uint32_t q, const LpsOptions& options) {
  const LpsParams params = lps_params(p, q);
  if (params.legendre != -1)
    throw InputError("lps: (p|q) = +1 (the PSL2 case) is not supported; only (p|q) = -1 is implemented");
  if (q > options.max_q && !options.allow_large)
    throw CapExceeded("lps: q = " + std::to_string(q) + " exceeds the desk-scale bound " +
                      std::to_string(options.max_q) + " (override with allow_large)");

  std::vector<std::array<int, 4>> quads;
  const int bound = static_cast<int>(std::sqrt(static_cast<double>(p))) + 1;
  for (int a0 = 1; a0 <= bound; a0 += 2)
    for (int a1 = -bound - (bound % 2); a1 <= bound; a1 += 2)
      for (int a2 = -bound - (bound % 2); a2 <= bound; a2 += 2)
        for (int a3 = -bound - (bound % 2); a3 <= bound; a3 += 2)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == static_cast<int>(p)) quads.push_back({a0, a1, a2, a3});
  if (quads.size() != p + 1)
    throw VerificationFailure("lps: found " + std::to_string(quads.size()) + " quadruples, expected " +
                              std::to_string(p + 1));

  LpsGraph out{params, {}, Pgl2Group(q), quads, {}, {}};
  const auto i = static_cast<std::int64_t>(modular::sqrt_minus_one(q));
  const auto qq = static_cast<std::int64_t>(q);
  auto mod = [qq](std::int64_t x) { return static_cast<std::uint32_t>(((x % qq) + qq) % qq); };
  for (const auto& a : quads)
    out.generators.push_back(out.group.index_of(
        {mod(a[0] + i * a[1]), mod(a[2] + i * a[3]), mod(-a[2] + i * a[3]), mod(a[0] - i * a[1])}));

  std::vector<Element> sorted = out.generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      std::binary_search(sorted.begin(), sorted.end(), out.group.identity()))
    throw InputError("lps: the p+1 generators are not distinct non-identity elements of PGL2(" +
                     std::to_string(q) + "); q is too small relative to p");
  for (Element s : out.generators)
    if (!std::binary_search(sorted.begin(), sorted.end(), out.group.inv(s)))
      throw VerificationFailure("lps: generating set is not closed under inverses");

  std::vector<std::size_t> reps;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < out.generators.size(); ++k) {
    const Element inv = out.group.inv(out.generators[k]);
    bool paired = false;
    for (std::size_t r : reps) paired = paired || out.generators[r] == inv;
    if (paired) continue;
    reps.push_back(k);
    const auto& a = quads[k];
    std::ostringstream name;
    name << '[' << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ']';
    names.push_back(name.str());
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(out.group.order() * reps.size());
  for (Element g = 0; g < out.group.order(); ++g)
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const Element s = out.generators[reps[r]];
      const Element gs = out.group.mul(g, s);
      if (out.group.inv(s) == s && gs < g) continue;
      edges.push_back({g, gs, Letter(static_cast<std::uint32_t>(r), false)});
    }
  out.graph = LabeledGraph(Alphabet(names), out.group.order(), edges);
  if (out.group.order() <= options.table_limit) out.table = out.group.table(out.generators);
  return out;
}

LpsReport verify_lps(const LabeledGraph& g, const LpsParams& params, const SpectrumOptions& options) {
  LpsReport r;
  const std::size_t p = params.p, q = params.q;
  const std::size_t expected_n = q * (q * q - 1);
  const auto bounds = degree_bounds(g);
  r.vertex_count = g.vertex_count();
  r.max_degree = bounds.max;
  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool regular = bounds.min == p + 1 && bounds.max == p + 1;
  add("regularity", regular,
      "degrees in [" + std::to_string(bounds.min) + ", " + std::to_string(bounds.max) + "], expected " +
          std::to_string(p + 1));
  add("vertex_count", g.vertex_count() == expected_n,
      std::to_string(g.vertex_count()) + " vertices, expected q(q^2-1) = " + std::to_string(expected_n));
  add("connected", g.connected(), std::to_string(g.component_count()) + " component(s)");

  r.girth = girth(g);
  r.girth_bound = 4.0 * std::log(double(q)) / std::log(double(p)) - std::log(4.0) / std::log(double(p));
  const auto needed = static_cast<std::size_t>(std::ceil(r.girth_bound - 1e-12));
  {
    std::ostringstream d;
    d << "girth " << (r.girth ? std::to_string(*r.girth) : "inf") << " vs bound " << r.girth_bound;
    add("girth", !r.girth || *r.girth >= needed, d.str());
  }

  const auto colouring = bipartition(g);
  r.bipartite = colouring.has_value();
  add("bipartite", r.bipartite, params.legendre == -1 ? "expected in the (p|q) = -1 case" : "");

  r.ramanujan_bound = 2.0 * std::sqrt(double(p));
  if (regular && g.connected()) {
    const auto radius = nontrivial_spectral_radius(g, options);
    r.nontrivial_radius = radius.value;
    std::ostringstream d;
    d.precision(12);
    d << "max nontrivial |lambda| = " << radius.value << " vs 2 sqrt(p) = " << r.ramanujan_bound
      << (radius.dense ? " (dense)" : " (Lanczos, residual " + std::to_string(radius.residual) + ")");
    add("ramanujan", radius.value <= r.ramanujan_bound + 1e-9, d.str());
    if (r.bipartite && g.vertex_count() <= options.dense_limit) {
      const auto spec = adjacency_spectrum(g, options);
      add("bottom_eigenvalue", std::abs(spec.back() + double(p + 1)) < 1e-9,
          "smallest eigenvalue " + std::to_string(spec.back()));
    }
  } else {
    add("ramanujan", false, "skipped: graph not regular and connected");
  }
  if (g.connected()) {
    r.diameter = diameter(g);
    r.diameter_over_log_n = double(*r.diameter) / std::log(double(g.vertex_count()));
  }
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

}  // namespace coarse
