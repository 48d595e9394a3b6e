#include "ordsplit/splitting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ordsplit/combinatorics.hpp"

namespace ordsplit {

int floor_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("floor_log2: n must be positive");
  return static_cast<int>(std::bit_width(n)) - 1;
}

DyadicPartition dyadic_partition(int n, int level) {
  if (n < 1) throw std::invalid_argument("dyadic_partition: n must be positive");
  const int g = floor_log2(static_cast<std::uint64_t>(n));
  if (level < 0 || level > g) throw std::invalid_argument("dyadic_partition: level outside [0, g]");
  DyadicPartition p{n, g, level, {}};
  const std::int64_t len = std::int64_t{1} << (g - level);
  for (std::int64_t lo = 1; lo <= n; lo += len) {
    p.intervals.push_back({static_cast<Vertex>(lo), static_cast<Vertex>(std::min<std::int64_t>(lo + len - 1, n))});
  }
  return p;
}

namespace {

void check_edge(EdgeView e, int n) {
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] < 1 || e[j] > n || (j > 0 && e[j] <= e[j - 1])) {
      throw std::invalid_argument("edge_level: edge must be strictly increasing inside [1, n]");
    }
  }
}

// Vertices p < q (0-based) fall in different level-i intervals exactly when
// (p >> (g-i)) != (q >> (g-i)), i.e. when g - i <= msb(p ^ q). Sorting the
// consecutive-pair msbs therefore gives the level directly.
int level_unchecked(EdgeView e, int g, int k) {
  int msb[64];
  const int pairs = static_cast<int>(e.size()) - 1;
  for (int j = 0; j < pairs; ++j) {
    auto x = static_cast<std::uint32_t>((e[j] - 1) ^ (e[j + 1] - 1));
    msb[j] = static_cast<int>(std::bit_width(x)) - 1;
  }
  std::nth_element(msb, msb + (k - 2), msb + pairs, std::greater<int>());
  return g - msb[k - 2];
}

}  // namespace

int edge_level(EdgeView e, int n, int k) {
  if (k < 2 || k > static_cast<int>(e.size())) throw std::invalid_argument("edge_level: need 2 <= k <= |e|");
  if (e.size() > 64) throw std::invalid_argument("edge_level: edges larger than 64 are not supported");
  check_edge(e, n);
  return level_unchecked(e, floor_log2(static_cast<std::uint64_t>(n)), k);
}

int Piece::max_part() const {
  int m = 0;
  for (const auto& iv : intervals) m = std::max(m, iv.length());
  return m;
}

std::uint64_t split_constant(int k, int r) {
  std::uint64_t c = 0;
  for (int j = k; j <= r; ++j) c += binomial(2 * k - 2, j);
  return c;
}

namespace {

void check_kr(int k, int r, int n) {
  if (k < 2 || k > r || r > n) throw std::invalid_argument("need 2 <= k <= r <= n");
  if (r > 64) throw std::invalid_argument("uniformity above 64 is not supported");
}

struct LevelKernelOut {
  std::vector<int> level;
  std::vector<int> sig;       // r slots per edge
  std::vector<int> sig_len;
};

void level_and_signature(const OrderedHypergraph& h, int k, int g, std::size_t i, LevelKernelOut& out) {
  const int r = h.r();
  auto e = h.edge(i);
  const int lvl = level_unchecked(e, g, k);
  const int shift = g - lvl;
  int* s = out.sig.data() + i * r;
  int len = 0;
  for (auto v : e) {
    int t = (v - 1) >> shift;
    if (len == 0 || s[len - 1] != t) s[len++] = t;
  }
  out.level[i] = lvl;
  out.sig_len[i] = len;
}

LevelKernelOut run_level_kernel(const OrderedHypergraph& h, int k, Exec exec) {
  const std::size_t m = h.edge_count();
  const int g = floor_log2(static_cast<std::uint64_t>(h.n()));
  LevelKernelOut out{std::vector<int>(m), std::vector<int>(m * h.r()), std::vector<int>(m)};
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < m; ++i) level_and_signature(h, k, g, i, out);
  } else {
    const auto sm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sm; ++i) level_and_signature(h, k, g, static_cast<std::size_t>(i), out);
  }
  return out;
}

}  // namespace

std::vector<int> edge_levels(const OrderedHypergraph& h, int k, Exec exec) {
  check_kr(k, h.r(), h.n());
  return run_level_kernel(h, k, exec).level;
}

Decomposition decompose(const OrderedHypergraph& h, int k, Exec exec) {
  check_kr(k, h.r(), h.n());
  const int r = h.r();
  const int g = floor_log2(static_cast<std::uint64_t>(h.n()));
  Decomposition d{h.n(), r, k, g, {}, std::vector<std::uint64_t>(g + 1, 0)};
  const auto ks = run_level_kernel(h, k, exec);

  const std::size_t m = h.edge_count();
  auto sig_of = [&](std::size_t i) {
    return std::span<const int>(ks.sig.data() + i * r, static_cast<std::size_t>(ks.sig_len[i]));
  };
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  // Stable: edges inside a piece keep the host's lexicographic order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ks.level[a] != ks.level[b]) return ks.level[a] < ks.level[b];
    auto sa = sig_of(a), sb = sig_of(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });

  std::size_t start = 0;
  while (start < m) {
    std::size_t stop = start + 1;
    const auto first = order[start];
    while (stop < m && ks.level[order[stop]] == ks.level[first] &&
           std::ranges::equal(sig_of(order[stop]), sig_of(first))) {
      ++stop;
    }
    Piece p;
    p.level = ks.level[first];
    auto sig = sig_of(first);
    p.signature.assign(sig.begin(), sig.end());
    const std::int64_t len = std::int64_t{1} << (g - p.level);
    for (int t : p.signature) {
      const std::int64_t lo = t * len + 1;
      p.intervals.push_back({static_cast<Vertex>(lo), static_cast<Vertex>(std::min<std::int64_t>(lo + len - 1, h.n()))});
    }
    std::vector<Vertex> flat;
    flat.reserve((stop - start) * r);
    for (std::size_t t = start; t < stop; ++t) {
      auto e = h.edge(order[t]);
      flat.insert(flat.end(), e.begin(), e.end());
    }
    p.sub = OrderedHypergraph::from_flat(h.n(), r, std::move(flat));
    ++d.per_level_counts[p.level];
    d.pieces.push_back(std::move(p));
    start = stop;
  }
  return d;
}

std::uint64_t piece_count_bound(int level, int k, int r) {
  if (k < 2 || k > r) throw std::invalid_argument("piece_count_bound: need 2 <= k <= r");
  if (level < 0) throw std::invalid_argument("piece_count_bound: level must be non-negative");
  if (k - 1 > 20) throw std::overflow_error("piece_count_bound: (k-1)! exceeds 64 bits");
  BigInt num = BigInt(split_constant(k, r)) << (static_cast<std::size_t>(level) * (k - 1));
  const BigInt den = factorial(k - 1);
  BigInt q = (num + den - 1) / den;
  if (q > BigInt(INT64_MAX)) throw std::overflow_error("piece_count_bound: value exceeds 63 bits");
  return q.convert_to<std::uint64_t>();
}

Constant c_value(double alpha, int k, int r) {
  if (k < 2 || k > r) throw std::invalid_argument("c_value: need 2 <= k <= r");
  if (!(alpha > k - 1)) throw std::invalid_argument("c_value: alpha must exceed k - 1 (use the log regime)");
  const std::uint64_t big_c = split_constant(k, r);
  const std::uint64_t fact = factorial(k - 1);
  Constant c;
  if (auto a = as_small_integer(alpha)) {
    // 1 - 2^{k-1-alpha} = (2^s - 1) / 2^s with s = alpha - k + 1 >= 1.
    const unsigned s = static_cast<unsigned>(*a - k + 1);
    const BigInt p = BigInt(1) << s;
    c.exact = Rational(BigInt(fact) * (p - 1), BigInt(big_c) * p);
    c.value = to_double(*c.exact);
  } else {
    c.value = static_cast<double>(fact) * (1.0 - std::exp2(k - 1 - alpha)) / static_cast<double>(big_c);
  }
  return c;
}

std::string to_string(Regime r) { return r == Regime::log ? "log" : "poly"; }

DenseWitness extract_dense(const OrderedHypergraph& h, int k, double alpha, Exec exec) {
  check_kr(k, h.r(), h.n());
  if (h.empty()) throw std::invalid_argument("extract_dense: hypergraph has no edges");
  if (!(alpha >= k - 1 && alpha <= h.r())) throw std::invalid_argument("extract_dense: alpha outside [k-1, r]");

  const auto dec = decompose(h, k, exec);
  const auto int_alpha = as_small_integer(alpha);

  // e / m_i^alpha is proportional to e * 2^{alpha * i}; compare that.
  std::size_t best = 0;
  if (int_alpha) {
    auto score = [&](const Piece& p) {
      return BigInt(p.sub.edge_count()) << (static_cast<std::size_t>(*int_alpha) * p.level);
    };
    BigInt best_score = score(dec.pieces[0]);
    for (std::size_t i = 1; i < dec.pieces.size(); ++i) {
      auto s = score(dec.pieces[i]);
      if (s > best_score) {
        best_score = std::move(s);
        best = i;
      }
    }
  } else {
    auto score = [&](const Piece& p) {
      return std::log2(static_cast<double>(p.sub.edge_count())) + alpha * p.level;
    };
    double best_score = score(dec.pieces[0]);
    for (std::size_t i = 1; i < dec.pieces.size(); ++i) {
      double s = score(dec.pieces[i]);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
  }

  DenseWitness w;
  w.piece = dec.pieces[best];
  w.m = std::int64_t{1} << (dec.g - w.piece.level);
  w.alpha = alpha;
  w.density = density(h, alpha);
  w.regime = (alpha == k - 1) ? Regime::log : Regime::poly;
  const auto big_c = split_constant(k, h.r());
  if (w.regime == Regime::log) {
    // alpha = k - 1 is an integer here, so d * m^alpha / C is exact.
    Rational base = *w.density.exact * Rational(big_pow(w.m, static_cast<unsigned>(k - 1)), BigInt(big_c));
    w.bound = to_double(base) / (1.0 + std::log2(static_cast<double>(h.n())));
  } else {
    const auto c = c_value(alpha, k, h.r());
    if (int_alpha) {
      w.bound_exact = *c.exact * *w.density.exact * Rational(big_pow(w.m, static_cast<unsigned>(*int_alpha)));
      w.bound = to_double(*w.bound_exact);
    } else {
      w.bound = c.value * w.density.d * std::pow(static_cast<double>(w.m), alpha);
    }
  }
  return w;
}

PrefixReduction reduce_by_prefix(const Piece& piece, int k) {
  const int parts = static_cast<int>(piece.intervals.size());
  if (parts != k) throw std::invalid_argument("reduce_by_prefix: piece must have exactly k parts");
  const int r = piece.sub.r();
  if (r < k) throw std::invalid_argument("reduce_by_prefix: need r >= k");

  std::vector<Edge> f_values;
  f_values.reserve(piece.sub.edge_count());
  for (auto e : piece.sub.edges()) {
    Edge f;
    std::size_t pos = 0;
    for (const auto& iv : piece.intervals) {
      std::size_t begin = pos;
      while (pos < e.size() && iv.contains(e[pos])) ++pos;
      if (pos == begin) throw std::invalid_argument("reduce_by_prefix: edge misses a part");
      f.insert(f.end(), e.begin() + begin, e.begin() + pos - 1);
    }
    if (pos != e.size()) throw std::invalid_argument("reduce_by_prefix: edge leaves the parts");
    f_values.push_back(std::move(f));
  }

  std::map<Edge, std::uint64_t> counts;
  for (const auto& f : f_values) ++counts[f];
  PrefixReduction out;
  for (const auto& [f, c] : counts) {
    if (c > out.support) {
      out.support = c;
      out.prefix = f;
    }
  }
  std::vector<Vertex> flat;
  std::size_t i = 0;
  for (auto e : piece.sub.edges()) {
    if (f_values[i++] == out.prefix) {
      for (auto v : e) {
        if (!std::binary_search(out.prefix.begin(), out.prefix.end(), v)) flat.push_back(v);
      }
    }
  }
  out.reduced = OrderedHypergraph::from_flat(piece.sub.n(), k, std::move(flat));
  return out;
}

namespace {

Json big_to_json(const BigInt& x) {
  if (x <= BigInt(INT64_MAX) && x >= BigInt(INT64_MIN)) return x.convert_to<std::int64_t>();
  return x.str();
}

Json piece_json(const Piece& p) {
  Json j;
  j["level"] = p.level;
  j["intervals"] = intervals_to_json(p.intervals);
  j["edges"] = to_json(p.sub)["edges"];
  return j;
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json j;
  j["k"] = d.k;
  j["g"] = d.g;
  Json pieces = Json::array();
  for (const auto& p : d.pieces) pieces.push_back(piece_json(p));
  j["pieces"] = std::move(pieces);
  Json counts = Json::object();
  for (std::size_t i = 0; i < d.per_level_counts.size(); ++i) counts[std::to_string(i)] = d.per_level_counts[i];
  j["per_level_counts"] = std::move(counts);
  return j;
}

Json to_json(const DenseWitness& w) {
  Json j = piece_json(w.piece);
  j["m"] = w.m;
  j["edge_count"] = w.piece.sub.edge_count();
  j["alpha"] = w.alpha;
  j["regime"] = to_string(w.regime);
  j["bound"] = w.bound;
  if (w.bound_exact) {
    j["bound_num"] = big_to_json(numerator(*w.bound_exact));
    j["bound_den"] = big_to_json(denominator(*w.bound_exact));
  }
  return j;
}

}  // namespace ordsplit
