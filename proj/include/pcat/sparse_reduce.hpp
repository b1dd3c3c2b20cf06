#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace pcat {

/// Row index of a sparse column: a packed chain.
using ChainKey = unsigned __int128;

struct ChainKeyHash {
  std::size_t operator()(ChainKey k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL + (lo << 6) + (lo >> 2)));
  }
};

/// Coefficients in F_p, p < 2^16.
struct ModPOps {
  using Coef = std::uint32_t;
  std::uint32_t p = 2;

  Coef from_int(long v) const { return static_cast<Coef>(((v % static_cast<long>(p)) + p) % p); }
  bool is_zero(Coef c) const { return c == 0; }
  Coef mul(Coef a, Coef b) const { return (a * b) % p; }
  Coef add(Coef a, Coef b) const { return (a + b) % p; }
  Coef neg(Coef a) const { return a == 0 ? 0 : p - a; }
  Coef inv(Coef a) const {
    Coef r = 1, base = a;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
};

/// Integer coefficients with fraction-free elimination; ranks agree with Q.
struct IntegerOps {
  using Coef = mpz_class;

  Coef from_int(long v) const { return Coef(v); }
  bool is_zero(const Coef& c) const { return sgn(c) == 0; }
};

/// Integer coefficients in 64 bits; elimination throws IntegerOverflow
/// instead of wrapping, so callers can retry with IntegerOps.
struct Int64Ops {
  using Coef = std::int64_t;

  Coef from_int(long v) const { return v; }
  bool is_zero(Coef c) const { return c == 0; }
};

struct IntegerOverflow {};

template <class Coef>
struct SparseEntry {
  ChainKey key;
  Coef coef;
};

template <class Coef>
using SparseColumn = std::vector<SparseEntry<Coef>>;

/// Sorts by key and merges duplicate keys, dropping zero sums.
template <class Ops>
void canonicalize(const Ops& ops, SparseColumn<typename Ops::Coef>& col) {
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < col.size();) {
    auto acc = col[r].coef;
    std::size_t s = r + 1;
    for (; s < col.size() && col[s].key == col[r].key; ++s) {
      if constexpr (std::is_same_v<Ops, ModPOps>)
        acc = ops.add(acc, col[s].coef);
      else
        acc += col[s].coef;
    }
    if (!ops.is_zero(acc)) col[w++] = {col[r].key, acc};
    r = s;
  }
  col.resize(w);
}

/// Standard left-to-right column reduction with pivot = largest row key. Each
/// inserted column is reduced against the stored pivots and kept if nonzero.
template <class Ops>
class ColumnReducer {
 public:
  using Coef = typename Ops::Coef;
  using Column = SparseColumn<Coef>;

  explicit ColumnReducer(Ops ops = {}) : ops_(std::move(ops)) {}

  /// Reduces a canonical column. Returns the pivot key if it survives.
  std::optional<ChainKey> insert(Column col) {
    reduce(col);
    if (col.empty()) return std::nullopt;
    if constexpr (std::is_same_v<Ops, ModPOps>) normalize_lead(col);
    const ChainKey piv = col.back().key;
    pivot_.emplace(piv, columns_.size());
    columns_.push_back(std::move(col));
    return piv;
  }

  /// Reduces in place without storing.
  void reduce(Column& col) const {
    while (!col.empty()) {
      auto it = pivot_.find(col.back().key);
      if (it == pivot_.end()) return;
      eliminate(col, columns_[it->second]);
    }
  }

  std::size_t rank() const { return columns_.size(); }
  bool is_pivot(ChainKey k) const { return pivot_.count(k) != 0; }
  const Column& column_with_pivot(ChainKey k) const { return columns_[pivot_.at(k)]; }
  const std::vector<Column>& columns() const { return columns_; }
  const Ops& ops() const { return ops_; }

 private:
  void eliminate(Column& col, const Column& piv) const {
    Column out;
    out.reserve(col.size() + piv.size());
    if constexpr (std::is_same_v<Ops, ModPOps>) {
      // stored pivots are normalized to leading coefficient 1
      const Coef f = ops_.neg(col.back().coef);
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].key < piv[j].key)) {
          out.push_back(col[i++]);
        } else if (i == col.size() || piv[j].key < col[i].key) {
          out.push_back({piv[j].key, ops_.mul(f, piv[j].coef)});
          ++j;
        } else {
          const Coef c = ops_.add(col[i].coef, ops_.mul(f, piv[j].coef));
          if (c != 0) out.push_back({col[i].key, c});
          ++i;
          ++j;
        }
      }
    } else if constexpr (std::is_same_v<Ops, Int64Ops>) {
      const std::int64_t g = std::gcd(col.back().coef, piv.back().coef);
      const std::int64_t a = piv.back().coef / g;
      const std::int64_t b = -(col.back().coef / g);
      auto mul = [](std::int64_t x, std::int64_t y) {
        std::int64_t r;
        if (__builtin_mul_overflow(x, y, &r)) throw IntegerOverflow{};
        return r;
      };
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].key < piv[j].key)) {
          out.push_back({col[i].key, mul(a, col[i].coef)});
          ++i;
        } else if (i == col.size() || piv[j].key < col[i].key) {
          out.push_back({piv[j].key, mul(b, piv[j].coef)});
          ++j;
        } else {
          std::int64_t c;
          if (__builtin_add_overflow(mul(a, col[i].coef), mul(b, piv[j].coef), &c)) throw IntegerOverflow{};
          if (c != 0) out.push_back({col[i].key, c});
          ++i;
          ++j;
        }
      }
      std::int64_t content = 0;
      for (const auto& e : out) {
        content = std::gcd(content, e.coef);
        if (content == 1) break;
      }
      if (content > 1)
        for (auto& e : out) e.coef /= content;
    } else {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), col.back().coef.get_mpz_t(), piv.back().coef.get_mpz_t());
      const mpz_class a = piv.back().coef / g;
      const mpz_class b = -(col.back().coef / g);
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].key < piv[j].key)) {
          out.push_back({col[i].key, a * col[i].coef});
          ++i;
        } else if (i == col.size() || piv[j].key < col[i].key) {
          out.push_back({piv[j].key, b * piv[j].coef});
          ++j;
        } else {
          mpz_class c = a * col[i].coef + b * piv[j].coef;
          if (sgn(c) != 0) out.push_back({col[i].key, std::move(c)});
          ++i;
          ++j;
        }
      }
      mpz_class content;
      for (const auto& e : out) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.coef.get_mpz_t());
        if (content == 1) break;
      }
      if (content > 1)
        for (auto& e : out) mpz_divexact(e.coef.get_mpz_t(), e.coef.get_mpz_t(), content.get_mpz_t());
    }
    col.swap(out);
  }

  void normalize_lead(Column& col) const {
    if (col.empty() || col.back().coef == 1) return;
    const Coef inv = ops_.inv(col.back().coef);
    for (auto& e : col) e.coef = ops_.mul(e.coef, inv);
  }

 private:
  Ops ops_;
  std::vector<Column> columns_;
  std::unordered_map<ChainKey, std::size_t, ChainKeyHash> pivot_;
};

}  // namespace pcat
