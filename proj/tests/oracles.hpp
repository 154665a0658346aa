// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into semikit beyond reading a table.
#ifndef SEMIKIT_TESTS_ORACLES_HPP_
#define SEMIKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "semikit/core.hpp"

namespace oracle {

  using Table = std::vector<std::vector<std::uint32_t>>;
  using Set   = std::set<std::uint32_t>;

  inline Table table_of(semikit::FiniteSemigroup const& S) {
    Table t(S.order(), std::vector<std::uint32_t>(S.order()));
    for (std::uint32_t a = 0; a < S.order(); ++a) {
      for (std::uint32_t b = 0; b < S.order(); ++b) {
        t[a][b] = S(a, b);
      }
    }
    return t;
  }

  inline bool associative(Table const& t) {
    std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
  }

  inline Set everything(Table const& t) {
    Set s;
    for (std::uint32_t x = 0; x < t.size(); ++x) s.insert(x);
    return s;
  }

  // S^1 s, s S^1, S^1 s S^1 straight from the definitions.
  inline Set left_ideal(Table const& t, std::uint32_t s) {
    Set out{s};
    for (std::uint32_t x = 0; x < t.size(); ++x) out.insert(t[x][s]);
    return out;
  }

  inline Set right_ideal(Table const& t, std::uint32_t s) {
    Set out{s};
    for (std::uint32_t x = 0; x < t.size(); ++x) out.insert(t[s][x]);
    return out;
  }

  inline Set two_sided_ideal(Table const& t, std::uint32_t s) {
    Set out;
    for (std::uint32_t a : left_ideal(t, s))
      for (std::uint32_t b : right_ideal(t, a)) out.insert(b);
    return out;
  }

  // Class id = index of the least element with the same key, renumbered
  // densely in order of first appearance.
  template <typename Key>
  std::vector<std::uint32_t> partition_by(std::size_t n, Key key) {
    std::vector<std::uint32_t> out(n);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < n; ++x) {
      auto it = std::find_if(reps.begin(), reps.end(),
                             [&](std::uint32_t r) { return key(r) == key(x); });
      if (it == reps.end()) {
        out[x] = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
      } else {
        out[x] = static_cast<std::uint32_t>(it - reps.begin());
      }
    }
    return out;
  }

  inline std::vector<std::uint32_t> green_l(Table const& t) {
    return partition_by(t.size(), [&](std::uint32_t x) { return left_ideal(t, x); });
  }
  inline std::vector<std::uint32_t> green_r(Table const& t) {
    return partition_by(t.size(), [&](std::uint32_t x) { return right_ideal(t, x); });
  }
  inline std::vector<std::uint32_t> green_j(Table const& t) {
    return partition_by(t.size(), [&](std::uint32_t x) { return two_sided_ideal(t, x); });
  }
  inline std::vector<std::uint32_t> green_h(Table const& t) {
    return partition_by(t.size(), [&](std::uint32_t x) {
      return std::make_pair(left_ideal(t, x), right_ideal(t, x));
    });
  }
  // D as the relation R o L read off pairwise.
  inline std::vector<std::uint32_t> green_d(Table const& t) {
    std::size_t n = t.size();
    auto        related = [&](std::uint32_t a, std::uint32_t b) {
      for (std::uint32_t c = 0; c < n; ++c)
        if (right_ideal(t, a) == right_ideal(t, c) && left_ideal(t, c) == left_ideal(t, b))
          return true;
      return false;
    };
    std::vector<std::uint32_t> out(n), reps;
    for (std::uint32_t x = 0; x < n; ++x) {
      auto it = std::find_if(reps.begin(), reps.end(),
                             [&](std::uint32_t r) { return related(r, x); });
      out[x] = it == reps.end() ? static_cast<std::uint32_t>(reps.size())
                                : static_cast<std::uint32_t>(it - reps.begin());
      if (it == reps.end()) reps.push_back(x);
    }
    return out;
  }

  inline std::vector<Set> subsets(std::size_t n) {
    std::vector<Set> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
      Set s;
      for (std::uint32_t x = 0; x < n; ++x)
        if (bits >> x & 1) s.insert(x);
      out.push_back(s);
    }
    return out;
  }

  inline bool closed(Table const& t, Set const& s) {
    for (auto a : s)
      for (auto b : s)
        if (!s.count(t[a][b])) return false;
    return true;
  }
  inline bool is_left_ideal(Table const& t, Set const& s) {
    for (std::uint32_t x = 0; x < t.size(); ++x)
      for (auto a : s)
        if (!s.count(t[x][a])) return false;
    return true;
  }
  inline bool is_right_ideal(Table const& t, Set const& s) {
    for (std::uint32_t x = 0; x < t.size(); ++x)
      for (auto a : s)
        if (!s.count(t[a][x])) return false;
    return true;
  }
  inline bool is_ideal(Table const& t, Set const& s) {
    return is_left_ideal(t, s) && is_right_ideal(t, s);
  }

  inline bool contains(Set const& big, Set const& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  }

  // Minimal among all subsets with the given property, by full scan.
  template <typename Pred>
  bool minimal_by_scan(Table const& t, Set const& s, Pred pred) {
    if (!pred(t, s)) return false;
    for (auto const& sub : subsets(t.size()))
      if (sub.size() < s.size() && contains(s, sub) && pred(t, sub)) return false;
    return true;
  }

  // Intersection of all two-sided ideals.
  inline Set kernel(Table const& t) {
    Set k = everything(t);
    for (auto const& s : subsets(t.size())) {
      if (is_ideal(t, s)) {
        Set meet;
        std::set_intersection(k.begin(), k.end(), s.begin(), s.end(),
                              std::inserter(meet, meet.begin()));
        k = meet;
      }
    }
    return k;
  }

  inline std::vector<Set> subsemigroups(Table const& t) {
    std::vector<Set> out;
    for (auto const& s : subsets(t.size()))
      if (closed(t, s)) out.push_back(s);
    return out;
  }

  inline std::vector<std::uint32_t> flatten(Table const& t) {
    std::vector<std::uint32_t> out;
    for (auto const& row : t) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  // Least flattened relabeling, no pruning.
  inline std::vector<std::uint32_t> canonical(Table const& t) {
    std::size_t                n = t.size();
    std::vector<std::uint32_t> p(n), inv(n), best;
    std::iota(p.begin(), p.end(), 0u);
    do {
      for (std::uint32_t x = 0; x < n; ++x) inv[p[x]] = x;
      std::vector<std::uint32_t> flat(n * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) flat[a * n + b] = p[t[inv[a]][inv[b]]];
      if (best.empty() || flat < best) best = flat;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  // Isomorphism classes among all n^(n*n) tables.
  inline std::size_t census_count(std::size_t n) {
    std::size_t const                    cells = n * n;
    std::vector<std::uint32_t>           flat(cells, 0);
    std::set<std::vector<std::uint32_t>> seen;
    while (true) {
      Table t(n, std::vector<std::uint32_t>(n));
      for (std::size_t k = 0; k < cells; ++k) t[k / n][k % n] = flat[k];
      if (associative(t)) seen.insert(canonical(t));
      std::size_t k = 0;
      while (k < cells && ++flat[k] == n) flat[k++] = 0;
      if (k == cells) break;
    }
    return seen.size();
  }

  inline std::size_t subgroup_count(Table const& g, std::uint32_t identity) {
    std::size_t count = 0;
    for (auto const& s : subsets(g.size()))
      if (s.count(identity) && closed(g, s)) ++count;
    return count;
  }

}  // namespace oracle

#endif  // SEMIKIT_TESTS_ORACLES_HPP_
