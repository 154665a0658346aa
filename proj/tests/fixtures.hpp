#ifndef SEMIKIT_TESTS_FIXTURES_HPP_
#define SEMIKIT_TESTS_FIXTURES_HPP_

#include <optional>
#include <vector>

#include "semikit/core.hpp"
#include "semikit/error.hpp"

namespace fixtures {

  using semikit::Element;
  using semikit::FiniteSemigroup;

  inline FiniteSemigroup trivial() {
    return FiniteSemigroup::from_rows({{0}}, "trivial");
  }

  inline FiniteSemigroup z3() {
    return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "Z3");
  }

  inline FiniteSemigroup l2() {
    return FiniteSemigroup::from_rows({{0, 0}, {1, 1}}, "L2");
  }

  inline FiniteSemigroup t2() {
    return FiniteSemigroup::from_rows(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}}, "T2");
  }

  inline FiniteSemigroup pb() {
    return FiniteSemigroup::from_rows(
        {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 2, 2}, {1, 1, 3, 3}}, "PB");
  }

  inline FiniteSemigroup rb22() {
    return FiniteSemigroup::from_rows(
        {{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}}, "RB22");
  }

  inline FiniteSemigroup cyclic(std::size_t k) {
    std::vector<std::vector<Element>> rows(k, std::vector<Element>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) rows[a][b] = static_cast<Element>((a + b) % k);
    return FiniteSemigroup::from_rows(rows);
  }

  inline std::vector<Element> all(FiniteSemigroup const& S) {
    std::vector<Element> out(S.order());
    for (Element x = 0; x < S.order(); ++x) out[x] = x;
    return out;
  }

  // Kind of the semikit::Error thrown by f, if any.
  template <typename F>
  std::optional<semikit::ErrorKind> error_kind(F&& f) {
    try {
      f();
    } catch (semikit::Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

}  // namespace fixtures

#endif  // SEMIKIT_TESTS_FIXTURES_HPP_
