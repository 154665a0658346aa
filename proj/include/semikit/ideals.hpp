#ifndef SEMIKIT_IDEALS_HPP_
#define SEMIKIT_IDEALS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"

namespace semikit {

  ////////////////////////////////////////////////////////////////////////
  // Idempotent poset
  ////////////////////////////////////////////////////////////////////////

  //! E(S) under e <= f iff ef = fe = e. The relation is checked to be a
  //! partial order on construction.
  class IdempotentPoset {
   public:
    explicit IdempotentPoset(FiniteSemigroup const& S);

    FiniteSemigroup const& parent() const noexcept {
      return _parent;
    }

    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }

    // Positions refer to elements().
    bool leq_at(std::size_t i, std::size_t j) const {
      return _leq[i * _elements.size() + j];
    }

    bool leq(Element e, Element f) const;

    // Idempotents with nothing strictly below them.
    std::vector<Element> const& primitives() const noexcept {
      return _primitives;
    }

   private:
    FiniteSemigroup      _parent;
    std::vector<Element> _elements;
    std::vector<bool>    _leq;
    std::vector<Element> _primitives;
  };

  IdempotentPoset idempotent_poset(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Minimality of one-sided ideals
  ////////////////////////////////////////////////////////////////////////

  enum class MinimalityMethod {
    automatic,   // exhaustive for n <= 64, criterion above
    exhaustive,  // search for a proper sub-ideal
    criterion,   // every x in the ideal has Sx equal to the ideal
  };

  inline constexpr std::size_t exhaustive_minimality_limit = 64;

  // Above this size the exhaustive search walks principal sub-ideals
  // instead of every subset; both are complete.
  inline constexpr std::size_t subset_scan_limit = 12;

  bool is_minimal_left_ideal(FiniteSemigroup const& S, std::span<Element const> L,
                             MinimalityMethod method = MinimalityMethod::automatic);
  bool is_minimal_right_ideal(FiniteSemigroup const& S, std::span<Element const> R,
                              MinimalityMethod method = MinimalityMethod::automatic);
  bool is_minimal_two_sided_ideal(FiniteSemigroup const& S,
                                  std::span<Element const> I,
                                  MinimalityMethod method = MinimalityMethod::automatic);

  // S x, x S, S x S (no adjoined identity), eSe.
  std::vector<Element> left_translate_set(FiniteSemigroup const& S, Element x);
  std::vector<Element> right_translate_set(FiniteSemigroup const& S, Element x);
  std::vector<Element> two_sided_translate_set(FiniteSemigroup const& S, Element x);
  std::vector<Element> local_submonoid(FiniteSemigroup const& S, Element e);

  ////////////////////////////////////////////////////////////////////////
  // Kernel
  ////////////////////////////////////////////////////////////////////////

  struct MinimalIdealVerdict {
    Element e;
    bool    left_minimal;    // Se is a minimal left ideal
    bool    local_group;     // eSe is a group
    bool    right_minimal;   // eS is a minimal right ideal
    bool    kernel_is_SeS;   // K = SeS
    std::vector<Element> Se;
    std::vector<Element> eS;
    std::vector<Element> eSe;
    std::vector<Element> SeS;

    bool agree() const noexcept {
      return left_minimal == local_group && local_group == right_minimal
             && right_minimal == kernel_is_SeS;
    }

    bool value() const noexcept {
      return left_minimal;
    }
  };

  struct KernelReport {
    SubsetHandle                     kernel;
    std::vector<Element>             kernel_idempotents;
    std::vector<MinimalIdealVerdict> verdicts;  // one per e in E(K)
    std::vector<SubsetHandle>        min_left;
    std::vector<SubsetHandle>        min_right;
  };

  // Intersection of every principal two-sided ideal S^1 s S^1.
  std::vector<Element> kernel_by_intersection(FiniteSemigroup const& S);

  // S^1 z S^1 where z is the product of all elements (z lies in every
  // principal ideal). O(n^2); the members only, no verification.
  std::vector<Element> kernel_members(FiniteSemigroup const& S);

  KernelReport kernel(FiniteSemigroup const& S);

  // Evaluates the four statements independently at an idempotent e and
  // requires them to agree (InvariantViolation otherwise).
  MinimalIdealVerdict
  minimal_ideal_equivalences(FiniteSemigroup const& S, Element e,
                             MinimalityMethod method = MinimalityMethod::automatic);

  // All two-sided ideals by subset scan; n must not exceed cap.
  std::vector<std::vector<Element>> enumerate_ideals(FiniteSemigroup const& S,
                                                     std::size_t cap = 6);

  ////////////////////////////////////////////////////////////////////////
  // Rees quotient and swelling checks
  ////////////////////////////////////////////////////////////////////////

  // S/I with the zero at index 0 and the elements of S \ I following in
  // ascending order; also returns the projection S -> S/I.
  std::pair<FiniteSemigroup, SemigroupMorphism>
  rees_quotient(FiniteSemigroup const& S, SubsetHandle const& I);

  std::pair<FiniteSemigroup, SemigroupMorphism>
  rees_quotient(FiniteSemigroup const& S, std::span<Element const> I);

  struct SwellingVerdict {
    bool                 hypothesis;  // A is contained in tA
    bool                 equal;       // A == tA
    std::vector<Element> tA;
  };

  SwellingVerdict swelling_check(FiniteSemigroup const& S,
                                 std::span<Element const> A, Element t);

}  // namespace semikit

#endif  // SEMIKIT_IDEALS_HPP_
