#ifndef SEMIKIT_SIMPLE_HPP_
#define SEMIKIT_SIMPLE_HPP_

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "core.hpp"

namespace semikit {

  bool is_simple(FiniteSemigroup const& S);
  bool is_completely_simple(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  struct ReesCoordinates {
    std::size_t i;
    Element     g;
    std::size_t lambda;

    friend bool operator==(ReesCoordinates const&, ReesCoordinates const&) = default;
  };

  //! M(I, G, Lambda, P) over the index sets {0..|I|-1}, {0..|Lambda|-1}.
  //! The sandwich matrix is stored Lambda-major: sandwich(lambda, i). The
  //! realized semigroup places (i, g, lambda) at (i * |G| + g) * |Lambda| +
  //! lambda.
  class ReesMatrixSemigroup {
   public:
    ReesMatrixSemigroup(std::size_t i_size, std::size_t lambda_size,
                        FiniteSemigroup group, std::vector<Element> sandwich);

    std::size_t i_size() const noexcept {
      return _i_size;
    }

    std::size_t lambda_size() const noexcept {
      return _lambda_size;
    }

    FiniteSemigroup const& group() const noexcept {
      return _group;
    }

    Element group_identity() const noexcept {
      return _identity;
    }

    std::vector<Element> const& sandwich() const noexcept {
      return _sandwich;
    }

    Element sandwich(std::size_t lambda, std::size_t i) const {
      return _sandwich.at(lambda * _i_size + i);
    }

    FiniteSemigroup const& realized() const noexcept {
      return _realized;
    }

    Element index_of(ReesCoordinates const& c) const noexcept {
      return static_cast<Element>((c.i * _group.order() + c.g) * _lambda_size
                                  + c.lambda);
    }

    ReesCoordinates coordinates(Element x) const noexcept {
      std::size_t const lambda = x % _lambda_size;
      std::size_t const rest   = x / _lambda_size;
      return {rest / _group.order(), static_cast<Element>(rest % _group.order()),
              lambda};
    }

   private:
    std::size_t          _i_size;
    std::size_t          _lambda_size;
    FiniteSemigroup      _group;
    Element              _identity;
    std::vector<Element> _sandwich;
    FiniteSemigroup      _realized;
  };

  ReesMatrixSemigroup rees_construct(std::size_t i_size, std::size_t lambda_size,
                                     FiniteSemigroup const&      group,
                                     std::vector<Element> const& sandwich);

  // Re-bases P so that the first row and column are the identity; returns
  // the normalized semigroup and the isomorphism from the original.
  std::pair<ReesMatrixSemigroup, SemigroupMorphism>
  normalize(ReesMatrixSemigroup const& rms);

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  // Outcome of evaluating a closed-form candidate for the inverse of phi on
  // every element: agreements, disagreements, and elements where an inverse
  // would have to be taken outside the group H_e.
  struct ClosedFormDiagnostic {
    std::size_t agree     = 0;
    std::size_t disagree  = 0;
    std::size_t undefined = 0;

    bool reproduces_inverse() const noexcept {
      return disagree == 0 && undefined == 0;
    }
  };

  struct ReesDecomposition {
    FiniteSemigroup     source;
    Element             e;
    std::vector<Element> i_elements;       // Se meet E(S), ascending
    std::vector<Element> lambda_elements;  // eS meet E(S), ascending
    std::vector<Element> group_elements;   // H_e = eSe, ascending
    ReesMatrixSemigroup rms;
    SemigroupMorphism   phi;  // rms.realized() -> source, (i, g, l) -> i g l
    SemigroupMorphism   psi;  // inverse of phi
    // s -> (s (ses)^-1, ses, (ese)^-1 s)
    ClosedFormDiagnostic printed_inverse;
    // s -> (s (ese)^-1, ese, (ese)^-1 s)
    ClosedFormDiagnostic ese_inverse;
  };

  // Defaults to the least idempotent.
  ReesDecomposition rees_decompose(FiniteSemigroup const& S,
                                   std::optional<Element> e = std::nullopt);

  struct SubsemigroupDecomposition {
    SubsetHandle      J;      // Te meet E(T), inside I of S
    SubsetHandle      W;      // T meet H_e, a subgroup of G
    SubsetHandle      Gamma;  // eT meet E(T), inside Lambda of S
    ReesDecomposition own;    // decomposition of T re-tabled
    ReesDecomposition parent;  // decomposition of S at the same e
  };

  SubsemigroupDecomposition subsemigroup_decompose(FiniteSemigroup const& S,
                                                   SubsetHandle const&    T);

  ////////////////////////////////////////////////////////////////////////
  // Bands and counting
  ////////////////////////////////////////////////////////////////////////

  struct BandPredicates {
    bool is_band;
    bool is_rectangular_band;
    bool is_rectangular_group;
  };

  BandPredicates band_predicates(FiniteSemigroup const& S);

  struct HFiniteness {
    std::size_t h_class_count;
    std::size_t i_size;
    std::size_t lambda_size;
    // Always true for finite semigroups; the dichotomy only bites when I or
    // Lambda is infinite.
    bool h_finite;
  };

  HFiniteness h_finiteness(FiniteSemigroup const& S);

  inline constexpr std::size_t default_subsemigroup_cap = 16;

  // Every nonempty product-closed subset, sorted. On completely simple input
  // each result is classified with subsemigroup_decompose and the total is
  // checked against sum over subgroups W of 2^|I| 2^|Lambda|.
  std::vector<SubsetHandle>
  enumerate_subsemigroups(FiniteSemigroup const& S,
                          std::size_t            cap = default_subsemigroup_cap);

  // Same search without the classification assertions.
  std::vector<std::vector<Element>>
  subsemigroup_sets(FiniteSemigroup const& S,
                    std::size_t            cap = default_subsemigroup_cap);

  // sum over subgroups W of G of 2^|I| * 2^|Lambda|.
  std::size_t subsemigroup_count_bound(FiniteSemigroup const& S);

  // A subsemigroup of a finite group contains the identity and is closed
  // under inverses; false means that failed.
  bool subsemigroup_of_group_check(FiniteSemigroup const& G, SubsetHandle const& T);

}  // namespace semikit

#endif  // SEMIKIT_SIMPLE_HPP_
