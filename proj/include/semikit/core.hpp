#ifndef SEMIKIT_CORE_HPP_
#define SEMIKIT_CORE_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semikit {

  //! Orders up to this bound get the direct O(n^3) associativity check;
  //! above it Light's test runs against a computed generating set.
  inline constexpr std::size_t direct_associativity_limit = 256;

  inline constexpr std::size_t builtin_max_order = 4096;

  //! The order cap used when none is passed explicitly: SEMIKIT_MAX_ORDER if
  //! set to a positive integer, otherwise builtin_max_order.
  std::size_t default_max_order();

  using Triple = std::array<Element, 3>;

  // First (a, b, c) in lexicographic order with (ab)c != a(bc).
  std::optional<Triple> find_associativity_failure(std::size_t n,
                                                   std::span<Element const> table);

  // Light's test: for every generator g, (xg)y == x(gy) for all x, y.
  // Returns a failing (x, g, y) if any.
  std::optional<Triple> light_associativity_failure(std::size_t n,
                                                    std::span<Element const> table,
                                                    std::span<Element const> generators);

  // A generating set of the magma given by the table, chosen greedily in
  // ascending element order.
  std::vector<Element> greedy_generating_set(std::size_t n,
                                             std::span<Element const> table);

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  //! A finite semigroup on the elements 0, ..., n - 1 given by its Cayley
  //! table. Instances are immutable and share their table on copy.
  class FiniteSemigroup {
   public:
    // Validates the range of every entry and associativity.
    static FiniteSemigroup from_table(std::size_t               n,
                                      std::vector<Element>      entries,
                                      std::string               name = {},
                                      std::optional<std::size_t> max_order = {});

    static FiniteSemigroup
    from_rows(std::vector<std::vector<Element>> const& rows,
              std::string                              name = {});

    std::size_t order() const noexcept {
      return _data->n;
    }

    Element operator()(Element a, Element b) const noexcept {
      return _data->table[static_cast<std::size_t>(a) * _data->n + b];
    }

    Element product(Element a, Element b) const;

    std::span<Element const> row(Element a) const noexcept {
      return {_data->table.data() + static_cast<std::size_t>(a) * _data->n,
              _data->n};
    }

    std::span<Element const> table() const noexcept {
      return _data->table;
    }

    std::string const& name() const noexcept {
      return _data->name;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    FiniteSemigroup with_name(std::string name) const;
    FiniteSemigroup with_labels(std::vector<std::string> labels) const;

    bool contains(Element a) const noexcept {
      return a < _data->n;
    }

    // Table equality; names and labels are ignored.
    friend bool operator==(FiniteSemigroup const& x, FiniteSemigroup const& y) {
      return x._data->table == y._data->table;
    }

   private:
    struct Data {
      std::size_t              n;
      std::vector<Element>     table;
      std::string              name;
      std::vector<std::string> labels;
    };

    explicit FiniteSemigroup(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  ////////////////////////////////////////////////////////////////////////
  // SubsetHandle
  ////////////////////////////////////////////////////////////////////////

  enum class SubsetRole {
    subsemigroup,
    left_ideal,
    right_ideal,
    two_sided_ideal,
    idempotents,
    kernel,
    h_class,
    center,
    centralizer,
    monogenic,
    generic,
  };

  std::string_view to_string(SubsetRole role) noexcept;

  //! A sorted, duplicate-free subset of a semigroup's elements tagged with
  //! the role it plays. Construction verifies the closure property implied
  //! by the role (ideal roles absorb products, subsemigroup-like roles are
  //! closed, idempotents are idempotent).
  class SubsetHandle {
   public:
    SubsetHandle(FiniteSemigroup parent, std::vector<Element> members,
                 SubsetRole role);

    FiniteSemigroup const& parent() const noexcept {
      return _parent;
    }

    std::vector<Element> const& members() const noexcept {
      return _members;
    }

    SubsetRole role() const noexcept {
      return _role;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool empty() const noexcept {
      return _members.empty();
    }

    bool contains(Element x) const;

    // Membership as a dense mask over the parent's elements.
    std::vector<bool> mask() const;

    friend bool operator==(SubsetHandle const& x, SubsetHandle const& y) {
      return x._members == y._members;
    }

   private:
    FiniteSemigroup      _parent;
    std::vector<Element> _members;
    SubsetRole           _role;
  };

  // Subset predicates over plain sorted member lists.
  bool is_closed(FiniteSemigroup const& S, std::span<Element const> members);
  bool is_left_ideal(FiniteSemigroup const& S, std::span<Element const> members);
  bool is_right_ideal(FiniteSemigroup const& S, std::span<Element const> members);
  bool is_two_sided_ideal(FiniteSemigroup const& S,
                          std::span<Element const> members);

  std::vector<Element> members_of(std::vector<bool> const& mask);

  ////////////////////////////////////////////////////////////////////////
  // SemigroupMorphism
  ////////////////////////////////////////////////////////////////////////

  class SemigroupMorphism {
   public:
    SemigroupMorphism(FiniteSemigroup source, FiniteSemigroup target,
                      std::vector<Element> map);

    static SemigroupMorphism identity(FiniteSemigroup const& S);

    FiniteSemigroup const& source() const noexcept {
      return _source;
    }

    FiniteSemigroup const& target() const noexcept {
      return _target;
    }

    std::vector<Element> const& map() const noexcept {
      return _map;
    }

    Element operator()(Element x) const noexcept {
      return _map[x];
    }

    bool is_homomorphism() const noexcept {
      return _is_homomorphism;
    }

    bool is_injective() const noexcept {
      return _is_injective;
    }

    bool is_surjective() const noexcept {
      return _is_surjective;
    }

    bool is_bijection() const noexcept {
      return _is_injective && _is_surjective;
    }

    bool is_isomorphism() const noexcept {
      return is_bijection() && _is_homomorphism;
    }

    // First (a, b) with map(ab) != map(a)map(b), if any.
    std::optional<std::pair<Element, Element>> homomorphism_failure() const;

    // Requires a bijection.
    SemigroupMorphism inverse() const;

    // x -> next(this(x)).
    SemigroupMorphism then(SemigroupMorphism const& next) const;

   private:
    FiniteSemigroup      _source;
    FiniteSemigroup      _target;
    std::vector<Element> _map;
    bool                 _is_homomorphism;
    bool                 _is_injective;
    bool                 _is_surjective;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  // S itself with the identity morphism when S is already a monoid,
  // otherwise S^1 (new identity at index n) with the inclusion.
  std::pair<FiniteSemigroup, SemigroupMorphism>
  adjoin_identity(FiniteSemigroup const& S);

  // (a, b) sits at index a * |B| + b.
  FiniteSemigroup direct_product(FiniteSemigroup const&     A,
                                 FiniteSemigroup const&     B,
                                 std::optional<std::size_t> max_order = {});

  SubsetHandle closure(FiniteSemigroup const& S, std::span<Element const> gens);

  // Closure of an already-closed set together with extra elements.
  std::vector<Element> extend_closure(FiniteSemigroup const&   S,
                                      std::vector<bool>&       mask,
                                      std::span<Element const> extra);

  SubsetHandle idempotents(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, Element e);

  enum class CancellationSide { left, right };

  struct CancellationWitness {
    CancellationSide side;
    // left: c*a == c*b; right: a*c == b*c; always a < b.
    Element a;
    Element b;
    Element c;
  };

  struct CancellativeReport {
    bool                               left;
    bool                               right;
    std::optional<CancellationWitness> witness;
  };

  CancellativeReport is_cancellative(FiniteSemigroup const& S);

  std::optional<Element> is_monoid(FiniteSemigroup const& S);
  bool                   is_group(FiniteSemigroup const& S);

  // Two-sided inverse of x with respect to the identity of a group.
  Element group_inverse(FiniteSemigroup const& G, Element x);

  SubsetHandle center(FiniteSemigroup const& S);
  SubsetHandle centralizer(FiniteSemigroup const& S, Element a);

  struct MonogenicInfo {
    SubsetHandle subset;
    // s^index == s^(index + period), both minimal.
    std::size_t index;
    std::size_t period;
    Element     idempotent;
  };

  MonogenicInfo monogenic(FiniteSemigroup const& S, Element s);

  bool is_commutative(FiniteSemigroup const& S);

  // The subsemigroup T re-tabled on 0, ..., |T| - 1 (ascending source order)
  // together with the inclusion morphism into S.
  std::pair<FiniteSemigroup, SemigroupMorphism>
  induced_subsemigroup(FiniteSemigroup const& S, std::span<Element const> T);

  // The semigroup with the same elements and product a * b := b a.
  FiniteSemigroup opposite(FiniteSemigroup const& S);

  // Search for an isomorphism A -> B by backtracking over bijections.
  std::optional<SemigroupMorphism> find_isomorphism(FiniteSemigroup const& A,
                                                    FiniteSemigroup const& B);

}  // namespace semikit

#endif  // SEMIKIT_CORE_HPP_
