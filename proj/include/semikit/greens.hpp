#ifndef SEMIKIT_GREENS_HPP_
#define SEMIKIT_GREENS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace semikit {

  using ClassId = std::uint32_t;

  enum class Relation : std::size_t { L = 0, R = 1, J = 2, H = 3, D = 4 };

  inline constexpr std::array<Relation, 5> all_relations
      = {Relation::L, Relation::R, Relation::J, Relation::H, Relation::D};

  char to_char(Relation rel) noexcept;

  struct PrincipalIdeals {
    SubsetHandle left;       // S^1 s
    SubsetHandle right;      // s S^1
    SubsetHandle two_sided;  // S^1 s S^1
  };

  PrincipalIdeals principal_ideals(FiniteSemigroup const& S, Element s);

  // Membership masks of the principal ideals without role bookkeeping.
  std::vector<bool> principal_left_mask(FiniteSemigroup const& S, Element s);
  std::vector<bool> principal_right_mask(FiniteSemigroup const& S, Element s);
  std::vector<bool> principal_two_sided_mask(FiniteSemigroup const& S, Element s);

  // Class arrays for one relation: class ids are dense and numbered in
  // ascending order of the least element of each class.
  using Partition = std::vector<ClassId>;

  // Normalises arbitrary labels into the ascending-least-element numbering.
  Partition canonical_partition(std::vector<std::size_t> const& labels);

  enum class GreensMethod {
    automatic,         // principal_ideals for n <= 64, scc above
    principal_ideals,  // compare principal ideal sets element by element
    scc,               // strongly connected components of translation graphs
  };

  inline constexpr std::size_t principal_ideal_method_limit = 64;

  Partition l_partition(FiniteSemigroup const& S, GreensMethod method);
  Partition r_partition(FiniteSemigroup const& S, GreensMethod method);
  Partition j_partition(FiniteSemigroup const& S, GreensMethod method);

  // One D-class laid out with its R-classes as rows and L-classes as
  // columns. rows and columns hold R- and L-class ids in ascending order;
  // cells[r][c] is the id of the H-class in that position.
  struct EggBox {
    ClassId                           d_class;
    std::vector<ClassId>              rows;
    std::vector<ClassId>              columns;
    std::vector<std::vector<ClassId>> cells;
  };

  //! The five Green's relations of a finite semigroup. Construction verifies
  //! every structural invariant: each array is a partition, H = L meet R,
  //! D = RoL = LoR, the refinement chain H <= L, R <= D <= J, D = J, every
  //! egg-box cell is nonempty and H-classes in a D-class have equal size.
  class GreensStructure {
   public:
    explicit GreensStructure(FiniteSemigroup const& S,
                             GreensMethod method = GreensMethod::automatic);

    FiniteSemigroup const& parent() const noexcept {
      return _parent;
    }

    Partition const& classes(Relation rel) const noexcept {
      return _class[static_cast<std::size_t>(rel)];
    }

    ClassId class_of(Relation rel, Element x) const noexcept {
      return _class[static_cast<std::size_t>(rel)][x];
    }

    std::vector<std::vector<Element>> const& members(Relation rel) const noexcept {
      return _members[static_cast<std::size_t>(rel)];
    }

    std::vector<Element> const& members(Relation rel, ClassId id) const {
      return _members[static_cast<std::size_t>(rel)].at(id);
    }

    std::size_t count(Relation rel) const noexcept {
      return _members[static_cast<std::size_t>(rel)].size();
    }

    bool related(Relation rel, Element a, Element b) const noexcept {
      return class_of(rel, a) == class_of(rel, b);
    }

    std::vector<EggBox> const& eggboxes() const noexcept {
      return _eggboxes;
    }

    EggBox const& eggbox(ClassId d_class) const {
      return _eggboxes.at(d_class);
    }

    // True when the H-class contains an idempotent.
    bool is_group_h_class(ClassId h_class) const;

    // J-order on D-classes: d1 >= d2 when the principal ideal of d2 is
    // contained in that of d1. Returns the covering pairs (upper, lower).
    std::vector<std::pair<ClassId, ClassId>> j_order_covers() const;

   private:
    FiniteSemigroup                                  _parent;
    std::array<Partition, 5>                         _class;
    std::array<std::vector<std::vector<Element>>, 5> _members;
    std::vector<EggBox>                              _eggboxes;
    std::vector<bool>                                _h_group;
  };

  GreensStructure greens_structure(FiniteSemigroup const& S,
                                   GreensMethod method = GreensMethod::automatic);

  // The partitions R o L and L o R, computed as relations and read back as
  // partitions. Both equal D in every semigroup (finite or not).
  Partition compose_r_then_l(FiniteSemigroup const& S, GreensStructure const& G);
  Partition compose_l_then_r(FiniteSemigroup const& S, GreensStructure const& G);

  std::string eggbox_dot(GreensStructure const& G);

  // Aligned ASCII rendering of every egg-box, one block per D-class.
  std::string eggbox_text(GreensStructure const& G);

  // Checks that h is an H-class, then evaluates both characterisations of
  // group H-classes (contains an idempotent / closed and a group) and
  // requires them to agree.
  bool h_class_is_group(FiniteSemigroup const& S, SubsetHandle const& h);

  std::optional<Element> regular_witness(FiniteSemigroup const& S, Element s);
  bool                   is_regular(FiniteSemigroup const& S, Element s);
  bool                   is_regular_semigroup(FiniteSemigroup const& S);

  struct RestrictionViolation {
    Relation relation;
    Element  a;  // parent element indices
    Element  b;
    bool     related_in_subsemigroup;
    bool     related_in_parent;
  };

  struct RestrictionReport {
    bool                              holds;
    std::vector<RestrictionViolation> violations;
  };

  // For a regular subsemigroup T of S, compares L, R and H computed inside
  // T with the restrictions of the corresponding relations of S.
  RestrictionReport greens_restriction_check(FiniteSemigroup const& S,
                                             SubsetHandle const&    T);

  struct StabilityReport {
    bool right;
    bool left;
    // First (s, x) breaking either implication.
    std::optional<std::pair<Element, Element>> witness;
  };

  StabilityReport is_stable(FiniteSemigroup const& S, GreensStructure const& G);
  StabilityReport is_stable(FiniteSemigroup const& S);

}  // namespace semikit

#endif  // SEMIKIT_GREENS_HPP_
