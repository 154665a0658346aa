#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semikit/corpus.hpp"
#include "semikit/greens.hpp"

using namespace semikit;
using namespace fixtures;
using V  = std::vector<Element>;
using VV = std::vector<V>;

namespace {
  std::size_t count_of(std::string const& text, std::string const& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos      = text.find(needle, pos + 1))
      ++n;
    return n;
  }
}  // namespace

TEST_CASE("principal ideals") {
  auto l = principal_ideals(l2(), 0);
  CHECK(l.left.members() == V{0, 1});
  CHECK(l.right.members() == V{0});
  CHECK(l.two_sided.members() == V{0, 1});
  auto z = principal_ideals(z3(), 1);
  CHECK(z.left.members() == V{0, 1, 2});
  CHECK(z.right.members() == V{0, 1, 2});
  CHECK(z.two_sided.members() == V{0, 1, 2});
  auto t = principal_ideals(t2(), 2);
  CHECK(t.left.members() == V{2, 3});
  CHECK(t.right.members() == V{2});
  CHECK(t.two_sided.members() == V{2, 3});
  CHECK(t.left.role() == SubsetRole::left_ideal);
}

TEST_CASE("Green's relations of the fixtures") {
  GreensStructure Z(z3());
  for (Relation r : all_relations) CHECK(Z.count(r) == 1);

  GreensStructure R(rb22());
  CHECK(R.members(Relation::R) == VV{{0, 1}, {2, 3}});
  CHECK(R.members(Relation::L) == VV{{0, 2}, {1, 3}});
  CHECK(R.members(Relation::H) == VV{{0}, {1}, {2}, {3}});
  CHECK(R.members(Relation::D) == VV{{0, 1, 2, 3}});
  CHECK(R.members(Relation::J) == VV{{0, 1, 2, 3}});

  GreensStructure T(t2());
  CHECK(T.members(Relation::D) == VV{{0, 1}, {2, 3}});
  CHECK(T.members(Relation::R) == VV{{0, 1}, {2}, {3}});
  CHECK(T.members(Relation::L) == VV{{0, 1}, {2, 3}});
  CHECK(T.class_of(Relation::D, 3) == 1);
}

TEST_CASE("class ids follow the least element") {
  GreensStructure T(t2());
  for (Relation r : all_relations) {
    auto const& cls = T.members(r);
    for (std::size_t k = 1; k < cls.size(); ++k) CHECK(cls[k - 1][0] < cls[k][0]);
  }
}

TEST_CASE("egg-boxes") {
  GreensStructure R(rb22());
  REQUIRE(R.eggboxes().size() == 1);
  auto const& box = R.eggbox(0);
  CHECK(box.rows.size() == 2);
  CHECK(box.columns.size() == 2);
  for (auto const& row : box.cells)
    for (ClassId h : row) CHECK(R.is_group_h_class(h));

  GreensStructure T(t2());
  CHECK(T.eggboxes().size() == 2);
  CHECK(T.eggbox(1).rows.size() == 2);
  CHECK(T.eggbox(1).columns.size() == 1);
  CHECK(T.j_order_covers() == std::vector<std::pair<ClassId, ClassId>>{{0, 1}});
}

TEST_CASE("egg-box DOT output") {
  auto one = eggbox_dot(GreensStructure(trivial()));
  CHECK(count_of(one, "[label=\"") == 1);
  CHECK(count_of(one, "->") == 0);

  auto t = eggbox_dot(GreensStructure(t2()));
  CHECK(count_of(t, "subgraph cluster_") == 2);
  CHECK(t.find("[label=\"2*\"]") != std::string::npos);
  CHECK(t.find("[label=\"3*\"]") != std::string::npos);
  CHECK(count_of(t, "->") == 1);

  auto r = eggbox_dot(GreensStructure(rb22()));
  CHECK(count_of(r, "subgraph cluster_") == 1);
  CHECK(count_of(r, "*\"]") == 4);
  CHECK(count_of(r, "rank=same") == 2);
  CHECK(r == eggbox_dot(GreensStructure(rb22())));
}

TEST_CASE("egg-box text grid") {
  auto text = eggbox_text(GreensStructure(rb22()));
  CHECK(text.find("| 0* | 1* |") != std::string::npos);
  CHECK(text.find("| 2* | 3* |") != std::string::npos);
}

TEST_CASE("group H-classes") {
  CHECK(h_class_is_group(z3(), SubsetHandle(z3(), V{0, 1, 2}, SubsetRole::h_class)));
  CHECK(h_class_is_group(t2(), SubsetHandle(t2(), V{2}, SubsetRole::h_class)));
  for (Element x = 0; x < 4; ++x)
    CHECK(h_class_is_group(pb(), SubsetHandle(pb(), V{x}, SubsetRole::h_class)));
  CHECK(error_kind([] {
          h_class_is_group(t2(), SubsetHandle(t2(), V{2, 3}, SubsetRole::generic));
        })
        == ErrorKind::not_an_h_class);
}

TEST_CASE("regularity") {
  auto const T = t2();
  auto const E = idempotents(T);
  for (Element e : E.members()) CHECK(is_regular(T, e));
  CHECK(is_regular(z3(), 1));
  // 2 in Z4 under multiplication mod 4 is not regular.
  auto M4 = FiniteSemigroup::from_rows(
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}});
  CHECK(!is_regular(M4, 2));
  CHECK(!is_regular_semigroup(M4));
  for (auto const& S : census(3).semigroups) {
    for (Element s = 0; s < S.order(); ++s) {
      bool brute = false;
      for (Element t = 0; t < S.order(); ++t) brute |= S(S(s, t), s) == s;
      CHECK(is_regular(S, s) == brute);
    }
  }
}

TEST_CASE("restriction to regular subsemigroups") {
  auto S = t2();
  auto r = greens_restriction_check(S, SubsetHandle(S, V{0, 1}, SubsetRole::subsemigroup));
  CHECK(r.holds);
  auto whole = greens_restriction_check(S, SubsetHandle(S, all(S), SubsetRole::subsemigroup));
  CHECK(whole.holds);
  auto ZR = direct_product(z3(), rb22());
  for (auto const& T : subsemigroup_sets(ZR, 12))
    CHECK(greens_restriction_check(ZR, SubsetHandle(ZR, T, SubsetRole::subsemigroup)).holds);
  auto M4 = FiniteSemigroup::from_rows(
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}});
  CHECK(error_kind([&] {
          greens_restriction_check(M4, SubsetHandle(M4, V{0, 2}, SubsetRole::subsemigroup));
        })
        == ErrorKind::not_regular_subsemigroup);
}

TEST_CASE("stability") {
  for (auto const& S : {z3(), pb(), t2(), rb22()}) {
    auto st = is_stable(S);
    CHECK(st.right);
    CHECK(st.left);
    CHECK(!st.witness);
  }
}

TEST_CASE("oracle: Green's classes agree with naive principal ideals") {
  auto c = census(4);
  for (auto const& S : c.semigroups) {
    auto t = oracle::table_of(S);
    for (auto method : {GreensMethod::principal_ideals, GreensMethod::scc}) {
      GreensStructure G(S, method);
      CHECK(G.classes(Relation::L) == oracle::green_l(t));
      CHECK(G.classes(Relation::R) == oracle::green_r(t));
      CHECK(G.classes(Relation::J) == oracle::green_j(t));
      CHECK(G.classes(Relation::H) == oracle::green_h(t));
      CHECK(G.classes(Relation::D) == oracle::green_d(t));
    }
  }
}

TEST_CASE("oracle: both methods agree on random transformation semigroups") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto S = transformation_closure(4, 2, seed);
    if (S.order() > principal_ideal_method_limit) continue;
    CHECK(l_partition(S, GreensMethod::scc) == l_partition(S, GreensMethod::principal_ideals));
    CHECK(r_partition(S, GreensMethod::scc) == r_partition(S, GreensMethod::principal_ideals));
    CHECK(j_partition(S, GreensMethod::scc) == j_partition(S, GreensMethod::principal_ideals));
  }
}
