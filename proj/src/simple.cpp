#include "semikit/simple.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>

#include "semikit/greens.hpp"
#include "semikit/ideals.hpp"

namespace semikit {

  namespace {

    void require(bool condition, std::string const& what,
                 std::vector<Element> witness = {}) {
      if (!condition) {
        fail(ErrorKind::invariant_violation, what, std::move(witness));
      }
    }

    std::vector<Element> filter_idempotents(FiniteSemigroup const&      S,
                                            std::vector<Element> const& xs) {
      std::vector<Element> out;
      for (Element x : xs) {
        if (S(x, x) == x) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Position of x in a sorted list, or npos.
    std::size_t position(std::vector<Element> const& xs, Element x) {
      auto it = std::lower_bound(xs.begin(), xs.end(), x);
      return it != xs.end() && *it == x ? static_cast<std::size_t>(it - xs.begin())
                                        : static_cast<std::size_t>(-1);
    }

    constexpr std::size_t npos = static_cast<std::size_t>(-1);

  }  // namespace

  bool is_simple(FiniteSemigroup const& S) {
    auto const J      = j_partition(S, GreensMethod::automatic);
    bool const simple = std::all_of(J.begin(), J.end(), [](ClassId c) { return c == 0; });
    require(simple == (kernel_members(S).size() == S.order()),
            "simplicity disagrees with the kernel");
    return simple;
  }

  bool is_completely_simple(FiniteSemigroup const& S) {
    return is_simple(S) && !IdempotentPoset(S).primitives().empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // ReesMatrixSemigroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    FiniteSemigroup realize(std::size_t i_size, std::size_t lambda_size,
                            FiniteSemigroup const&      G,
                            std::vector<Element> const& P) {
      std::size_t const g = G.order();
      if (i_size > default_max_order() / g / lambda_size) {
        fail(ErrorKind::overflow, "Rees matrix semigroup exceeds the maximum order");
      }
      std::size_t const    n = i_size * g * lambda_size;
      std::vector<Element> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t const lx = x % lambda_size, ix = x / lambda_size / g;
        Element const     gx = static_cast<Element>((x / lambda_size) % g);
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t const ly = y % lambda_size, iy = y / lambda_size / g;
          Element const     gy = static_cast<Element>((y / lambda_size) % g);
          Element const     h  = G(G(gx, P[lx * i_size + iy]), gy);
          table[x * n + y] = static_cast<Element>((ix * g + h) * lambda_size + ly);
        }
      }
      return FiniteSemigroup::from_table(n, std::move(table));
    }
  }  // namespace

  ReesMatrixSemigroup::ReesMatrixSemigroup(std::size_t i_size, std::size_t lambda_size,
                                           FiniteSemigroup      group,
                                           std::vector<Element> sandwich)
      : _i_size(i_size),
        _lambda_size(lambda_size),
        _group(std::move(group)),
        _identity(0),
        _sandwich(std::move(sandwich)),
        _realized(FiniteSemigroup::from_table(1, {0})) {
    if (_i_size == 0 || _lambda_size == 0) {
      fail(ErrorKind::bad_shape, "index sets of a Rees matrix semigroup are nonempty");
    }
    if (!is_group(_group)) {
      fail(ErrorKind::not_a_group, "the structure group must be a group");
    }
    _identity = *is_monoid(_group);
    if (_sandwich.size() != _i_size * _lambda_size) {
      fail(ErrorKind::bad_shape, "sandwich matrix must be |Lambda| x |I|");
    }
    for (std::size_t k = 0; k < _sandwich.size(); ++k) {
      if (_sandwich[k] >= _group.order()) {
        fail(ErrorKind::bad_sandwich_entry,
             "sandwich entry (" + std::to_string(k / _i_size) + ", "
                 + std::to_string(k % _i_size) + ") is not a group element",
             {_sandwich[k]});
      }
    }
    _realized = realize(_i_size, _lambda_size, _group, _sandwich);
  }

  ReesMatrixSemigroup rees_construct(std::size_t i_size, std::size_t lambda_size,
                                     FiniteSemigroup const&      group,
                                     std::vector<Element> const& sandwich) {
    ReesMatrixSemigroup rms(i_size, lambda_size, group, sandwich);
    require(is_completely_simple(rms.realized()),
            "Rees matrix semigroup is not completely simple");
    return rms;
  }

  std::pair<ReesMatrixSemigroup, SemigroupMorphism>
  normalize(ReesMatrixSemigroup const& rms) {
    auto const&       G  = rms.group();
    std::size_t const ni = rms.i_size(), nl = rms.lambda_size();
    auto              inv = [&](Element x) { return group_inverse(G, x); };
    // P'(l, i) = u_l P(l, i) v_i with u_l = P(l, 0)^-1, v_i = P(0, i)^-1 P(0, 0).
    std::vector<Element> u(nl), v(ni);
    for (std::size_t l = 0; l < nl; ++l) {
      u[l] = inv(rms.sandwich(l, 0));
    }
    for (std::size_t i = 0; i < ni; ++i) {
      v[i] = G(inv(rms.sandwich(0, i)), rms.sandwich(0, 0));
    }
    std::vector<Element> P(nl * ni);
    for (std::size_t l = 0; l < nl; ++l) {
      for (std::size_t i = 0; i < ni; ++i) {
        P[l * ni + i] = G(G(u[l], rms.sandwich(l, i)), v[i]);
      }
    }
    ReesMatrixSemigroup normalized(ni, nl, G, std::move(P));
    // (i, g, l) -> (i, v_i^-1 g u_l^-1, l)
    std::vector<Element> map(rms.realized().order());
    for (Element x = 0; x < map.size(); ++x) {
      auto c = rms.coordinates(x);
      map[x] = normalized.index_of(
          {c.i, G(G(inv(v[c.i]), c.g), inv(u[c.lambda])), c.lambda});
    }
    SemigroupMorphism iso(rms.realized(), normalized.realized(), std::move(map));
    require(iso.is_isomorphism(), "normalization is not an isomorphism");
    return {std::move(normalized), std::move(iso)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  ReesDecomposition rees_decompose(FiniteSemigroup const& S, std::optional<Element> e_opt) {
    if (!is_completely_simple(S)) {
      fail(ErrorKind::not_completely_simple, "Rees decomposition needs a completely "
                                             "simple semigroup");
    }
    Element e;
    if (e_opt) {
      e = *e_opt;
      if (e >= S.order()) {
        fail(ErrorKind::out_of_range, "base idempotent outside the semigroup", {e});
      }
      if (S(e, e) != e) {
        fail(ErrorKind::not_idempotent, std::to_string(e) + " is not an idempotent",
             {e});
      }
    } else {
      e = idempotents(S).members().front();
    }

    auto I   = filter_idempotents(S, left_translate_set(S, e));
    auto Lam = filter_idempotents(S, right_translate_set(S, e));
    auto Ge  = local_submonoid(S, e);
    {
      GreensStructure greens(S);
      require(Ge == greens.members(Relation::H, greens.class_of(Relation::H, e)),
              "eSe differs from the H-class of e", {e});
    }
    auto [G, G_inclusion] = induced_subsemigroup(S, Ge);

    std::vector<Element> P(Lam.size() * I.size());
    for (std::size_t l = 0; l < Lam.size(); ++l) {
      for (std::size_t i = 0; i < I.size(); ++i) {
        std::size_t p = position(Ge, S(Lam[l], I[i]));
        require(p != npos, "sandwich product outside H_e", {Lam[l], I[i]});
        P[l * I.size() + i] = static_cast<Element>(p);
      }
    }
    auto rms = rees_construct(I.size(), Lam.size(), G, P);

    std::vector<Element> phi_map(rms.realized().order());
    for (Element x = 0; x < phi_map.size(); ++x) {
      auto c     = rms.coordinates(x);
      phi_map[x] = S(S(I[c.i], Ge[c.g]), Lam[c.lambda]);
    }
    SemigroupMorphism phi(rms.realized(), S, std::move(phi_map));
    if (auto bad = phi.homomorphism_failure()) {
      fail(ErrorKind::invariant_violation, "phi is not a homomorphism",
           {bad->first, bad->second});
    }
    require(phi.is_bijection(), "phi is not a bijection");
    SemigroupMorphism psi = phi.inverse();

    // Closed-form candidates for psi. Inverses are taken in the group H_e;
    // a middle coordinate outside H_e leaves the formula undefined.
    auto inverse_in_G = [&](Element x) {
      return Ge[group_inverse(G, static_cast<Element>(position(Ge, x)))];
    };
    auto evaluate = [&](bool printed) {
      ClosedFormDiagnostic d;
      for (Element s = 0; s < S.order(); ++s) {
        Element const ese = S(S(e, s), e);
        Element const mid = printed ? S(S(s, e), s) : ese;
        if (position(Ge, mid) == npos) {
          ++d.undefined;
          continue;
        }
        Element const     i_el = S(s, inverse_in_G(mid));
        Element const     l_el = S(inverse_in_G(ese), s);
        std::size_t const i    = position(I, i_el);
        std::size_t const l    = position(Lam, l_el);
        if (i == npos || l == npos) {
          ++d.disagree;
          continue;
        }
        ReesCoordinates candidate{i, static_cast<Element>(position(Ge, mid)), l};
        if (candidate == rms.coordinates(psi(s))) {
          ++d.agree;
        } else {
          ++d.disagree;
        }
      }
      return d;
    };
    auto printed = evaluate(true);
    auto ese     = evaluate(false);

    return ReesDecomposition{S,
                             e,
                             std::move(I),
                             std::move(Lam),
                             std::move(Ge),
                             std::move(rms),
                             std::move(phi),
                             std::move(psi),
                             printed,
                             ese};
  }

  SubsemigroupDecomposition subsemigroup_decompose(FiniteSemigroup const& S,
                                                   SubsetHandle const&    T) {
    if (!is_closed(S, T.members()) || T.empty()) {
      fail(ErrorKind::not_a_subsemigroup, "T is not a subsemigroup", T.members());
    }
    if (!is_completely_simple(S)) {
      fail(ErrorKind::not_completely_simple, "S is not completely simple");
    }
    auto [T_sg, inclusion] = induced_subsemigroup(S, T.members());
    require(is_completely_simple(T_sg),
            "subsemigroup of a completely simple semigroup is not completely simple",
            T.members());

    auto own    = rees_decompose(T_sg);
    auto e      = inclusion(own.e);
    auto parent = rees_decompose(S, e);

    auto lift = [&](std::vector<Element> const& xs) {
      std::vector<Element> out;
      for (Element x : xs) {
        out.push_back(inclusion(x));
      }
      return out;
    };
    auto J     = lift(own.i_elements);
    auto Gamma = lift(own.lambda_elements);
    auto W     = lift(own.group_elements);

    auto subset = [](std::vector<Element> const& a, std::vector<Element> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    require(subset(J, parent.i_elements), "J is not inside I", J);
    require(subset(Gamma, parent.lambda_elements), "Gamma is not inside Lambda",
            Gamma);
    require(subset(W, parent.group_elements), "W is not inside G", W);
    {
      std::vector<Element> t_meet_h;
      std::set_intersection(T.members().begin(), T.members().end(),
                            parent.group_elements.begin(),
                            parent.group_elements.end(),
                            std::back_inserter(t_meet_h));
      require(t_meet_h == W, "T meet H_e differs from the H-class of e in T", W);
    }
    for (std::size_t g = 0; g < Gamma.size(); ++g) {
      for (std::size_t j = 0; j < J.size(); ++j) {
        Element inner = own.group_elements[own.rms.sandwich(g, j)];
        Element outer = parent.group_elements[parent.rms.sandwich(
            position(parent.lambda_elements, Gamma[g]),
            position(parent.i_elements, J[j]))];
        require(inclusion(inner) == outer,
                "sandwich matrix of T is not the restriction of that of S",
                {Gamma[g], J[j]});
      }
    }
    return SubsemigroupDecomposition{
        SubsetHandle(S, std::move(J), SubsetRole::idempotents),
        SubsetHandle(S, std::move(W), SubsetRole::subsemigroup),
        SubsetHandle(S, std::move(Gamma), SubsetRole::idempotents),
        std::move(own),
        std::move(parent)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Bands and counting
  ////////////////////////////////////////////////////////////////////////

  BandPredicates band_predicates(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    BandPredicates    out{true, true, false};
    for (Element a = 0; a < n; ++a) {
      if (S(a, a) != a) {
        out.is_band = out.is_rectangular_band = false;
        break;
      }
    }
    for (Element a = 0; a < n && out.is_rectangular_band; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (S(S(a, b), a) != a) {
          out.is_rectangular_band = false;
          break;
        }
      }
    }
    if (is_completely_simple(S)) {
      auto d                   = rees_decompose(S);
      auto [normalized, iso]   = normalize(d.rms);
      auto const& P            = normalized.sandwich();
      out.is_rectangular_group = std::all_of(P.begin(), P.end(), [&](Element p) {
        return p == normalized.group_identity();
      });
    }
    return out;
  }

  HFiniteness h_finiteness(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      fail(ErrorKind::not_completely_simple, "H-finiteness needs a completely "
                                             "simple semigroup");
    }
    GreensStructure greens(S);
    auto            d = rees_decompose(S);
    HFiniteness     out{greens.count(Relation::H), d.rms.i_size(),
                    d.rms.lambda_size(), true};
    require(out.h_class_count == out.i_size * out.lambda_size,
            "H-class count differs from |I| |Lambda|");
    return out;
  }

  std::vector<std::vector<Element>> subsemigroup_sets(FiniteSemigroup const& S,
                                                      std::size_t            cap) {
    std::size_t const n = S.order();
    if (n > cap || n > 64) {
      fail(ErrorKind::search_cap_exceeded,
           "subsemigroup enumeration is capped at order "
               + std::to_string(std::min<std::size_t>(cap, 64)));
    }
    auto to_bits = [](std::vector<bool> const& mask) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
          bits |= std::uint64_t(1) << i;
        }
      }
      return bits;
    };
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::vector<bool>>     frontier;
    auto visit = [&](std::vector<bool> mask) {
      if (seen.insert(to_bits(mask)).second) {
        frontier.push_back(std::move(mask));
      }
    };
    for (Element x = 0; x < n; ++x) {
      std::vector<bool> mask(n, false);
      Element const     gen[] = {x};
      extend_closure(S, mask, gen);
      visit(std::move(mask));
    }
    // Every subsemigroup is the closure of a subsemigroup one generator
    // smaller, so extending by single elements reaches all of them.
    while (!frontier.empty()) {
      auto base = std::move(frontier.front());
      frontier.pop_front();
      for (Element x = 0; x < n; ++x) {
        if (base[x]) {
          continue;
        }
        auto          mask  = base;
        Element const gen[] = {x};
        extend_closure(S, mask, gen);
        visit(std::move(mask));
      }
    }
    std::vector<std::vector<Element>> out;
    out.reserve(seen.size());
    for (std::uint64_t bits : seen) {
      std::vector<Element> members;
      for (Element x = 0; x < n; ++x) {
        if (bits & (std::uint64_t(1) << x)) {
          members.push_back(x);
        }
      }
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  std::size_t subsemigroup_count_bound(FiniteSemigroup const& S) {
    auto              d         = rees_decompose(S);
    std::size_t const subgroups = subsemigroup_sets(d.rms.group(), 64).size();
    return subgroups * (std::size_t(1) << d.rms.i_size())
           * (std::size_t(1) << d.rms.lambda_size());
  }

  std::vector<SubsetHandle> enumerate_subsemigroups(FiniteSemigroup const& S,
                                                    std::size_t            cap) {
    auto                      sets = subsemigroup_sets(S, cap);
    std::vector<SubsetHandle> out;
    out.reserve(sets.size());
    for (auto& members : sets) {
      out.emplace_back(S, std::move(members), SubsetRole::subsemigroup);
    }
    if (is_completely_simple(S)) {
      for (auto const& T : out) {
        subsemigroup_decompose(S, T);
      }
      require(out.size() <= subsemigroup_count_bound(S),
              "subsemigroup count exceeds the sum over subgroups of 2^|I| 2^|Lambda|");
    }
    return out;
  }

  bool subsemigroup_of_group_check(FiniteSemigroup const& G, SubsetHandle const& T) {
    if (!is_group(G)) {
      fail(ErrorKind::not_a_group, "G is not a group");
    }
    if (T.empty() || !is_closed(G, T.members())) {
      fail(ErrorKind::not_a_subsemigroup, "T is not a subsemigroup", T.members());
    }
    Element const identity = *is_monoid(G);
    if (!T.contains(identity)) {
      return false;
    }
    return std::all_of(T.members().begin(), T.members().end(),
                       [&](Element x) { return T.contains(group_inverse(G, x)); });
  }

}  // namespace semikit
