#include "semikit/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "semikit/greens.hpp"

namespace semikit {

  namespace {

    void require(bool condition, std::string const& what,
                 std::vector<Element> witness = {}) {
      if (!condition) {
        fail(ErrorKind::invariant_violation, what, std::move(witness));
      }
    }

    std::vector<Element> sorted_unique(std::vector<Element> xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      return xs;
    }

    std::vector<Element> sorted_copy(std::span<Element const> xs) {
      return sorted_unique(std::vector<Element>(xs.begin(), xs.end()));
    }

    enum class Side { left, right, both };

    bool absorbs(FiniteSemigroup const& S, std::vector<bool> const& mask,
                 std::span<Element const> members, Side side) {
      for (Element a : members) {
        for (Element x = 0; x < S.order(); ++x) {
          if (side != Side::right && !mask[S(x, a)]) {
            return false;
          }
          if (side != Side::left && !mask[S(a, x)]) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<Element> generated_without_identity(FiniteSemigroup const& S,
                                                    Element x, Side side) {
      switch (side) {
        case Side::left:
          return left_translate_set(S, x);
        case Side::right:
          return right_translate_set(S, x);
        case Side::both:
          return two_sided_translate_set(S, x);
      }
      return {};
    }

    std::vector<bool> generated_with_identity(FiniteSemigroup const& S, Element x,
                                              Side side) {
      switch (side) {
        case Side::left:
          return principal_left_mask(S, x);
        case Side::right:
          return principal_right_mask(S, x);
        case Side::both:
          return principal_two_sided_mask(S, x);
      }
      return {};
    }

    bool is_minimal(FiniteSemigroup const& S, std::span<Element const> ideal,
                    Side side, MinimalityMethod method) {
      auto const members = sorted_copy(ideal);
      if (members.empty()) {
        fail(ErrorKind::not_an_ideal, "empty subset");
      }
      std::vector<bool> mask(S.order(), false);
      for (Element x : members) {
        mask[x] = true;
      }
      if (!absorbs(S, mask, members, side)) {
        fail(ErrorKind::not_an_ideal, "subset is not an ideal of the stated side",
             members);
      }
      if (method == MinimalityMethod::automatic) {
        method = S.order() <= exhaustive_minimality_limit
                     ? MinimalityMethod::exhaustive
                     : MinimalityMethod::criterion;
      }
      if (method == MinimalityMethod::criterion) {
        for (Element x : members) {
          if (generated_without_identity(S, x, side) != members) {
            return false;
          }
        }
        return true;
      }
      std::size_t const m = members.size();
      if (m <= subset_scan_limit) {
        // Every nonempty proper subset.
        for (std::uint32_t bits = 1; bits + 1 < (std::uint32_t(1) << m); ++bits) {
          std::vector<Element> sub;
          std::vector<bool>    sub_mask(S.order(), false);
          for (std::size_t i = 0; i < m; ++i) {
            if (bits & (std::uint32_t(1) << i)) {
              sub.push_back(members[i]);
              sub_mask[members[i]] = true;
            }
          }
          if (absorbs(S, sub_mask, sub, side)) {
            return false;
          }
        }
        return true;
      }
      // Any sub-ideal contains the ideal generated by one of its elements,
      // so a proper sub-ideal exists iff some principal one is proper.
      for (Element x : members) {
        if (members_of(generated_with_identity(S, x, side)) != members) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Idempotent poset
  ////////////////////////////////////////////////////////////////////////

  IdempotentPoset::IdempotentPoset(FiniteSemigroup const& S)
      : _parent(S), _elements(idempotents(S).members()) {
    std::size_t const k     = _elements.size();
    std::size_t const words = (k + 63) / 64;
    // up[i] holds the j with e_i <= e_j.
    std::vector<std::uint64_t> up(k * words, 0);
    _leq.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Element e = _elements[i], f = _elements[j];
        if (S(e, f) == e && S(f, e) == e) {
          _leq[i * k + j] = true;
          up[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      require(_leq[i * k + i], "natural order is not reflexive", {_elements[i]});
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j || !_leq[i * k + j]) {
          continue;
        }
        require(!_leq[j * k + i], "natural order is not antisymmetric",
                {_elements[i], _elements[j]});
        for (std::size_t w = 0; w < words; ++w) {
          require((up[j * words + w] & ~up[i * words + w]) == 0,
                  "natural order is not transitive", {_elements[i], _elements[j]});
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      bool primitive = true;
      for (std::size_t j = 0; j < k && primitive; ++j) {
        primitive = j == i || !_leq[j * k + i];
      }
      if (primitive) {
        _primitives.push_back(_elements[i]);
      }
    }
  }

  bool IdempotentPoset::leq(Element e, Element f) const {
    auto i = std::lower_bound(_elements.begin(), _elements.end(), e);
    auto j = std::lower_bound(_elements.begin(), _elements.end(), f);
    if (i == _elements.end() || *i != e || j == _elements.end() || *j != f) {
      fail(ErrorKind::not_idempotent, "poset query on a non-idempotent", {e, f});
    }
    return leq_at(i - _elements.begin(), j - _elements.begin());
  }

  IdempotentPoset idempotent_poset(FiniteSemigroup const& S) {
    return IdempotentPoset(S);
  }

  ////////////////////////////////////////////////////////////////////////
  // Translates and minimality
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> left_translate_set(FiniteSemigroup const& S, Element x) {
    std::vector<Element> out;
    out.reserve(S.order());
    for (Element y = 0; y < S.order(); ++y) {
      out.push_back(S(y, x));
    }
    return sorted_unique(std::move(out));
  }

  std::vector<Element> right_translate_set(FiniteSemigroup const& S, Element x) {
    auto row = S.row(x);
    return sorted_unique(std::vector<Element>(row.begin(), row.end()));
  }

  std::vector<Element> two_sided_translate_set(FiniteSemigroup const& S, Element x) {
    std::vector<bool> mask(S.order(), false);
    for (Element a : left_translate_set(S, x)) {
      for (Element y : S.row(a)) {
        mask[y] = true;
      }
    }
    return members_of(mask);
  }

  std::vector<Element> local_submonoid(FiniteSemigroup const& S, Element e) {
    std::vector<Element> out;
    out.reserve(S.order());
    for (Element y : S.row(e)) {
      out.push_back(S(y, e));
    }
    return sorted_unique(std::move(out));
  }

  bool is_minimal_left_ideal(FiniteSemigroup const& S, std::span<Element const> L,
                             MinimalityMethod method) {
    return is_minimal(S, L, Side::left, method);
  }

  bool is_minimal_right_ideal(FiniteSemigroup const& S, std::span<Element const> R,
                              MinimalityMethod method) {
    return is_minimal(S, R, Side::right, method);
  }

  bool is_minimal_two_sided_ideal(FiniteSemigroup const&   S,
                                  std::span<Element const> I,
                                  MinimalityMethod         method) {
    return is_minimal(S, I, Side::both, method);
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> kernel_by_intersection(FiniteSemigroup const& S) {
    std::vector<bool> mask(S.order(), true);
    for (Element s = 0; s < S.order(); ++s) {
      auto ideal = principal_two_sided_mask(S, s);
      for (Element x = 0; x < S.order(); ++x) {
        mask[x] = mask[x] && ideal[x];
      }
    }
    return members_of(mask);
  }

  std::vector<Element> kernel_members(FiniteSemigroup const& S) {
    Element z = 0;
    for (Element x = 1; x < S.order(); ++x) {
      z = S(z, x);
    }
    return members_of(principal_two_sided_mask(S, z));
  }

  MinimalIdealVerdict minimal_ideal_equivalences(FiniteSemigroup const& S,
                                                 Element e,
                                                 MinimalityMethod method) {
    if (e >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup", {e});
    }
    if (S(e, e) != e) {
      fail(ErrorKind::not_idempotent, std::to_string(e) + " is not an idempotent",
           {e});
    }
    MinimalIdealVerdict v;
    v.e   = e;
    v.Se  = left_translate_set(S, e);
    v.eS  = right_translate_set(S, e);
    v.eSe = local_submonoid(S, e);
    v.SeS = two_sided_translate_set(S, e);

    v.left_minimal  = is_minimal_left_ideal(S, v.Se, method);
    v.right_minimal = is_minimal_right_ideal(S, v.eS, method);
    v.local_group   = is_group(induced_subsemigroup(S, v.eSe).first);
    v.kernel_is_SeS = v.SeS == kernel_members(S);
    require(v.agree(), "minimal-ideal statements disagree at an idempotent", {e});
    return v;
  }

  KernelReport kernel(FiniteSemigroup const& S) {
    auto K = kernel_members(S);
    if (S.order() <= direct_associativity_limit) {
      require(K == kernel_by_intersection(S),
              "kernel differs from the intersection of principal ideals");
    }
    SubsetHandle kernel_handle(S, K, SubsetRole::kernel);
    require(is_minimal_two_sided_ideal(S, K), "kernel is not a minimal ideal", K);

    KernelReport report{kernel_handle, {}, {}, {}, {}};
    for (Element x : K) {
      if (S(x, x) == x) {
        report.kernel_idempotents.push_back(x);
      }
    }
    require(!report.kernel_idempotents.empty(), "kernel without an idempotent", K);

    std::vector<std::vector<Element>> lefts, rights;
    for (Element e : report.kernel_idempotents) {
      auto v = minimal_ideal_equivalences(S, e);
      require(v.value(), "idempotent of the kernel fails the minimal-ideal "
                         "statements", {e});
      lefts.push_back(v.Se);
      rights.push_back(v.eS);
      report.verdicts.push_back(std::move(v));
    }
    auto dedupe = [](std::vector<std::vector<Element>>& sets) {
      std::sort(sets.begin(), sets.end());
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    };
    dedupe(lefts);
    dedupe(rights);

    auto check_partition = [&](std::vector<std::vector<Element>> const& parts) {
      std::vector<Element> all;
      for (auto const& p : parts) {
        all.insert(all.end(), p.begin(), p.end());
      }
      std::sort(all.begin(), all.end());
      require(all == K, "minimal one-sided ideals do not partition the kernel", K);
    };
    check_partition(lefts);
    check_partition(rights);

    for (auto& L : lefts) {
      report.min_left.emplace_back(S, std::move(L), SubsetRole::left_ideal);
    }
    for (auto& R : rights) {
      report.min_right.emplace_back(S, std::move(R), SubsetRole::right_ideal);
    }
    return report;
  }

  std::vector<std::vector<Element>> enumerate_ideals(FiniteSemigroup const& S,
                                                     std::size_t           cap) {
    std::size_t const n = S.order();
    if (n > cap || n >= 32) {
      fail(ErrorKind::search_cap_exceeded,
           "ideal enumeration is capped at order " + std::to_string(cap));
    }
    std::vector<std::vector<Element>> out;
    for (std::uint32_t bits = 1; bits < (std::uint32_t(1) << n); ++bits) {
      std::vector<Element> members;
      for (Element x = 0; x < n; ++x) {
        if (bits & (std::uint32_t(1) << x)) {
          members.push_back(x);
        }
      }
      if (is_two_sided_ideal(S, members)) {
        out.push_back(std::move(members));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees quotient
  ////////////////////////////////////////////////////////////////////////

  std::pair<FiniteSemigroup, SemigroupMorphism>
  rees_quotient(FiniteSemigroup const& S, std::span<Element const> I) {
    auto const members = sorted_copy(I);
    if (members.empty() || members.back() >= S.order()
        || !is_two_sided_ideal(S, members)) {
      fail(ErrorKind::not_an_ideal, "Rees quotient needs a two-sided ideal",
           members);
    }
    std::size_t const    n = S.order();
    std::vector<bool>    in_ideal(n, false);
    for (Element x : members) {
      in_ideal[x] = true;
    }
    std::vector<Element> projection(n, 0);
    std::vector<Element> survivors;
    for (Element x = 0; x < n; ++x) {
      if (!in_ideal[x]) {
        survivors.push_back(x);
        projection[x] = static_cast<Element>(survivors.size());
      }
    }
    std::size_t const    m = survivors.size() + 1;
    std::vector<Element> table(m * m, 0);
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 1; j < m; ++j) {
        table[i * m + j] = projection[S(survivors[i - 1], survivors[j - 1])];
      }
    }
    std::string name = S.name().empty() ? std::string() : S.name() + "/I";
    auto Q = FiniteSemigroup::from_table(m, std::move(table), std::move(name), m);
    SemigroupMorphism pi(S, Q, std::move(projection));
    require(pi.is_homomorphism(), "Rees projection is not a homomorphism");
    return {Q, std::move(pi)};
  }

  std::pair<FiniteSemigroup, SemigroupMorphism>
  rees_quotient(FiniteSemigroup const& S, SubsetHandle const& I) {
    return rees_quotient(S, std::span<Element const>(I.members()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Swelling
  ////////////////////////////////////////////////////////////////////////

  SwellingVerdict swelling_check(FiniteSemigroup const& S,
                                 std::span<Element const> A, Element t) {
    auto const members = sorted_copy(A);
    if (members.empty()) {
      fail(ErrorKind::bad_shape, "swelling check needs a nonempty subset");
    }
    if (members.back() >= S.order() || t >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup");
    }
    if (!std::binary_search(members.begin(), members.end(), t)) {
      fail(ErrorKind::element_not_in_subset,
           std::to_string(t) + " is not in the subset", {t});
    }
    std::vector<Element> tA;
    tA.reserve(members.size());
    for (Element a : members) {
      tA.push_back(S(t, a));
    }
    tA = sorted_unique(std::move(tA));
    SwellingVerdict v{std::includes(tA.begin(), tA.end(), members.begin(),
                                    members.end()),
                      tA == members, tA};
    require(!v.hypothesis || v.equal, "A is properly contained in tA", {t});
    return v;
  }

}  // namespace semikit
