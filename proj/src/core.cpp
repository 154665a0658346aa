#include "semikit/core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace semikit {

  std::size_t default_max_order() {
    char const* env = std::getenv("SEMIKIT_MAX_ORDER");
    if (env == nullptr) {
      return builtin_max_order;
    }
    std::string_view  text(env);
    std::size_t       value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      return builtin_max_order;
    }
    return value;
  }

  std::optional<Triple> find_associativity_failure(std::size_t n,
                                                   std::span<Element const> t) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return Triple{static_cast<Element>(a), static_cast<Element>(b),
                          static_cast<Element>(c)};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Triple>
  light_associativity_failure(std::size_t n, std::span<Element const> t,
                              std::span<Element const> generators) {
    for (Element g : generators) {
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t xg = t[x * n + g];
        for (std::size_t y = 0; y < n; ++y) {
          if (t[xg * n + y] != t[x * n + t[g * n + y]]) {
            return Triple{static_cast<Element>(x), g, static_cast<Element>(y)};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Element> greedy_generating_set(std::size_t n,
                                             std::span<Element const> t) {
    // Incremental closure under the table product: every new element is
    // multiplied on both sides with everything reached so far.
    std::vector<bool>    reached(n, false);
    std::vector<Element> members;
    std::vector<Element> gens;
    members.reserve(n);
    for (std::size_t candidate = 0; candidate < n; ++candidate) {
      if (reached[candidate]) {
        continue;
      }
      gens.push_back(static_cast<Element>(candidate));
      reached[candidate] = true;
      members.push_back(static_cast<Element>(candidate));
      for (std::size_t i = members.size() - 1; i < members.size(); ++i) {
        Element x = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
          Element y = members[j];
          for (Element p : {t[x * n + y], t[static_cast<std::size_t>(y) * n + x]}) {
            if (!reached[p]) {
              reached[p] = true;
              members.push_back(p);
            }
          }
        }
      }
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup FiniteSemigroup::from_table(std::size_t                n,
                                              std::vector<Element>       entries,
                                              std::string                name,
                                              std::optional<std::size_t> max_order) {
    std::size_t const cap = max_order.value_or(default_max_order());
    if (n == 0) {
      fail(ErrorKind::bad_shape, "a semigroup must have at least one element");
    }
    if (n > cap) {
      std::ostringstream msg;
      msg << "order " << n << " exceeds the maximum order " << cap;
      fail(ErrorKind::overflow, msg.str());
    }
    if (entries.size() != n * n) {
      std::ostringstream msg;
      msg << "expected " << n * n << " table entries, got " << entries.size();
      fail(ErrorKind::bad_shape, msg.str());
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k] >= n) {
        std::ostringstream msg;
        msg << "entry (" << k / n << ", " << k % n << ") = " << entries[k]
            << " is not in [0, " << n << ")";
        fail(ErrorKind::out_of_range, msg.str(),
             {static_cast<Element>(k / n), static_cast<Element>(k % n)});
      }
    }
    std::optional<Triple> bad;
    if (n <= direct_associativity_limit) {
      bad = find_associativity_failure(n, entries);
    } else {
      bad = light_associativity_failure(n, entries,
                                        greedy_generating_set(n, entries));
    }
    if (bad) {
      auto [a, b, c] = *bad;
      std::ostringstream msg;
      msg << "(" << a << " * " << b << ") * " << c << " != " << a << " * (" << b
          << " * " << c << ")";
      fail(ErrorKind::not_associative, msg.str(), {a, b, c});
    }
    return FiniteSemigroup(std::make_shared<Data const>(
        Data{n, std::move(entries), std::move(name), {}}));
  }

  FiniteSemigroup
  FiniteSemigroup::from_rows(std::vector<std::vector<Element>> const& rows,
                             std::string                              name) {
    std::size_t const    n = rows.size();
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        fail(ErrorKind::bad_shape, "every row must have as many entries as rows");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return from_table(n, std::move(entries), std::move(name));
  }

  Element FiniteSemigroup::product(Element a, Element b) const {
    if (a >= order() || b >= order()) {
      fail(ErrorKind::out_of_range, "product operand out of range", {a, b});
    }
    return (*this)(a, b);
  }

  FiniteSemigroup FiniteSemigroup::with_name(std::string name) const {
    auto data  = std::make_shared<Data>(*_data);
    data->name = std::move(name);
    return FiniteSemigroup(std::move(data));
  }

  FiniteSemigroup FiniteSemigroup::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != order()) {
      fail(ErrorKind::bad_shape, "one label per element is required");
    }
    auto data    = std::make_shared<Data>(*_data);
    data->labels = std::move(labels);
    return FiniteSemigroup(std::move(data));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(SubsetRole role) noexcept {
    switch (role) {
      case SubsetRole::subsemigroup:
        return "subsemigroup";
      case SubsetRole::left_ideal:
        return "left-ideal";
      case SubsetRole::right_ideal:
        return "right-ideal";
      case SubsetRole::two_sided_ideal:
        return "two-sided-ideal";
      case SubsetRole::idempotents:
        return "idempotents";
      case SubsetRole::kernel:
        return "kernel";
      case SubsetRole::h_class:
        return "h-class";
      case SubsetRole::center:
        return "center";
      case SubsetRole::centralizer:
        return "centralizer";
      case SubsetRole::monogenic:
        return "monogenic";
      case SubsetRole::generic:
        return "generic";
    }
    return "generic";
  }

  namespace {
    std::vector<bool> mask_of(std::size_t n, std::span<Element const> members) {
      std::vector<bool> mask(n, false);
      for (Element x : members) {
        mask[x] = true;
      }
      return mask;
    }

    std::string describe(std::span<Element const> members) {
      std::ostringstream out;
      out << "{";
      for (std::size_t i = 0; i < members.size(); ++i) {
        out << (i == 0 ? "" : ",") << members[i];
      }
      out << "}";
      return out.str();
    }
  }  // namespace

  bool is_closed(FiniteSemigroup const& S, std::span<Element const> members) {
    auto const mask = mask_of(S.order(), members);
    for (Element a : members) {
      for (Element b : members) {
        if (!mask[S(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_ideal(FiniteSemigroup const& S, std::span<Element const> members) {
    auto const mask = mask_of(S.order(), members);
    for (Element x = 0; x < S.order(); ++x) {
      for (Element a : members) {
        if (!mask[S(x, a)]) {
          return false;
        }
      }
    }
    return !members.empty();
  }

  bool is_right_ideal(FiniteSemigroup const& S, std::span<Element const> members) {
    auto const mask = mask_of(S.order(), members);
    for (Element a : members) {
      for (Element x : S.row(a)) {
        if (!mask[x]) {
          return false;
        }
      }
    }
    return !members.empty();
  }

  bool is_two_sided_ideal(FiniteSemigroup const&   S,
                          std::span<Element const> members) {
    return is_left_ideal(S, members) && is_right_ideal(S, members);
  }

  std::vector<Element> members_of(std::vector<bool> const& mask) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) {
        out.push_back(static_cast<Element>(i));
      }
    }
    return out;
  }

  SubsetHandle::SubsetHandle(FiniteSemigroup parent, std::vector<Element> members,
                             SubsetRole role)
      : _parent(std::move(parent)), _members(std::move(members)), _role(role) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    if (!_members.empty() && _members.back() >= _parent.order()) {
      fail(ErrorKind::out_of_range, "subset member outside the parent semigroup",
           {_members.back()});
    }
    if (_members.empty() && _role != SubsetRole::center) {
      fail(ErrorKind::bad_shape,
           "only a center may be empty (role " + std::string(to_string(_role))
               + ")");
    }
    auto const& S = _parent;
    switch (_role) {
      case SubsetRole::subsemigroup:
      case SubsetRole::monogenic:
      case SubsetRole::centralizer:
      case SubsetRole::center:
        if (!is_closed(S, _members)) {
          fail(ErrorKind::not_a_subsemigroup,
               describe(_members) + " is not closed under the product");
        }
        break;
      case SubsetRole::left_ideal:
        if (!is_left_ideal(S, _members)) {
          fail(ErrorKind::not_an_ideal, describe(_members) + " is not a left ideal");
        }
        break;
      case SubsetRole::right_ideal:
        if (!is_right_ideal(S, _members)) {
          fail(ErrorKind::not_an_ideal,
               describe(_members) + " is not a right ideal");
        }
        break;
      case SubsetRole::two_sided_ideal:
      case SubsetRole::kernel:
        if (!is_two_sided_ideal(S, _members)) {
          fail(ErrorKind::not_an_ideal,
               describe(_members) + " is not a two-sided ideal");
        }
        break;
      case SubsetRole::idempotents:
        for (Element e : _members) {
          if (S(e, e) != e) {
            fail(ErrorKind::not_idempotent,
                 std::to_string(e) + " is not an idempotent", {e});
          }
        }
        break;
      case SubsetRole::h_class:
      case SubsetRole::generic:
        break;
    }
  }

  bool SubsetHandle::contains(Element x) const {
    return std::binary_search(_members.begin(), _members.end(), x);
  }

  std::vector<bool> SubsetHandle::mask() const {
    return mask_of(_parent.order(), _members);
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupMorphism
  ////////////////////////////////////////////////////////////////////////

  SemigroupMorphism::SemigroupMorphism(FiniteSemigroup source,
                                       FiniteSemigroup target,
                                       std::vector<Element> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)),
        _is_homomorphism(false),
        _is_injective(false),
        _is_surjective(false) {
    if (_map.size() != _source.order()) {
      fail(ErrorKind::bad_shape, "a morphism needs one image per source element");
    }
    std::vector<bool> hit(_target.order(), false);
    std::size_t       distinct = 0;
    for (Element y : _map) {
      if (y >= _target.order()) {
        fail(ErrorKind::out_of_range, "morphism image outside the target", {y});
      }
      if (!hit[y]) {
        hit[y] = true;
        ++distinct;
      }
    }
    _is_injective    = distinct == _map.size();
    _is_surjective   = distinct == _target.order();
    _is_homomorphism = !homomorphism_failure().has_value();
  }

  SemigroupMorphism SemigroupMorphism::identity(FiniteSemigroup const& S) {
    std::vector<Element> map(S.order());
    std::iota(map.begin(), map.end(), Element(0));
    return SemigroupMorphism(S, S, std::move(map));
  }

  std::optional<std::pair<Element, Element>>
  SemigroupMorphism::homomorphism_failure() const {
    std::size_t const n = _source.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (_map[_source(a, b)] != _target(_map[a], _map[b])) {
          return std::make_pair(a, b);
        }
      }
    }
    return std::nullopt;
  }

  SemigroupMorphism SemigroupMorphism::inverse() const {
    if (!is_bijection()) {
      fail(ErrorKind::invariant_violation, "only a bijection has an inverse");
    }
    std::vector<Element> inv(_map.size());
    for (Element x = 0; x < _map.size(); ++x) {
      inv[_map[x]] = x;
    }
    return SemigroupMorphism(_target, _source, std::move(inv));
  }

  SemigroupMorphism SemigroupMorphism::then(SemigroupMorphism const& next) const {
    if (!(next.source() == _target)) {
      fail(ErrorKind::bad_shape, "composed morphisms do not match up");
    }
    std::vector<Element> map(_map.size());
    for (std::size_t x = 0; x < _map.size(); ++x) {
      map[x] = next(_map[x]);
    }
    return SemigroupMorphism(_source, next.target(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  std::optional<Element> is_monoid(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    for (Element e = 0; e < n; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = S(e, x) == x && S(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::pair<FiniteSemigroup, SemigroupMorphism>
  adjoin_identity(FiniteSemigroup const& S) {
    if (is_monoid(S)) {
      return {S, SemigroupMorphism::identity(S)};
    }
    std::size_t const    n   = S.order();
    std::size_t const    m   = n + 1;
    Element const        one = static_cast<Element>(n);
    std::vector<Element> table(m * m);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        table[a * m + b] = a == one ? b : b == one ? a : S(a, b);
      }
    }
    std::string name = S.name().empty() ? std::string() : S.name() + "^1";
    auto        S1   = FiniteSemigroup::from_table(m, std::move(table), name, m);
    std::vector<Element> inclusion(n);
    std::iota(inclusion.begin(), inclusion.end(), Element(0));
    SemigroupMorphism iota(S, S1, std::move(inclusion));
    return {S1, std::move(iota)};
  }

  FiniteSemigroup direct_product(FiniteSemigroup const&     A,
                                 FiniteSemigroup const&     B,
                                 std::optional<std::size_t> max_order) {
    std::size_t const na  = A.order();
    std::size_t const nb  = B.order();
    std::size_t const cap = max_order.value_or(default_max_order());
    if (na > cap / nb) {
      fail(ErrorKind::overflow, "direct product of orders " + std::to_string(na)
                                    + " and " + std::to_string(nb)
                                    + " exceeds the maximum order "
                                    + std::to_string(cap));
    }
    std::size_t const    n = na * nb;
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto a = A(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
        auto b = B(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
        table[x * n + y] = static_cast<Element>(a * nb + b);
      }
    }
    std::string name;
    if (!A.name().empty() && !B.name().empty()) {
      name = A.name() + "x" + B.name();
    }
    return FiniteSemigroup::from_table(n, std::move(table), std::move(name), cap);
  }

  std::vector<Element> extend_closure(FiniteSemigroup const&   S,
                                      std::vector<bool>&       mask,
                                      std::span<Element const> extra) {
    std::vector<Element> members = members_of(mask);
    std::size_t          fresh   = members.size();
    for (Element x : extra) {
      if (!mask[x]) {
        mask[x] = true;
        members.push_back(x);
      }
    }
    // Invariant: the first `fresh` members are closed among themselves.
    for (std::size_t i = fresh; i < members.size(); ++i) {
      Element x = members[i];
      for (std::size_t j = 0; j <= i; ++j) {
        Element y = members[j];
        Element p = S(x, y);
        if (!mask[p]) {
          mask[p] = true;
          members.push_back(p);
        }
        p = S(y, x);
        if (!mask[p]) {
          mask[p] = true;
          members.push_back(p);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  SubsetHandle closure(FiniteSemigroup const& S, std::span<Element const> gens) {
    if (gens.empty()) {
      fail(ErrorKind::empty_generators, "closure needs at least one generator");
    }
    for (Element g : gens) {
      if (g >= S.order()) {
        fail(ErrorKind::out_of_range, "generator outside the semigroup", {g});
      }
    }
    std::vector<bool> mask(S.order(), false);
    auto              members = extend_closure(S, mask, gens);
    bool single = std::all_of(gens.begin(), gens.end(),
                              [&](Element g) { return g == gens.front(); });
    return SubsetHandle(S, std::move(members),
                        single ? SubsetRole::monogenic : SubsetRole::subsemigroup);
  }

  bool is_idempotent(FiniteSemigroup const& S, Element e) {
    return S(e, e) == e;
  }

  SubsetHandle idempotents(FiniteSemigroup const& S) {
    std::vector<Element> es;
    for (Element e = 0; e < S.order(); ++e) {
      if (S(e, e) == e) {
        es.push_back(e);
      }
    }
    if (es.empty()) {
      fail(ErrorKind::invariant_violation, "finite semigroup without an idempotent");
    }
    return SubsetHandle(S, std::move(es), SubsetRole::idempotents);
  }

  CancellativeReport is_cancellative(FiniteSemigroup const& S) {
    CancellativeReport report{true, true, std::nullopt};
    std::size_t const  n = S.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (report.left && S(c, a) == S(c, b)) {
            report.left = false;
            if (!report.witness) {
              report.witness = {CancellationSide::left, a, b, c};
            }
          }
          if (report.right && S(a, c) == S(b, c)) {
            report.right = false;
            if (!report.witness) {
              report.witness = {CancellationSide::right, a, b, c};
            }
          }
          if (!report.left && !report.right) {
            return report;
          }
        }
      }
    }
    return report;
  }

  bool is_group(FiniteSemigroup const& S) {
    auto e = is_monoid(S);
    if (!e) {
      return false;
    }
    std::size_t const n = S.order();
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element b = 0; b < n && !found; ++b) {
        found = S(a, b) == *e && S(b, a) == *e;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Element group_inverse(FiniteSemigroup const& G, Element x) {
    auto e = is_monoid(G);
    if (e) {
      for (Element y = 0; y < G.order(); ++y) {
        if (G(x, y) == *e && G(y, x) == *e) {
          return y;
        }
      }
    }
    fail(ErrorKind::not_a_group, "element has no inverse", {x});
  }

  SubsetHandle center(FiniteSemigroup const& S) {
    std::vector<Element> z;
    for (Element x = 0; x < S.order(); ++x) {
      bool central = true;
      for (Element y = 0; y < S.order() && central; ++y) {
        central = S(x, y) == S(y, x);
      }
      if (central) {
        z.push_back(x);
      }
    }
    return SubsetHandle(S, std::move(z), SubsetRole::center);
  }

  SubsetHandle centralizer(FiniteSemigroup const& S, Element a) {
    if (a >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup", {a});
    }
    std::vector<Element> c;
    for (Element x = 0; x < S.order(); ++x) {
      if (S(x, a) == S(a, x)) {
        c.push_back(x);
      }
    }
    return SubsetHandle(S, std::move(c), SubsetRole::centralizer);
  }

  MonogenicInfo monogenic(FiniteSemigroup const& S, Element s) {
    if (s >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup", {s});
    }
    // first_power[x] = k such that s^k == x, 0 when not yet seen.
    std::vector<std::size_t> first_power(S.order(), 0);
    std::vector<Element>     powers;
    Element                  x = s;
    std::size_t              k = 1;
    while (first_power[x] == 0) {
      first_power[x] = k;
      powers.push_back(x);
      x = S(x, s);
      ++k;
    }
    std::size_t const index  = first_power[x];
    std::size_t const period = k - index;
    // The cycle {s^index, ..., s^(index + period - 1)} is a cyclic group; its
    // identity is the unique power s^m with index <= m and period | m.
    std::size_t m = ((index + period - 1) / period) * period;
    Element     e = powers[m - 1];
    std::size_t count = 0;
    for (Element p : powers) {
      count += S(p, p) == p ? 1 : 0;
    }
    if (count != 1 || S(e, e) != e) {
      fail(ErrorKind::invariant_violation,
           "monogenic subsemigroup without a unique idempotent", {s});
    }
    return MonogenicInfo{SubsetHandle(S, powers, SubsetRole::monogenic), index,
                         period, e};
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (Element a = 0; a < S.order(); ++a) {
      for (Element b = a + 1; b < S.order(); ++b) {
        if (S(a, b) != S(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::pair<FiniteSemigroup, SemigroupMorphism>
  induced_subsemigroup(FiniteSemigroup const& S, std::span<Element const> T) {
    std::vector<Element> members(T.begin(), T.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || !is_closed(S, members)) {
      fail(ErrorKind::not_a_subsemigroup,
           describe(members) + " is not a subsemigroup");
    }
    std::size_t const    m = members.size();
    std::vector<Element> position(S.order(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      position[members[i]] = static_cast<Element>(i);
    }
    std::vector<Element> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = position[S(members[i], members[j])];
      }
    }
    auto T_sg = FiniteSemigroup::from_table(m, std::move(table), {}, m);
    SemigroupMorphism inclusion(T_sg, S, members);
    return {T_sg, std::move(inclusion)};
  }

  FiniteSemigroup opposite(FiniteSemigroup const& S) {
    std::size_t const    n = S.order();
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        table[a * n + b] = S(b, a);
      }
    }
    std::string name = S.name().empty() ? std::string() : S.name() + "^op";
    return FiniteSemigroup::from_table(n, std::move(table), std::move(name), n);
  }

  namespace {
    // Invariants preserved by isomorphisms, used to prune candidate images.
    std::vector<std::size_t> element_signature(FiniteSemigroup const& S) {
      std::size_t const        n = S.order();
      std::vector<std::size_t> sig(n);
      for (Element x = 0; x < n; ++x) {
        std::size_t fixes_left = 0, fixes_right = 0;
        for (Element y = 0; y < n; ++y) {
          fixes_left += S(x, y) == y ? 1 : 0;
          fixes_right += S(y, x) == y ? 1 : 0;
        }
        auto info = monogenic(S, x);
        sig[x]    = ((info.index * 4099 + info.period) * 4099 + fixes_left) * 4099
                 + fixes_right;
      }
      return sig;
    }
  }  // namespace

  std::optional<SemigroupMorphism> find_isomorphism(FiniteSemigroup const& A,
                                                    FiniteSemigroup const& B) {
    std::size_t const n = A.order();
    if (n != B.order()) {
      return std::nullopt;
    }
    auto sig_a = element_signature(A);
    auto sig_b = element_signature(B);
    {
      auto sa = sig_a, sb = sig_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    auto const           gens = greedy_generating_set(n, A.table());
    constexpr Element    unset = static_cast<Element>(-1);
    std::vector<Element> images(gens.size(), 0);

    // Extends an assignment of generator images to a full map by right
    // multiplication; fails on any inconsistency or collision.
    auto extend = [&]() -> std::optional<std::vector<Element>> {
      std::vector<Element> map(n, unset);
      std::vector<Element> queue;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (map[gens[k]] != unset && map[gens[k]] != images[k]) {
          return std::nullopt;
        }
        if (map[gens[k]] == unset) {
          map[gens[k]] = images[k];
          queue.push_back(gens[k]);
        }
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Element x = queue[q];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          Element y     = A(x, gens[k]);
          Element image = B(map[x], images[k]);
          if (map[y] == unset) {
            map[y] = image;
            queue.push_back(y);
          } else if (map[y] != image) {
            return std::nullopt;
          }
        }
      }
      if (queue.size() != n) {
        return std::nullopt;
      }
      std::vector<bool> hit(n, false);
      for (Element y : map) {
        if (hit[y]) {
          return std::nullopt;
        }
        hit[y] = true;
      }
      return map;
    };

    std::optional<SemigroupMorphism> found;
    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == gens.size()) {
        auto map = extend();
        if (!map) {
          return false;
        }
        SemigroupMorphism candidate(A, B, std::move(*map));
        if (!candidate.is_isomorphism()) {
          return false;
        }
        found.emplace(std::move(candidate));
        return true;
      }
      for (Element y = 0; y < n; ++y) {
        if (sig_b[y] != sig_a[gens[k]]) {
          continue;
        }
        images[k] = y;
        if (self(self, k + 1)) {
          return true;
        }
      }
      return false;
    };
    search(search, 0);
    return found;
  }

}  // namespace semikit
