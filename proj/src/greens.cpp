#include "semikit/greens.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace semikit {

  char to_char(Relation rel) noexcept {
    switch (rel) {
      case Relation::L:
        return 'L';
      case Relation::R:
        return 'R';
      case Relation::J:
        return 'J';
      case Relation::H:
        return 'H';
      case Relation::D:
        return 'D';
    }
    return '?';
  }

  ////////////////////////////////////////////////////////////////////////
  // Principal ideals
  ////////////////////////////////////////////////////////////////////////

  std::vector<bool> principal_left_mask(FiniteSemigroup const& S, Element s) {
    std::vector<bool> mask(S.order(), false);
    mask[s] = true;
    for (Element x = 0; x < S.order(); ++x) {
      mask[S(x, s)] = true;
    }
    return mask;
  }

  std::vector<bool> principal_right_mask(FiniteSemigroup const& S, Element s) {
    std::vector<bool> mask(S.order(), false);
    mask[s] = true;
    for (Element y : S.row(s)) {
      mask[y] = true;
    }
    return mask;
  }

  std::vector<bool> principal_two_sided_mask(FiniteSemigroup const& S, Element s) {
    auto const        left = principal_left_mask(S, s);
    std::vector<bool> mask = left;
    for (Element t = 0; t < S.order(); ++t) {
      if (left[t]) {
        for (Element y : S.row(t)) {
          mask[y] = true;
        }
      }
    }
    return mask;
  }

  PrincipalIdeals principal_ideals(FiniteSemigroup const& S, Element s) {
    if (s >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup", {s});
    }
    return PrincipalIdeals{
        SubsetHandle(S, members_of(principal_left_mask(S, s)),
                     SubsetRole::left_ideal),
        SubsetHandle(S, members_of(principal_right_mask(S, s)),
                     SubsetRole::right_ideal),
        SubsetHandle(S, members_of(principal_two_sided_mask(S, s)),
                     SubsetRole::two_sided_ideal)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  Partition canonical_partition(std::vector<std::size_t> const& labels) {
    std::map<std::size_t, ClassId> renumber;
    Partition                      out(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted]
          = renumber.emplace(labels[x], static_cast<ClassId>(renumber.size()));
      out[x] = it->second;
    }
    return out;
  }

  namespace {

    enum class Side { left, right, both };

    Partition by_principal_ideals(FiniteSemigroup const& S, Side side) {
      std::map<std::vector<bool>, std::size_t> seen;
      std::vector<std::size_t>                 labels(S.order());
      for (Element s = 0; s < S.order(); ++s) {
        auto mask = side == Side::left    ? principal_left_mask(S, s)
                    : side == Side::right ? principal_right_mask(S, s)
                                          : principal_two_sided_mask(S, s);
        auto [it, inserted] = seen.emplace(std::move(mask), seen.size());
        labels[s]           = it->second;
      }
      return canonical_partition(labels);
    }

    // Iterative Tarjan over the translation graph: edges s -> xs (left),
    // s -> sx (right) or both. Two elements share a component exactly when
    // each lies in the other's principal ideal of that side.
    Partition by_scc(FiniteSemigroup const& S, Side side) {
      std::size_t const n      = S.order();
      std::size_t const degree = side == Side::both ? 2 * n : n;
      auto              successor = [&](Element v, std::size_t k) -> Element {
        if (side == Side::left) {
          return S(static_cast<Element>(k), v);
        }
        if (side == Side::right || k < n) {
          return S(v, static_cast<Element>(k % n));
        }
        return S(static_cast<Element>(k - n), v);
      };

      constexpr std::size_t    unvisited = static_cast<std::size_t>(-1);
      std::vector<std::size_t> index(n, unvisited), low(n, 0), component(n, 0);
      std::vector<bool>        on_stack(n, false);
      std::vector<Element>     stack;
      std::vector<std::pair<Element, std::size_t>> frames;
      std::size_t                                  counter = 0, components = 0;

      for (Element root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
          continue;
        }
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
          auto& [v, k] = frames.back();
          if (k < degree) {
            Element w = successor(v, k++);
            if (index[w] == unvisited) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          Element done = v;
          frames.pop_back();
          if (!frames.empty()) {
            Element parent = frames.back().first;
            low[parent]    = std::min(low[parent], low[done]);
          }
          if (low[done] == index[done]) {
            Element w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w]  = false;
              component[w] = components;
            } while (w != done);
            ++components;
          }
        }
      }
      return canonical_partition(component);
    }

    Partition compute(FiniteSemigroup const& S, Side side, GreensMethod method) {
      if (method == GreensMethod::automatic) {
        method = S.order() <= principal_ideal_method_limit
                     ? GreensMethod::principal_ideals
                     : GreensMethod::scc;
      }
      return method == GreensMethod::principal_ideals ? by_principal_ideals(S, side)
                                                      : by_scc(S, side);
    }

    std::vector<std::vector<Element>> class_lists(Partition const& p) {
      ClassId count = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
      std::vector<std::vector<Element>> out(count);
      for (Element x = 0; x < p.size(); ++x) {
        out[p[x]].push_back(x);
      }
      return out;
    }

    bool refines(Partition const& fine, Partition const& coarse) {
      std::map<ClassId, ClassId> image;
      for (std::size_t x = 0; x < fine.size(); ++x) {
        auto [it, inserted] = image.emplace(fine[x], coarse[x]);
        if (it->second != coarse[x]) {
          return false;
        }
      }
      return true;
    }

    void require(bool condition, std::string const& what) {
      if (!condition) {
        fail(ErrorKind::invariant_violation, what);
      }
    }

    // a (first o second) b iff some c has a first c and c second b. The
    // related set of a is the union of the `second` classes met by the
    // `first` class of a; the relation is read back as a partition after
    // checking that it is an equivalence.
    Partition compose(Partition const& first, Partition const& second) {
      auto const first_lists  = class_lists(first);
      auto const second_lists = class_lists(second);
      std::vector<std::vector<ClassId>> met(first_lists.size());
      for (std::size_t c = 0; c < first_lists.size(); ++c) {
        for (Element x : first_lists[c]) {
          met[c].push_back(second[x]);
        }
        std::sort(met[c].begin(), met[c].end());
        met[c].erase(std::unique(met[c].begin(), met[c].end()), met[c].end());
      }
      std::map<std::vector<ClassId>, std::size_t> keys;
      std::vector<std::size_t>                    labels(first.size());
      for (std::size_t x = 0; x < first.size(); ++x) {
        auto [it, inserted] = keys.emplace(met[first[x]], keys.size());
        labels[x]           = it->second;
      }
      for (std::size_t c = 0; c < first_lists.size(); ++c) {
        std::size_t key = labels[first_lists[c].front()];
        for (ClassId s : met[c]) {
          for (Element b : second_lists[s]) {
            require(labels[b] == key, "composite relation is not an equivalence");
          }
        }
      }
      return canonical_partition(labels);
    }

  }  // namespace

  Partition l_partition(FiniteSemigroup const& S, GreensMethod method) {
    return compute(S, Side::left, method);
  }

  Partition r_partition(FiniteSemigroup const& S, GreensMethod method) {
    return compute(S, Side::right, method);
  }

  Partition j_partition(FiniteSemigroup const& S, GreensMethod method) {
    return compute(S, Side::both, method);
  }

  ////////////////////////////////////////////////////////////////////////
  // GreensStructure
  ////////////////////////////////////////////////////////////////////////

  GreensStructure::GreensStructure(FiniteSemigroup const& S, GreensMethod method)
      : _parent(S) {
    std::size_t const n = S.order();
    auto&             L = _class[static_cast<std::size_t>(Relation::L)];
    auto&             R = _class[static_cast<std::size_t>(Relation::R)];
    auto&             J = _class[static_cast<std::size_t>(Relation::J)];
    auto&             H = _class[static_cast<std::size_t>(Relation::H)];
    auto&             D = _class[static_cast<std::size_t>(Relation::D)];
    L                   = l_partition(S, method);
    R                   = r_partition(S, method);
    J                   = j_partition(S, method);

    {
      std::vector<std::size_t> labels(n);
      for (Element x = 0; x < n; ++x) {
        labels[x] = static_cast<std::size_t>(L[x]) * n + R[x];
      }
      H = canonical_partition(labels);
    }
    {
      // Join of L and R by union-find.
      std::vector<std::size_t> root(n);
      std::iota(root.begin(), root.end(), std::size_t(0));
      auto find = [&](std::size_t x) {
        while (root[x] != x) {
          root[x] = root[root[x]];
          x       = root[x];
        }
        return x;
      };
      std::vector<std::size_t> first_l(n, n), first_r(n, n);
      for (Element x = 0; x < n; ++x) {
        if (first_l[L[x]] == n) {
          first_l[L[x]] = x;
        }
        if (first_r[R[x]] == n) {
          first_r[R[x]] = x;
        }
        root[find(x)]          = find(first_l[L[x]]);
        root[find(x)]          = find(first_r[R[x]]);
      }
      std::vector<std::size_t> labels(n);
      for (Element x = 0; x < n; ++x) {
        labels[x] = find(x);
      }
      D = canonical_partition(labels);
    }
    for (std::size_t r = 0; r < 5; ++r) {
      _members[r] = class_lists(_class[r]);
    }

    require(refines(H, L) && refines(H, R), "H does not refine L and R");
    require(refines(L, D) && refines(R, D), "L or R does not refine D");
    require(refines(D, J), "D does not refine J");
    require(refines(J, D), "D and J differ on a finite semigroup");
    {
      std::map<std::pair<ClassId, ClassId>, ClassId> pairs;
      for (Element x = 0; x < n; ++x) {
        pairs.emplace(std::make_pair(L[x], R[x]), H[x]);
      }
      require(pairs.size() == count(Relation::H), "H is not the meet of L and R");
    }
    require(compose(R, L) == D, "R o L differs from D");
    require(compose(L, R) == D, "L o R differs from D");

    auto const& d_lists = _members[static_cast<std::size_t>(Relation::D)];
    _eggboxes.reserve(d_lists.size());
    for (ClassId d = 0; d < d_lists.size(); ++d) {
      EggBox box{d, {}, {}, {}};
      for (Element x : d_lists[d]) {
        box.rows.push_back(R[x]);
        box.columns.push_back(L[x]);
      }
      for (auto* v : {&box.rows, &box.columns}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
      }
      constexpr ClassId empty = static_cast<ClassId>(-1);
      box.cells.assign(box.rows.size(),
                       std::vector<ClassId>(box.columns.size(), empty));
      for (Element x : d_lists[d]) {
        auto r = std::lower_bound(box.rows.begin(), box.rows.end(), R[x])
                 - box.rows.begin();
        auto c = std::lower_bound(box.columns.begin(), box.columns.end(), L[x])
                 - box.columns.begin();
        box.cells[r][c] = H[x];
      }
      std::size_t h_size = members(Relation::H, H[d_lists[d].front()]).size();
      for (auto const& row : box.cells) {
        for (ClassId h : row) {
          require(h != empty, "egg-box cell without an H-class");
          require(members(Relation::H, h).size() == h_size,
                  "H-classes of one D-class differ in size");
        }
      }
      _eggboxes.push_back(std::move(box));
    }

    _h_group.assign(count(Relation::H), false);
    for (Element x = 0; x < n; ++x) {
      if (S(x, x) == x) {
        _h_group[H[x]] = true;
      }
    }
  }

  bool GreensStructure::is_group_h_class(ClassId h_class) const {
    return _h_group.at(h_class);
  }

  std::vector<std::pair<ClassId, ClassId>> GreensStructure::j_order_covers() const {
    auto const&       d_lists = members(Relation::D);
    std::size_t const k       = d_lists.size();
    // below[a][b]: D-class b lies in the principal ideal of D-class a.
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (ClassId a = 0; a < k; ++a) {
      auto ideal = principal_two_sided_mask(_parent, d_lists[a].front());
      for (ClassId b = 0; b < k; ++b) {
        below[a][b] = ideal[d_lists[b].front()];
      }
    }
    std::vector<std::pair<ClassId, ClassId>> covers;
    for (ClassId a = 0; a < k; ++a) {
      for (ClassId b = 0; b < k; ++b) {
        if (a == b || !below[a][b]) {
          continue;
        }
        bool covered = true;
        for (ClassId c = 0; c < k && covered; ++c) {
          covered = c == a || c == b || !(below[a][c] && below[c][b]);
        }
        if (covered) {
          covers.emplace_back(a, b);
        }
      }
    }
    return covers;
  }

  GreensStructure greens_structure(FiniteSemigroup const& S, GreensMethod method) {
    return GreensStructure(S, method);
  }

  Partition compose_r_then_l(FiniteSemigroup const&, GreensStructure const& G) {
    return compose(G.classes(Relation::R), G.classes(Relation::L));
  }

  Partition compose_l_then_r(FiniteSemigroup const&, GreensStructure const& G) {
    return compose(G.classes(Relation::L), G.classes(Relation::R));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string cell_label(GreensStructure const& G, ClassId h) {
      std::ostringstream out;
      auto const&        xs = G.members(Relation::H, h);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i == 0 ? "" : ",") << xs[i];
      }
      if (G.is_group_h_class(h)) {
        out << "*";
      }
      return out.str();
    }
  }  // namespace

  std::string eggbox_dot(GreensStructure const& G) {
    std::ostringstream out;
    out << "digraph eggbox {\n";
    out << "  compound=true;\n";
    out << "  node [shape=box];\n";
    for (auto const& box : G.eggboxes()) {
      out << "  subgraph cluster_d" << box.d_class << " {\n";
      out << "    label=\"D" << box.d_class << "\";\n";
      for (auto const& row : box.cells) {
        out << "    { rank=same;";
        for (ClassId h : row) {
          out << " h" << h << ";";
        }
        out << " }\n";
        for (ClassId h : row) {
          out << "    h" << h << " [label=\"" << cell_label(G, h) << "\"];\n";
        }
      }
      out << "  }\n";
    }
    for (auto [upper, lower] : G.j_order_covers()) {
      ClassId from = G.eggbox(upper).cells[0][0];
      ClassId to   = G.eggbox(lower).cells[0][0];
      out << "  h" << from << " -> h" << to << " [ltail=cluster_d" << upper
          << ", lhead=cluster_d" << lower << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string eggbox_text(GreensStructure const& G) {
    std::ostringstream out;
    for (auto const& box : G.eggboxes()) {
      std::size_t width = 1;
      for (auto const& row : box.cells) {
        for (ClassId h : row) {
          width = std::max(width, cell_label(G, h).size());
        }
      }
      out << "D" << box.d_class << ": " << box.rows.size() << " R-class"
          << (box.rows.size() == 1 ? "" : "es") << " x " << box.columns.size()
          << " L-class" << (box.columns.size() == 1 ? "" : "es") << "\n";
      std::string rule = "+";
      for (std::size_t c = 0; c < box.columns.size(); ++c) {
        rule += std::string(width + 2, '-') + "+";
      }
      out << rule << "\n";
      for (auto const& row : box.cells) {
        out << "|";
        for (ClassId h : row) {
          auto label = cell_label(G, h);
          out << " " << label << std::string(width - label.size(), ' ') << " |";
        }
        out << "\n" << rule << "\n";
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  bool h_class_is_group(FiniteSemigroup const& S, SubsetHandle const& h) {
    if (h.empty()) {
      fail(ErrorKind::not_an_h_class, "empty subset");
    }
    GreensStructure G(S);
    auto const&     cls = G.members(Relation::H, G.class_of(Relation::H, h.members()[0]));
    if (cls != h.members()) {
      fail(ErrorKind::not_an_h_class, "subset is not an H-class", h.members());
    }
    bool has_idempotent = std::any_of(cls.begin(), cls.end(),
                                      [&](Element x) { return S(x, x) == x; });
    bool closed_group = is_closed(S, cls) && is_group(induced_subsemigroup(S, cls).first);
    if (has_idempotent != closed_group) {
      fail(ErrorKind::invariant_violation,
           "group H-class characterisations disagree", cls);
    }
    return has_idempotent;
  }

  std::optional<Element> regular_witness(FiniteSemigroup const& S, Element s) {
    if (s >= S.order()) {
      fail(ErrorKind::out_of_range, "element outside the semigroup", {s});
    }
    for (Element t = 0; t < S.order(); ++t) {
      if (S(S(s, t), s) == s) {
        return t;
      }
    }
    return std::nullopt;
  }

  bool is_regular(FiniteSemigroup const& S, Element s) {
    return regular_witness(S, s).has_value();
  }

  bool is_regular_semigroup(FiniteSemigroup const& S) {
    for (Element s = 0; s < S.order(); ++s) {
      if (!is_regular(S, s)) {
        return false;
      }
    }
    return true;
  }

  RestrictionReport greens_restriction_check(FiniteSemigroup const& S,
                                             SubsetHandle const&    T) {
    auto [T_sg, inclusion] = induced_subsemigroup(S, T.members());
    for (Element t = 0; t < T_sg.order(); ++t) {
      if (!is_regular(T_sg, t)) {
        fail(ErrorKind::not_regular_subsemigroup,
             "element " + std::to_string(inclusion(t)) + " is not regular in T",
             {inclusion(t)});
      }
    }
    GreensStructure   inner(T_sg);
    GreensStructure   outer(S);
    RestrictionReport report{true, {}};
    for (Relation rel : {Relation::L, Relation::R, Relation::H}) {
      for (Element a = 0; a < T_sg.order(); ++a) {
        for (Element b = a + 1; b < T_sg.order(); ++b) {
          bool in_t = inner.related(rel, a, b);
          bool in_s = outer.related(rel, inclusion(a), inclusion(b));
          if (in_t != in_s) {
            report.holds = false;
            report.violations.push_back(
                {rel, inclusion(a), inclusion(b), in_t, in_s});
          }
        }
      }
    }
    return report;
  }

  StabilityReport is_stable(FiniteSemigroup const& S, GreensStructure const& G) {
    StabilityReport report{true, true, std::nullopt};
    for (Element s = 0; s < S.order(); ++s) {
      for (Element x = 0; x < S.order(); ++x) {
        Element sx = S(s, x);
        Element xs = S(x, s);
        bool    bad = false;
        if (G.related(Relation::J, s, sx) && !G.related(Relation::R, s, sx)) {
          report.right = false;
          bad          = true;
        }
        if (G.related(Relation::J, s, xs) && !G.related(Relation::L, s, xs)) {
          report.left = false;
          bad         = true;
        }
        if (bad && !report.witness) {
          report.witness = std::make_pair(s, x);
        }
      }
    }
    return report;
  }

  StabilityReport is_stable(FiniteSemigroup const& S) {
    return is_stable(S, GreensStructure(S));
  }

}  // namespace semikit
