#include "semikit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "semikit/greens.hpp"
#include "semikit/ideals.hpp"
#include "semikit/io.hpp"

namespace semikit {

  std::uint64_t Prng::below(std::uint64_t bound) {
    if (bound == 0) {
      fail(ErrorKind::bad_shape, "empty range");
    }
    // Reject the top partial block so every residue is equally likely.
    std::uint64_t const limit
        = std::numeric_limits<std::uint64_t>::max()
          - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = _engine();
    } while (x >= limit);
    return x % bound;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename F>
    FiniteSemigroup tabulate(std::size_t n, std::string name, F&& product) {
      std::vector<Element> table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = static_cast<Element>(product(a, b));
        }
      }
      return FiniteSemigroup::from_table(n, std::move(table), std::move(name));
    }

    void expect_params(std::string_view name, std::vector<std::size_t> const& params,
                       std::size_t count) {
      if (params.size() != count) {
        fail(ErrorKind::unknown_generator,
             std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
      }
      for (std::size_t p : params) {
        if (p == 0) {
          fail(ErrorKind::unknown_generator,
               std::string(name) + " parameters must be positive");
        }
      }
    }

    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   pos = 0;
      while (true) {
        std::size_t end = text.find(sep, pos);
        out.push_back(text.substr(pos, end == std::string_view::npos ? end : end - pos));
        if (end == std::string_view::npos) {
          return out;
        }
        pos = end + 1;
      }
    }

    std::uint64_t to_number(std::string_view text, std::string_view what) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        fail(ErrorKind::unknown_generator,
             "expected a number for " + std::string(what) + ", got '"
                 + std::string(text) + "'");
      }
      return value;
    }

  }  // namespace

  FiniteSemigroup gen_standard(std::string_view name,
                               std::vector<std::size_t> const& params) {
    std::string const label = std::string(name);
    if (name == "trivial") {
      expect_params(name, params, 0);
      return tabulate(1, "trivial", [](auto, auto) { return 0; });
    }
    if (name == "cyclic") {
      expect_params(name, params, 1);
      std::size_t k = params[0];
      return tabulate(k, "Z" + std::to_string(k),
                      [k](std::size_t a, std::size_t b) { return (a + b) % k; });
    }
    if (name == "sym3") {
      expect_params(name, params, 0);
      std::vector<std::array<int, 3>> perms;
      std::array<int, 3>              p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      // (pq)(x) = p(q(x))
      return tabulate(6, "S3", [&](std::size_t a, std::size_t b) {
        std::array<int, 3> r{};
        for (int x = 0; x < 3; ++x) {
          r[x] = perms[a][perms[b][x]];
        }
        return std::find(perms.begin(), perms.end(), r) - perms.begin();
      });
    }
    if (name == "left_zero") {
      expect_params(name, params, 1);
      return tabulate(params[0], "LZ" + std::to_string(params[0]),
                      [](std::size_t a, std::size_t) { return a; });
    }
    if (name == "right_zero") {
      expect_params(name, params, 1);
      return tabulate(params[0], "RZ" + std::to_string(params[0]),
                      [](std::size_t, std::size_t b) { return b; });
    }
    if (name == "rect_band") {
      expect_params(name, params, 2);
      std::size_t const cols = params[1];
      // (i, l)(j, m) = (i, m) with (i, l) at i * cols + l
      return tabulate(params[0] * cols,
                      "RB" + std::to_string(params[0]) + std::to_string(cols),
                      [cols](std::size_t a, std::size_t b) {
                        return (a / cols) * cols + b % cols;
                      });
    }
    if (name == "t2") {
      expect_params(name, params, 0);
      return FiniteSemigroup::from_rows(
          {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}}, "T2");
    }
    if (name == "product_band") {
      expect_params(name, params, 0);
      // {0,1} x {x,y} with (a, b)(c, d) = (ac, b); (a, b) at 2a + b.
      return tabulate(4, "PB", [](std::size_t s, std::size_t t) {
        std::size_t a = s / 2, b = s % 2, c = t / 2;
        return 2 * (a * c) + b;
      });
    }
    fail(ErrorKind::unknown_generator, "unknown generator '" + label + "'");
  }

  FiniteSemigroup group_by_name(std::string_view name) {
    if (name == "trivial") {
      return gen_standard("trivial");
    }
    if (name == "S3") {
      return gen_standard("sym3");
    }
    if (name == "Z2xZ2") {
      auto z2 = gen_standard("cyclic", {2});
      return direct_product(z2, z2).with_name("Z2xZ2");
    }
    if (name.size() > 1 && name[0] == 'Z') {
      return gen_standard("cyclic", {to_number(name.substr(1), "cyclic order")});
    }
    fail(ErrorKind::unknown_generator, "unknown group '" + std::string(name) + "'");
  }

  ReesMatrixSemigroup gen_random_rees(std::size_t i_size, std::size_t lambda_size,
                                      std::string_view group_name, std::uint64_t seed) {
    if (i_size == 0 || lambda_size == 0) {
      fail(ErrorKind::bad_shape, "index set sizes must be positive");
    }
    auto                 G = group_by_name(group_name);
    Prng                 rng(seed);
    std::vector<Element> P(i_size * lambda_size);
    for (auto& p : P) {
      p = static_cast<Element>(rng.below(G.order()));
    }
    return rees_construct(i_size, lambda_size, G, P);
  }

  FiniteSemigroup transformation_closure(std::size_t degree, std::size_t generators,
                                         std::uint64_t seed) {
    if (degree == 0 || generators == 0 || degree > 255) {
      fail(ErrorKind::bad_shape, "degree must be in [1, 255] and generators positive");
    }
    using Map = std::string;  // images as bytes, hashable
    Prng             rng(seed);
    std::vector<Map> gens;
    for (std::size_t k = 0; k < generators; ++k) {
      Map g(degree, '\0');
      for (auto& c : g) {
        c = static_cast<char>(rng.below(degree));
      }
      gens.push_back(std::move(g));
    }
    auto compose = [degree](Map const& x, Map const& y) {
      Map r(degree, '\0');
      for (std::size_t p = 0; p < degree; ++p) {
        r[p] = y[static_cast<unsigned char>(x[p])];
      }
      return r;
    };
    std::size_t const                    cap = default_max_order();
    std::vector<Map>                     elements;
    std::unordered_map<Map, std::size_t> index;
    auto add = [&](Map m) {
      if (index.emplace(m, elements.size()).second) {
        if (elements.size() == cap) {
          fail(ErrorKind::overflow, "transformation closure exceeds the maximum "
                                    "order " + std::to_string(cap));
        }
        elements.push_back(std::move(m));
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t q = 0; q < elements.size(); ++q) {
      for (auto const& g : gens) {
        add(compose(elements[q], g));
      }
    }
    std::size_t const    n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Element>(index.at(compose(elements[a], elements[b])));
      }
    }
    std::ostringstream name;
    name << "T" << degree << "-" << generators << "-" << seed;
    return FiniteSemigroup::from_table(n, std::move(table), name.str());
  }

  FiniteSemigroup from_descriptor(std::string_view descriptor) {
    auto        colon = descriptor.find(':');
    auto        name  = descriptor.substr(0, colon);
    std::vector<std::string_view> args;
    if (colon != std::string_view::npos) {
      args = split(descriptor.substr(colon + 1), ',');
    }
    std::string const label(descriptor);
    if (name == "random_rees") {
      if (args.size() != 4) {
        fail(ErrorKind::unknown_generator,
             "random_rees takes I,LAMBDA,GROUP,SEED");
      }
      auto rms = gen_random_rees(to_number(args[0], "|I|"), to_number(args[1], "|Lambda|"),
                                 args[2], to_number(args[3], "seed"));
      return rms.realized().with_name(label);
    }
    if (name == "transformation") {
      if (args.size() != 3) {
        fail(ErrorKind::unknown_generator, "transformation takes DEGREE,GENS,SEED");
      }
      return transformation_closure(to_number(args[0], "degree"),
                                    to_number(args[1], "generators"),
                                    to_number(args[2], "seed"))
          .with_name(label);
    }
    if (name == "group") {
      if (args.size() != 1) {
        fail(ErrorKind::unknown_generator, "group takes one group name");
      }
      return group_by_name(args[0]).with_name(label);
    }
    std::vector<std::size_t> params;
    for (auto a : args) {
      params.push_back(to_number(a, "a parameter"));
    }
    return gen_standard(name, params).with_name(label);
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> canonical_form(FiniteSemigroup const& S) {
    std::size_t const    n = S.order();
    std::vector<Element> perm(n), inv(n);  // perm: old -> new
    std::iota(perm.begin(), perm.end(), Element(0));
    std::vector<Element> best(S.table().begin(), S.table().end());
    std::vector<Element> candidate(n * n);
    do {
      for (Element x = 0; x < n; ++x) {
        inv[perm[x]] = x;
      }
      // Fill the relabeled table in row-major order and stop as soon as a
      // prefix exceeds the best one.
      bool smaller = false, abandoned = false;
      for (std::size_t k = 0; k < n * n && !abandoned; ++k) {
        Element v    = perm[S(inv[k / n], inv[k % n])];
        candidate[k] = v;
        if (!smaller) {
          if (v > best[k]) {
            abandoned = true;
          } else if (v < best[k]) {
            smaller = true;
          }
        }
      }
      if (smaller && !abandoned) {
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  namespace {

    // Row-major backtracking over n x n tables; a partial table is kept
    // only while no fully defined triple breaks associativity.
    template <typename F>
    void for_each_associative_table(std::size_t n, F&& visit) {
      constexpr Element    unset = static_cast<Element>(-1);
      std::vector<Element> t(n * n, unset);
      auto                 consistent = [&]() {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            Element ab = t[a * n + b];
            if (ab == unset) {
              continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
              Element bc = t[b * n + c];
              if (bc == unset) {
                continue;
              }
              Element left = t[ab * n + c], right = t[a * n + bc];
              if (left != unset && right != unset && left != right) {
                return false;
              }
            }
          }
        }
        return true;
      };
      auto fill = [&](auto&& self, std::size_t cell) -> void {
        if (cell == n * n) {
          visit(t);
          return;
        }
        for (Element v = 0; v < n; ++v) {
          t[cell] = v;
          if (consistent()) {
            self(self, cell + 1);
          }
        }
        t[cell] = unset;
      };
      fill(fill, 0);
    }

  }  // namespace

  CensusResult census(std::size_t max_order, std::size_t limit, bool fold_opposites) {
    if (max_order == 0) {
      fail(ErrorKind::bad_shape, "census order must be positive");
    }
    if (max_order > limit) {
      fail(ErrorKind::census_limit_exceeded,
           "census order " + std::to_string(max_order) + " exceeds the limit "
               + std::to_string(limit));
    }
    CensusResult result;
    result.counts.assign(max_order + 1, 0);
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::set<std::vector<Element>> classes;
      for_each_associative_table(n, [&](std::vector<Element> const& t) {
        auto S   = FiniteSemigroup::from_table(n, t, {}, n);
        auto key = canonical_form(S);
        if (fold_opposites) {
          key = std::min(key, canonical_form(opposite(S)));
        }
        classes.insert(std::move(key));
      });
      result.counts[n] = classes.size();
      std::size_t k    = 0;
      for (auto const& t : classes) {
        std::ostringstream name;
        name << "census-" << n << "-" << std::setw(3) << std::setfill('0') << k++;
        result.semigroups.push_back(FiniteSemigroup::from_table(n, t, name.str(), n));
      }
    }
    return result;
  }

  namespace {
    constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
    constexpr std::uint64_t fnv_prime  = 0x100000001b3ULL;

    void fnv_word(std::uint64_t& h, std::uint32_t word) {
      for (int byte = 0; byte < 4; ++byte) {
        h ^= (word >> (8 * byte)) & 0xffU;
        h *= fnv_prime;
      }
    }

    void fnv_table(std::uint64_t& h, FiniteSemigroup const& S) {
      fnv_word(h, static_cast<std::uint32_t>(S.order()));
      for (Element x : S.table()) {
        fnv_word(h, x);
      }
    }
  }  // namespace

  std::uint64_t fingerprint(std::vector<FiniteSemigroup> const& semigroups) {
    std::uint64_t h = fnv_offset;
    for (auto const& S : semigroups) {
      fnv_table(h, S);
    }
    return h;
  }

  std::uint64_t fingerprint(FiniteSemigroup const& S) {
    std::uint64_t h = fnv_offset;
    fnv_table(h, S);
    return h;
  }

  std::string to_hex(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << value;
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus
  ////////////////////////////////////////////////////////////////////////

  std::vector<CorpusInstance> resolve(CorpusSpec const& spec) {
    if (spec.limits.max_order == 0 || spec.limits.max_census_order == 0
        || spec.limits.subset_cap == 0) {
      fail(ErrorKind::bad_shape, "corpus limits must be positive");
    }
    std::vector<CorpusInstance> out;
    if (spec.census_max_order) {
      auto result = census(*spec.census_max_order, spec.limits.max_census_order);
      for (auto& S : result.semigroups) {
        out.push_back({std::move(S), "census:" + std::to_string(*spec.census_max_order)});
      }
    }
    for (auto const& d : spec.generators) {
      auto S = from_descriptor(d);
      if (S.order() > spec.limits.max_order) {
        fail(ErrorKind::overflow, d + " exceeds the corpus maximum order");
      }
      out.push_back({std::move(S), d});
    }
    return out;
  }

  namespace {
    std::string file_stem(std::string const& name) {
      std::string out;
      for (char c : name) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
        out += ok ? c : '_';
      }
      return out;
    }

    nlohmann::json seed_of(std::string const& generator) {
      bool seeded = generator.rfind("random_rees:", 0) == 0
                    || generator.rfind("transformation:", 0) == 0;
      if (!seeded) {
        return nullptr;
      }
      auto last = generator.substr(generator.rfind(',') + 1);
      return std::stoull(last);
    }
  }  // namespace

  void write_corpus(std::filesystem::path const&       dir,
                    std::vector<CorpusInstance> const& instances) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      fail(ErrorKind::io_error, "cannot create " + dir.string() + ": " + ec.message());
    }
    nlohmann::json manifest;
    manifest["format"] = "semikit-corpus/1";
    manifest["prng"]   = prng_algorithm;
    nlohmann::json             entries = nlohmann::json::array();
    std::vector<FiniteSemigroup> all;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      auto const&        inst = instances[k];
      std::ostringstream file;
      file << std::setw(4) << std::setfill('0') << k << "-"
           << file_stem(inst.semigroup.name().empty() ? "semigroup"
                                                      : inst.semigroup.name())
           << ".sg";
      io::write_sg(dir / file.str(), inst.semigroup);
      entries.push_back({{"file", file.str()},
                         {"name", inst.semigroup.name()},
                         {"generator", inst.generator},
                         {"seed", seed_of(inst.generator)},
                         {"fingerprint", to_hex(fingerprint(inst.semigroup))}});
      all.push_back(inst.semigroup);
    }
    manifest["instances"]   = std::move(entries);
    manifest["fingerprint"] = to_hex(fingerprint(all));
    io::write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  }

  std::vector<CorpusInstance> read_corpus(std::filesystem::path const& dir) {
    std::vector<CorpusInstance> out;
    auto const                  manifest_path = dir / "manifest.json";
    if (std::filesystem::exists(manifest_path)) {
      nlohmann::json manifest;
      try {
        manifest = nlohmann::json::parse(io::read_text(manifest_path));
      } catch (nlohmann::json::exception const& e) {
        fail(ErrorKind::parse_error, "manifest.json: " + std::string(e.what()));
      }
      for (auto const& entry : manifest.at("instances")) {
        auto file = entry.at("file").get<std::string>();
        auto S    = io::parse_sg(io::read_text(dir / file),
                              entry.at("name").get<std::string>());
        if (to_hex(fingerprint(S)) != entry.at("fingerprint").get<std::string>()) {
          fail(ErrorKind::parse_error, file + ": fingerprint mismatch");
        }
        out.push_back({std::move(S), entry.at("generator").get<std::string>()});
      }
      return out;
    }
    if (!std::filesystem::is_directory(dir)) {
      fail(ErrorKind::io_error, dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".sg") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (auto const& f : files) {
      out.push_back({io::read_sg(f), "file:" + f.filename().string()});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const& verification_checks() {
    static std::vector<std::string> const names = {
        "idempotent_existence",
        "kernel_unique_minimal",
        "minimal_ideal_equivalences",
        "cancellative_iff_group",
        "single_idempotent_monoid_is_group",
        "subsemigroup_of_group_is_subgroup",
        "swelling",
        "d_equals_rl_lr",
        "h_equals_l_meet_r",
        "kernel_rees_round_trip",
        "regular_green_restriction",
        "subsemigroup_classification",
        "stability",
        "monogenic_unique_idempotent",
    };
    return names;
  }

  bool InstanceReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](CheckResult const& c) { return c.status == CheckStatus::pass; });
  }

  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>>
  VerificationReport::per_check() const {
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> out;
    for (auto const& name : verification_checks()) {
      out.push_back({name, {0, 0}});
    }
    for (auto const& inst : instances) {
      for (auto const& c : inst.checks) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](auto const& p) { return p.first == c.check; });
        if (it == out.end()) {
          it = out.insert(out.end(), {c.check, {0, 0}});
        }
        (c.status == CheckStatus::pass ? it->second.first : it->second.second)++;
      }
    }
    return out;
  }

  namespace {

    // Thrown inside a check body to record a failure with its witness.
    struct CheckFailure {
      std::string          message;
      std::vector<Element> elements;
    };

    void expect(bool condition, std::string message, std::vector<Element> elements = {}) {
      if (!condition) {
        throw CheckFailure{std::move(message), std::move(elements)};
      }
    }

    std::vector<std::vector<Element>> all_nonempty_subsets(std::size_t n) {
      std::vector<std::vector<Element>> out;
      for (std::uint32_t bits = 1; bits < (std::uint32_t(1) << n); ++bits) {
        std::vector<Element> s;
        for (Element x = 0; x < n; ++x) {
          if (bits & (std::uint32_t(1) << x)) {
            s.push_back(x);
          }
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    bool is_identity_map(SemigroupMorphism const& m) {
      for (Element x = 0; x < m.map().size(); ++x) {
        if (m(x) != x) {
          return false;
        }
      }
      return true;
    }

    void check_kernel(FiniteSemigroup const& S, VerifyOptions const& opt) {
      auto report = kernel(S);
      auto const& K = report.kernel.members();
      expect(!K.empty(), "empty kernel");
      expect(K == kernel_by_intersection(S),
             "kernel differs from the intersection of principal ideals", K);
      bool by_search = is_minimal_two_sided_ideal(S, K, MinimalityMethod::exhaustive);
      bool by_rule   = is_minimal_two_sided_ideal(S, K, MinimalityMethod::criterion);
      expect(by_search && by_rule, "kernel is not minimal", K);
      if (S.order() <= opt.ideal_enumeration) {
        std::size_t minimal = 0;
        auto        ideals  = enumerate_ideals(S, opt.ideal_enumeration);
        for (auto const& J : ideals) {
          expect(std::includes(J.begin(), J.end(), K.begin(), K.end()),
                 "an ideal does not contain the kernel", J);
          bool has_smaller = std::any_of(ideals.begin(), ideals.end(), [&](auto const& I) {
            return I.size() < J.size() && std::includes(J.begin(), J.end(), I.begin(), I.end());
          });
          minimal += has_smaller ? 0 : 1;
        }
        expect(minimal == 1, "minimal ideal is not unique");
      }
    }

    void check_minimal_ideal_equivalences(FiniteSemigroup const& S) {
      auto const K = kernel_members(S);
      bool       has_kernel_idempotent = false;
      auto const E = idempotents(S);
      for (Element e : E.members()) {
        auto v         = minimal_ideal_equivalences(S, e);
        bool in_kernel = std::binary_search(K.begin(), K.end(), e);
        has_kernel_idempotent |= in_kernel;
        expect(v.value() == in_kernel,
               "minimal-ideal statements hold exactly at idempotents of the kernel",
               {e});
        auto by_search = is_minimal_left_ideal(S, v.Se, MinimalityMethod::exhaustive);
        auto by_rule   = is_minimal_left_ideal(S, v.Se, MinimalityMethod::criterion);
        expect(by_search == by_rule, "minimality methods disagree on Se", {e});
        by_search = is_minimal_right_ideal(S, v.eS, MinimalityMethod::exhaustive);
        by_rule   = is_minimal_right_ideal(S, v.eS, MinimalityMethod::criterion);
        expect(by_search == by_rule, "minimality methods disagree on eS", {e});
      }
      expect(has_kernel_idempotent, "E(K) is empty", K);
    }

    void check_subgroups(FiniteSemigroup const& S, VerifyOptions const& opt) {
      GreensStructure G(S);
      for (ClassId h = 0; h < G.count(Relation::H); ++h) {
        if (!G.is_group_h_class(h)) {
          continue;
        }
        auto const& members = G.members(Relation::H, h);
        if (members.size() > opt.subset_cap) {
          continue;
        }
        auto group = induced_subsemigroup(S, members).first;
        expect(is_group(group), "group H-class is not a group", members);
        for (auto& T : subsemigroup_sets(group, opt.subset_cap)) {
          SubsetHandle handle(group, T, SubsetRole::subsemigroup);
          expect(subsemigroup_of_group_check(group, handle),
                 "subsemigroup of a group is not a subgroup", members);
        }
      }
    }

    void check_swelling(FiniteSemigroup const& S, VerifyOptions const& opt) {
      std::vector<std::vector<Element>> subsets;
      if (S.order() <= opt.swelling_exhaustive) {
        subsets = all_nonempty_subsets(S.order());
      } else {
        std::vector<Element> all(S.order());
        std::iota(all.begin(), all.end(), Element(0));
        subsets.push_back(all);
        subsets.push_back(kernel_members(S));
        for (Element s = 0; s < S.order(); ++s) {
          subsets.push_back(members_of(principal_left_mask(S, s)));
          subsets.push_back(members_of(principal_right_mask(S, s)));
        }
      }
      for (auto const& A : subsets) {
        for (Element t : A) {
          auto v = swelling_check(S, A, t);
          expect(!v.hypothesis || v.equal, "A is properly contained in tA", A);
        }
      }
    }

    void check_d_composition(FiniteSemigroup const& S) {
      GreensStructure G(S);
      auto const&     D = G.classes(Relation::D);
      expect(compose_r_then_l(S, G) == D, "R o L differs from D");
      expect(compose_l_then_r(S, G) == D, "L o R differs from D");
      expect(G.classes(Relation::J) == D, "J differs from D");
      if (S.order() <= principal_ideal_method_limit) {
        expect(l_partition(S, GreensMethod::scc) == l_partition(S, GreensMethod::principal_ideals),
               "L methods disagree");
        expect(r_partition(S, GreensMethod::scc) == r_partition(S, GreensMethod::principal_ideals),
               "R methods disagree");
        expect(j_partition(S, GreensMethod::scc) == j_partition(S, GreensMethod::principal_ideals),
               "J methods disagree");
      }
    }

    void check_h_meet(FiniteSemigroup const& S) {
      GreensStructure G(S);
      for (Element a = 0; a < S.order(); ++a) {
        for (Element b = 0; b < S.order(); ++b) {
          bool h  = G.related(Relation::H, a, b);
          bool lr = G.related(Relation::L, a, b) && G.related(Relation::R, a, b);
          expect(h == lr, "H differs from L meet R", {a, b});
        }
      }
    }

    void check_rees_round_trip(FiniteSemigroup const& S) {
      auto const K      = kernel_members(S);
      auto [Ksg, incl]  = induced_subsemigroup(S, K);
      expect(is_completely_simple(Ksg), "kernel is not completely simple", K);
      std::vector<ReesDecomposition> decomps;
      auto const E = idempotents(Ksg);
      for (Element e : E.members()) {
        auto d = rees_decompose(Ksg, e);
        expect(d.phi.is_isomorphism(), "phi is not an isomorphism", {incl(e)});
        expect(is_identity_map(d.phi.then(d.psi)), "psi o phi is not the identity",
               {incl(e)});
        expect(is_identity_map(d.psi.then(d.phi)), "phi o psi is not the identity",
               {incl(e)});
        decomps.push_back(std::move(d));
      }
      for (auto const& a : decomps) {
        for (auto const& b : decomps) {
          auto bridge = a.phi.then(b.psi);
          expect(bridge.is_isomorphism(), "decompositions at two idempotents differ",
                 {incl(a.e), incl(b.e)});
        }
      }
      auto [Q, pi] = rees_quotient(S, K);
      expect(Q.order() == S.order() - K.size() + 1, "Rees quotient has the wrong size");
      std::set<Element> images;
      for (Element x = 0; x < S.order(); ++x) {
        if (!std::binary_search(K.begin(), K.end(), x)) {
          expect(images.insert(pi(x)).second, "projection is not injective off K", {x});
        }
      }
    }

    void check_restriction(FiniteSemigroup const& S, VerifyOptions const& opt) {
      std::vector<std::vector<Element>> candidates;
      candidates.push_back(kernel_members(S));
      if (S.order() <= opt.subset_cap) {
        for (auto& T : subsemigroup_sets(S, opt.subset_cap)) {
          candidates.push_back(std::move(T));
        }
      }
      for (auto const& T : candidates) {
        if (!is_regular_semigroup(induced_subsemigroup(S, T).first)) {
          continue;
        }
        auto report = greens_restriction_check(S, SubsetHandle(S, T, SubsetRole::subsemigroup));
        if (!report.holds) {
          auto const& v = report.violations.front();
          expect(false, std::string("Green's ") + to_char(v.relation)
                            + " of a regular subsemigroup is not the restriction",
                 {v.a, v.b});
        }
      }
    }

    void check_classification(FiniteSemigroup const& S, VerifyOptions const& opt) {
      std::vector<FiniteSemigroup> targets;
      if (is_completely_simple(S)) {
        targets.push_back(S);
      }
      auto K = kernel_members(S);
      if (K.size() < S.order()) {
        targets.push_back(induced_subsemigroup(S, K).first);
      }
      for (auto const& T : targets) {
        if (T.order() > opt.subset_cap) {
          continue;
        }
        auto subs = enumerate_subsemigroups(T, opt.subset_cap);
        expect(subs.size() <= subsemigroup_count_bound(T), "counting bound fails");
      }
    }

    void check_monogenic(FiniteSemigroup const& S) {
      for (Element s = 0; s < S.order(); ++s) {
        auto        info  = monogenic(S, s);
        std::size_t count = 0;
        for (Element x : info.subset.members()) {
          count += S(x, x) == x ? 1 : 0;
        }
        expect(count == 1, "monogenic subsemigroup without a unique idempotent", {s});
      }
    }

  }  // namespace

  InstanceReport verify_instance(CorpusInstance const& instance,
                                 VerifyOptions const&  opt) {
    auto const&    S = instance.semigroup;
    InstanceReport report{S.name(), instance.generator, fingerprint(S), S, {}};

    auto run = [&](std::string const& name, auto&& body) {
      CheckResult result{name, CheckStatus::pass, {}, {}};
      try {
        body();
      } catch (CheckFailure const& f) {
        result = {name, CheckStatus::fail, f.message, f.elements};
      } catch (Error const& e) {
        result = {name, CheckStatus::fail, e.what(), e.witness()};
      } catch (std::exception const& e) {
        result = {name, CheckStatus::fail, e.what(), {}};
      }
      report.checks.push_back(std::move(result));
    };

    auto const& names = verification_checks();
    run(names[0], [&] { expect(!idempotents(S).empty(), "no idempotent"); });
    run(names[1], [&] { check_kernel(S, opt); });
    run(names[2], [&] { check_minimal_ideal_equivalences(S); });
    run(names[3], [&] {
      auto c = is_cancellative(S);
      expect((c.left && c.right) == is_group(S), "cancellative differs from group");
    });
    run(names[4], [&] {
      if (is_monoid(S) && idempotents(S).size() == 1) {
        expect(is_group(S), "monoid with a single idempotent is not a group");
      }
    });
    run(names[5], [&] { check_subgroups(S, opt); });
    run(names[6], [&] { check_swelling(S, opt); });
    run(names[7], [&] { check_d_composition(S); });
    run(names[8], [&] { check_h_meet(S); });
    run(names[9], [&] { check_rees_round_trip(S); });
    run(names[10], [&] { check_restriction(S, opt); });
    run(names[11], [&] { check_classification(S, opt); });
    run(names[12], [&] {
      auto st = is_stable(S);
      expect(st.right && st.left, "semigroup is not stable",
             st.witness ? std::vector<Element>{st.witness->first, st.witness->second}
                        : std::vector<Element>{});
    });
    run(names[13], [&] { check_monogenic(S); });
    return report;
  }

  VerificationReport verify_suite(std::vector<CorpusInstance> const& corpus,
                                  VerifyOptions const&               opt) {
    std::vector<InstanceReport> results(corpus.size(),
                                        InstanceReport{{}, {}, 0, corpus.empty()
                                                                     ? gen_standard("trivial")
                                                                     : corpus[0].semigroup,
                                                       {}});
    std::size_t threads = opt.threads != 0 ? opt.threads
                                           : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(corpus.size(), 1));
    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (std::size_t k = next++; k < corpus.size(); k = next++) {
        results[k] = verify_instance(corpus[k], opt);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    VerificationReport report;
    std::vector<FiniteSemigroup> all;
    for (auto const& inst : corpus) {
      all.push_back(inst.semigroup);
    }
    report.corpus_fingerprint = fingerprint(all);
    std::stable_sort(results.begin(), results.end(), [](auto const& a, auto const& b) {
      return a.fingerprint != b.fingerprint ? a.fingerprint < b.fingerprint
                                            : a.name < b.name;
    });
    for (auto const& r : results) {
      report.checks_run += r.checks.size();
      for (auto const& c : r.checks) {
        report.failures += c.status == CheckStatus::fail ? 1 : 0;
      }
    }
    report.instances = std::move(results);
    return report;
  }

  VerificationReport verify_suite(CorpusSpec const& spec, VerifyOptions const& opt) {
    VerifyOptions o = opt;
    o.subset_cap    = std::min(o.subset_cap, spec.limits.subset_cap);
    return verify_suite(resolve(spec), o);
  }

  nlohmann::json to_json(VerificationReport const& report) {
    nlohmann::json doc;
    doc["corpus_fingerprint"] = to_hex(report.corpus_fingerprint);
    doc["prng"]               = prng_algorithm;
    doc["summary"]            = {{"instances", report.instances.size()},
                                 {"checks", report.checks_run},
                                 {"failures", report.failures},
                                 {"status", report.passed() ? "pass" : "fail"}};
    nlohmann::json instances = nlohmann::json::array();
    for (auto const& inst : report.instances) {
      nlohmann::json checks = nlohmann::json::array();
      for (auto const& c : inst.checks) {
        nlohmann::json entry{{"check", c.check},
                             {"status", c.status == CheckStatus::pass ? "pass" : "fail"},
                             {"witness", nullptr}};
        if (c.status == CheckStatus::fail) {
          nlohmann::json rows = nlohmann::json::array();
          for (Element a = 0; a < inst.semigroup.order(); ++a) {
            auto row = inst.semigroup.row(a);
            rows.push_back(std::vector<Element>(row.begin(), row.end()));
          }
          entry["witness"] = {{"message", c.message},
                              {"elements", c.elements},
                              {"table", std::move(rows)}};
        }
        checks.push_back(std::move(entry));
      }
      instances.push_back({{"name", inst.name},
                           {"generator", inst.generator},
                           {"fingerprint", to_hex(inst.fingerprint)},
                           {"checks", std::move(checks)}});
    }
    doc["instances"] = std::move(instances);
    return doc;
  }

}  // namespace semikit
