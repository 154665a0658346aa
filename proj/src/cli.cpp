#include "semikit/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semikit/corpus.hpp"
#include "semikit/greens.hpp"
#include "semikit/ideals.hpp"
#include "semikit/io.hpp"
#include "semikit/simple.hpp"

namespace semikit::cli {

  namespace {

    using nlohmann::json;

    // Raised for a bad flag value after CLI11 has accepted the syntax.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    std::string braces(std::vector<Element> const& xs) {
      std::ostringstream out;
      out << "{";
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out << (k == 0 ? "" : ",") << xs[k];
      }
      out << "}";
      return out.str();
    }

    json rows_of(FiniteSemigroup const& S) {
      json rows = json::array();
      for (Element a = 0; a < S.order(); ++a) {
        auto row = S.row(a);
        rows.push_back(std::vector<Element>(row.begin(), row.end()));
      }
      return rows;
    }

    json handles(std::vector<SubsetHandle> const& hs) {
      json out = json::array();
      for (auto const& h : hs) {
        out.push_back(h.members());
      }
      return out;
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    struct Options {
      std::string format = "human";
      std::string file;
      std::string dot;
      std::optional<Element> base;
      std::string            emit_rms;
      std::vector<Element>   ideal;
      std::size_t            cap = default_subsemigroup_cap;
      std::string            descriptor;
      std::string            output;
      std::size_t            max_order = 0;
      std::string            corpus;

      bool structured() const {
        return format == "structured";
      }
    };

    void emit(std::ostream& out, json const& doc) {
      out << doc.dump(2) << "\n";
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int do_validate(Options const& o, std::ostream& out) {
      auto S = io::read_sg(o.file);
      if (o.structured()) {
        emit(out, {{"associative", true}, {"order", S.order()}, {"name", S.name()}});
      } else {
        out << "associative, order " << S.order() << "\n";
      }
      return exit_ok;
    }

    int do_report(Options const& o, std::ostream& out) {
      auto S      = io::read_sg(o.file);
      auto E      = idempotents(S).members();
      auto Z      = center(S).members();
      auto one    = is_monoid(S);
      auto canc   = is_cancellative(S);
      auto bands  = band_predicates(S);
      json preds  = {{"commutative", is_commutative(S)},
                     {"monoid", one.has_value()},
                     {"group", is_group(S)},
                     {"left_cancellative", canc.left},
                     {"right_cancellative", canc.right},
                     {"band", bands.is_band},
                     {"rectangular_band", bands.is_rectangular_band},
                     {"rectangular_group", bands.is_rectangular_group},
                     {"regular", is_regular_semigroup(S)},
                     {"simple", is_simple(S)},
                     {"completely_simple", is_completely_simple(S)}};
      if (o.structured()) {
        emit(out, {{"order", S.order()},
                   {"idempotents", E},
                   {"center", Z},
                   {"identity", one ? json(*one) : json(nullptr)},
                   {"predicates", preds}});
        return exit_ok;
      }
      out << "order " << S.order() << "\n";
      out << "idempotents " << braces(E) << "\n";
      out << "center " << braces(Z) << "\n";
      out << "identity " << (one ? std::to_string(*one) : std::string("none")) << "\n";
      for (auto const& [key, value] : preds.items()) {
        out << key << " " << yes_no(value.get<bool>()) << "\n";
      }
      return exit_ok;
    }

    int do_greens(Options const& o, std::ostream& out) {
      auto            S = io::read_sg(o.file);
      GreensStructure G(S);
      if (!o.dot.empty()) {
        auto dot = eggbox_dot(G);
        if (o.dot == "-") {
          out << dot;
          return exit_ok;
        }
        io::write_text(o.dot, dot);
      }
      if (o.structured()) {
        json boxes = json::array();
        for (auto const& box : G.eggboxes()) {
          json cells = json::array();
          for (auto const& row : box.cells) {
            json r = json::array();
            for (ClassId h : row) {
              r.push_back(G.members(Relation::H, h));
            }
            cells.push_back(std::move(r));
          }
          boxes.push_back({{"d_class", box.d_class},
                           {"rows", box.rows},
                           {"columns", box.columns},
                           {"cells", std::move(cells)}});
        }
        json groups = json::array();
        for (ClassId h = 0; h < G.count(Relation::H); ++h) {
          if (G.is_group_h_class(h)) {
            groups.push_back(h);
          }
        }
        emit(out, {{"order", S.order()},
                   {"l_classes", G.members(Relation::L)},
                   {"r_classes", G.members(Relation::R)},
                   {"h_classes", G.members(Relation::H)},
                   {"d_classes", G.members(Relation::D)},
                   {"j_classes", G.members(Relation::J)},
                   {"group_h_classes", std::move(groups)},
                   {"eggbox", std::move(boxes)}});
        return exit_ok;
      }
      for (Relation rel : all_relations) {
        out << to_char(rel) << "-classes (" << G.count(rel) << "):";
        for (auto const& cls : G.members(rel)) {
          out << " " << braces(cls);
        }
        out << "\n";
      }
      out << "\n" << eggbox_text(G);
      return exit_ok;
    }

    int do_kernel(Options const& o, std::ostream& out) {
      auto S = io::read_sg(o.file);
      auto K = kernel(S);
      if (o.structured()) {
        json verdicts = json::array();
        for (auto const& v : K.verdicts) {
          verdicts.push_back({{"e", v.e},
                              {"Se_minimal_left", v.left_minimal},
                              {"eSe_group", v.local_group},
                              {"eS_minimal_right", v.right_minimal},
                              {"kernel_is_SeS", v.kernel_is_SeS},
                              {"Se", v.Se},
                              {"eS", v.eS},
                              {"eSe", v.eSe}});
        }
        emit(out, {{"kernel", K.kernel.members()},
                   {"kernel_idempotents", K.kernel_idempotents},
                   {"idempotents", idempotents(S).members()},
                   {"primitive_idempotents", idempotent_poset(S).primitives()},
                   {"minimal_left_ideals", handles(K.min_left)},
                   {"minimal_right_ideals", handles(K.min_right)},
                   {"verdicts", std::move(verdicts)}});
        return exit_ok;
      }
      out << "K = " << braces(K.kernel.members()) << "\n";
      out << "E(S) = " << braces(idempotents(S).members()) << "\n";
      out << "E(K) = " << braces(K.kernel_idempotents) << "\n";
      out << "primitive idempotents = " << braces(idempotent_poset(S).primitives()) << "\n";
      out << "minimal left ideals:";
      for (auto const& h : K.min_left) {
        out << " " << braces(h.members());
      }
      out << "\nminimal right ideals:";
      for (auto const& h : K.min_right) {
        out << " " << braces(h.members());
      }
      out << "\n";
      for (auto const& v : K.verdicts) {
        out << "e = " << v.e << ": Se minimal left " << yes_no(v.left_minimal)
            << ", eSe group " << yes_no(v.local_group) << ", eS minimal right "
            << yes_no(v.right_minimal) << ", K = SeS " << yes_no(v.kernel_is_SeS)
            << "\n";
      }
      return exit_ok;
    }

    int do_decompose(Options const& o, std::ostream& out) {
      auto S = io::read_sg(o.file);
      if (o.base && (*o.base >= S.order() || !is_idempotent(S, *o.base))) {
        throw UsageError("--base-idempotent: " + std::to_string(*o.base)
                         + " is not an idempotent of the input");
      }
      auto d = rees_decompose(S, o.base);
      if (!o.emit_rms.empty()) {
        io::write_rms(o.emit_rms, d.rms);
      }
      auto const& rms = d.rms;
      json        sandwich = json::array();
      for (std::size_t l = 0; l < rms.lambda_size(); ++l) {
        json row = json::array();
        for (std::size_t i = 0; i < rms.i_size(); ++i) {
          row.push_back(rms.sandwich(l, i));
        }
        sandwich.push_back(std::move(row));
      }
      json coords = json::array();
      for (Element s = 0; s < S.order(); ++s) {
        auto c = rms.coordinates(d.psi(s));
        coords.push_back({c.i, c.g, c.lambda});
      }
      auto diag = [](ClosedFormDiagnostic const& c) {
        return json{{"agree", c.agree},
                    {"disagree", c.disagree},
                    {"undefined", c.undefined},
                    {"reproduces_inverse", c.reproduces_inverse()}};
      };
      if (o.structured()) {
        emit(out, {{"e", d.e},
                   {"I", d.i_elements},
                   {"Lambda", d.lambda_elements},
                   {"G", d.group_elements},
                   {"group_table", rows_of(rms.group())},
                   {"sandwich", std::move(sandwich)},
                   {"coordinates", std::move(coords)},
                   {"phi_is_isomorphism", d.phi.is_isomorphism()},
                   {"printed_inverse", diag(d.printed_inverse)},
                   {"ese_inverse", diag(d.ese_inverse)}});
        return exit_ok;
      }
      out << "e = " << d.e << "\n";
      out << "I = Se meet E(S) = " << braces(d.i_elements) << "\n";
      out << "Lambda = eS meet E(S) = " << braces(d.lambda_elements) << "\n";
      out << "G = eSe = " << braces(d.group_elements) << "\n";
      out << "sandwich P(lambda, i):\n";
      for (auto const& row : sandwich) {
        out << " ";
        for (auto const& v : row) {
          out << " " << v.get<Element>();
        }
        out << "\n";
      }
      out << "psi:\n";
      for (Element s = 0; s < S.order(); ++s) {
        auto c = rms.coordinates(d.psi(s));
        out << "  " << s << " -> (" << c.i << ", " << c.g << ", " << c.lambda << ")\n";
      }
      out << "phi isomorphism " << yes_no(d.phi.is_isomorphism()) << "\n";
      auto line = [&](char const* label, ClosedFormDiagnostic const& c) {
        out << label << ": agree " << c.agree << ", disagree " << c.disagree
            << ", undefined " << c.undefined << "\n";
      };
      line("closed form s(ses)^-1, ses, (ese)^-1 s", d.printed_inverse);
      line("closed form s(ese)^-1, ese, (ese)^-1 s", d.ese_inverse);
      return exit_ok;
    }

    int do_quotient(Options const& o, std::ostream& out) {
      auto S = io::read_sg(o.file);
      for (Element x : o.ideal) {
        if (x >= S.order()) {
          throw UsageError("--ideal: " + std::to_string(x) + " is not an element");
        }
      }
      std::vector<Element> I(o.ideal);
      std::sort(I.begin(), I.end());
      I.erase(std::unique(I.begin(), I.end()), I.end());
      if (!is_two_sided_ideal(S, I)) {
        throw UsageError("--ideal: " + braces(I) + " is not a two-sided ideal");
      }
      auto [Q, pi] = rees_quotient(S, I);
      if (o.structured()) {
        emit(out, {{"order", Q.order()},
                   {"zero", 0},
                   {"table", rows_of(Q)},
                   {"projection", pi.map()}});
        return exit_ok;
      }
      out << "# projection";
      for (Element s = 0; s < S.order(); ++s) {
        out << " " << s << "->" << pi(s);
      }
      out << "\n" << io::format_sg(Q.with_name("quotient"));
      return exit_ok;
    }

    int do_subsemigroups(Options const& o, std::ostream& out) {
      auto S = io::read_sg(o.file);
      if (o.cap == 0) {
        throw UsageError("--cap: must be positive");
      }
      if (S.order() > o.cap) {
        throw UsageError("--cap: order " + std::to_string(S.order())
                         + " exceeds the search cap " + std::to_string(o.cap));
      }
      auto subs = enumerate_subsemigroups(S, o.cap);
      bool cs   = is_completely_simple(S);
      json bound = cs ? json(subsemigroup_count_bound(S)) : json(nullptr);
      if (o.structured()) {
        emit(out, {{"count", subs.size()}, {"bound", bound}, {"subsemigroups", handles(subs)}});
        return exit_ok;
      }
      for (auto const& T : subs) {
        out << braces(T.members()) << "\n";
      }
      out << "count " << subs.size();
      if (cs) {
        out << ", bound " << bound.get<std::size_t>();
      }
      out << "\n";
      return exit_ok;
    }

    int do_gen(Options const& o, std::ostream& out) {
      auto S = from_descriptor(o.descriptor);
      io::write_sg(o.output, S);
      if (o.structured()) {
        emit(out, {{"file", o.output},
                   {"order", S.order()},
                   {"fingerprint", to_hex(fingerprint(S))}});
      } else {
        out << "wrote " << o.output << ", order " << S.order() << "\n";
      }
      return exit_ok;
    }

    int do_census(Options const& o, std::ostream& out) {
      if (o.max_order == 0) {
        throw UsageError("--max-order: must be positive");
      }
      if (o.max_order > default_census_limit) {
        throw UsageError("--max-order: " + std::to_string(o.max_order)
                         + " exceeds the census limit "
                         + std::to_string(default_census_limit));
      }
      CorpusSpec spec;
      spec.census_max_order = o.max_order;
      auto instances        = resolve(spec);
      write_corpus(o.output, instances);
      auto               result = census(o.max_order);
      std::vector<FiniteSemigroup> all;
      for (auto const& inst : instances) {
        all.push_back(inst.semigroup);
      }
      if (o.structured()) {
        emit(out, {{"directory", o.output},
                   {"counts", result.counts},
                   {"instances", instances.size()},
                   {"fingerprint", to_hex(fingerprint(all))}});
        return exit_ok;
      }
      for (std::size_t n = 1; n < result.counts.size(); ++n) {
        out << "order " << n << ": " << result.counts[n] << "\n";
      }
      out << "total " << instances.size() << ", fingerprint " << to_hex(fingerprint(all))
          << "\n";
      return exit_ok;
    }

    int do_verify(Options const& o, std::ostream& out) {
      std::vector<CorpusInstance> corpus;
      if (!o.corpus.empty()) {
        corpus = read_corpus(o.corpus);
      } else {
        corpus.push_back({io::read_sg(o.file), "file:" + o.file});
      }
      auto report = verify_suite(corpus);
      if (o.structured()) {
        emit(out, to_json(report));
      } else {
        for (auto const& [check, tally] : report.per_check()) {
          out << check << ": " << tally.first << " pass, " << tally.second << " fail\n";
        }
        for (auto const& inst : report.instances) {
          for (auto const& c : inst.checks) {
            if (c.status == CheckStatus::fail) {
              out << "FAIL " << inst.name << " " << c.check << ": " << c.message
                  << " " << braces(c.elements) << "\n";
            }
          }
        }
        out << report.instances.size() << " instances, " << report.checks_run
            << " checks, " << report.failures << " failures, fingerprint "
            << to_hex(report.corpus_fingerprint) << "\n";
      }
      return report.passed() ? exit_ok : exit_check_failed;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Finite semigroup structure toolkit", "semikit"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* validate = app.add_subcommand("validate", "Check a table for associativity");
    validate->add_option("file", o.file, "Table file (.sg)")->required();

    auto* report = app.add_subcommand("report", "Idempotents, center and predicates");
    report->add_option("file", o.file, "Table file (.sg)")->required();

    auto* greens = app.add_subcommand("greens", "Green's classes and egg-box diagrams");
    greens->add_option("file", o.file, "Table file (.sg)")->required();
    greens->add_option("--dot", o.dot, "Write the egg-box graph in DOT to PATH ('-' for stdout)");

    auto* kern = app.add_subcommand("kernel", "Kernel, minimal ideals and verdicts");
    kern->add_option("file", o.file, "Table file (.sg)")->required();

    auto* decompose = app.add_subcommand("decompose", "Rees matrix decomposition");
    decompose->add_option("file", o.file, "Table file (.sg)")->required();
    decompose->add_option("--base-idempotent", o.base, "Base idempotent");
    decompose->add_option("--emit-rms", o.emit_rms, "Write the Rees matrix data to PATH");

    auto* quotient = app.add_subcommand("quotient", "Rees quotient by an ideal");
    quotient->add_option("file", o.file, "Table file (.sg)")->required();
    quotient->add_option("--ideal", o.ideal, "Comma-separated ideal members")
        ->required()
        ->delimiter(',');

    auto* subs = app.add_subcommand("subsemigroups", "Enumerate subsemigroups");
    subs->add_option("file", o.file, "Table file (.sg)")->required();
    subs->add_option("--cap", o.cap, "Largest order searched");

    auto* gen = app.add_subcommand("gen", "Generate a semigroup from a descriptor");
    gen->add_option("descriptor", o.descriptor, "e.g. cyclic:3, rect_band:2,2")->required();
    gen->add_option("-o,--output", o.output, "Output .sg path")->required();

    auto* cen = app.add_subcommand("census", "Write all semigroups up to isomorphism");
    cen->add_option("--max-order", o.max_order, "Largest order")->required();
    cen->add_option("-o,--output", o.output, "Output directory")->required();

    auto* verify = app.add_subcommand("verify", "Run the theorem checks");
    auto* vfile  = verify->add_option("file", o.file, "Table file (.sg)");
    auto* vdir   = verify->add_option("--corpus", o.corpus, "Corpus directory");
    vfile->excludes(vdir);
    verify->require_option(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    }

    try {
      if (validate->parsed()) return do_validate(o, out);
      if (report->parsed()) return do_report(o, out);
      if (greens->parsed()) return do_greens(o, out);
      if (kern->parsed()) return do_kernel(o, out);
      if (decompose->parsed()) return do_decompose(o, out);
      if (quotient->parsed()) return do_quotient(o, out);
      if (subs->parsed()) return do_subsemigroups(o, out);
      if (gen->parsed()) return do_gen(o, out);
      if (cen->parsed()) return do_census(o, out);
      if (verify->parsed()) return do_verify(o, out);
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    }
    return exit_input_error;
  }

  int main(int argc, char const* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
  }

}  // namespace semikit::cli
