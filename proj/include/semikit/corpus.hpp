#ifndef SEMIKIT_CORPUS_HPP_
#define SEMIKIT_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "simple.hpp"

namespace semikit {

  ////////////////////////////////////////////////////////////////////////
  // Pseudorandom stream
  ////////////////////////////////////////////////////////////////////////

  // std::mt19937_64 is fully specified by the standard; draws below a bound
  // use rejection sampling on the raw 64-bit output rather than
  // std::uniform_int_distribution, whose algorithm is implementation-defined.
  inline constexpr std::string_view prng_algorithm
      = "mt19937_64/rejection-modulo";

  class Prng {
   public:
    explicit Prng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() {
      return _engine();
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

   private:
    std::mt19937_64 _engine;
  };

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  // name in {trivial, cyclic, sym3, left_zero, right_zero, rect_band, t2,
  // product_band}; cyclic, left_zero and right_zero take one size, rect_band
  // takes two.
  FiniteSemigroup gen_standard(std::string_view               name,
                               std::vector<std::size_t> const& params = {});

  // trivial, Z<k>, Z2xZ2, S3.
  FiniteSemigroup group_by_name(std::string_view name);

  ReesMatrixSemigroup gen_random_rees(std::size_t i_size, std::size_t lambda_size,
                                      std::string_view group_name, std::uint64_t seed);

  // Closure of `generators` random maps of {0..degree-1}, multiplied left to
  // right ((xy)(p) = y(x(p))), elements numbered in breadth-first order.
  FiniteSemigroup transformation_closure(std::size_t degree, std::size_t generators,
                                         std::uint64_t seed);

  // Builds a semigroup from a descriptor such as "cyclic:3", "rect_band:2,2",
  // "random_rees:2,2,Z2,1" or "transformation:5,2,7".
  FiniteSemigroup from_descriptor(std::string_view descriptor);

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_census_limit = 4;

  // Lexicographically least row-major table over all relabelings.
  std::vector<Element> canonical_form(FiniteSemigroup const& S);

  struct CensusResult {
    std::vector<FiniteSemigroup> semigroups;
    std::vector<std::size_t>     counts;  // counts[k] = classes of order k
  };

  CensusResult census(std::size_t max_order,
                      std::size_t limit          = default_census_limit,
                      bool        fold_opposites = false);

  // FNV-1a over the orders and entries of every table, in sequence order.
  std::uint64_t fingerprint(std::vector<FiniteSemigroup> const& semigroups);
  std::uint64_t fingerprint(FiniteSemigroup const& S);
  std::string   to_hex(std::uint64_t value);

  ////////////////////////////////////////////////////////////////////////
  // Corpus specification and storage
  ////////////////////////////////////////////////////////////////////////

  struct CorpusLimits {
    std::size_t max_order        = builtin_max_order;
    std::size_t max_census_order = default_census_limit;
    std::size_t subset_cap       = 16;
  };

  struct CorpusSpec {
    std::vector<std::string>   generators;  // descriptors
    std::optional<std::size_t> census_max_order;
    CorpusLimits               limits;
  };

  struct CorpusInstance {
    FiniteSemigroup semigroup;
    std::string     generator;  // descriptor, or "census:<n>"
  };

  std::vector<CorpusInstance> resolve(CorpusSpec const& spec);

  // One .sg file per instance plus manifest.json.
  void write_corpus(std::filesystem::path const&       dir,
                    std::vector<CorpusInstance> const& instances);
  std::vector<CorpusInstance> read_corpus(std::filesystem::path const& dir);

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  enum class CheckStatus { pass, fail };

  struct CheckResult {
    std::string          check;
    CheckStatus          status;
    std::string          message;   // empty on pass
    std::vector<Element> elements;  // offending elements on failure
  };

  struct InstanceReport {
    std::string              name;
    std::string              generator;
    std::uint64_t            fingerprint;
    FiniteSemigroup          semigroup;
    std::vector<CheckResult> checks;

    bool passed() const;
  };

  struct VerificationReport {
    std::vector<InstanceReport> instances;  // sorted by fingerprint, then name
    std::uint64_t               corpus_fingerprint = 0;
    std::size_t                 checks_run         = 0;
    std::size_t                 failures           = 0;

    bool passed() const noexcept {
      return failures == 0;
    }

    // Pass/fail tally per check name.
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>>
    per_check() const;
  };

  struct VerifyOptions {
    std::size_t subset_cap        = 16;  // subsemigroup enumeration
    std::size_t swelling_exhaustive = 4;  // all (A, t) up to this order
    std::size_t ideal_enumeration = 6;   // kernel uniqueness by all ideals
    std::size_t threads           = 0;   // 0: hardware concurrency
  };

  // Names of the checks run on each instance, in order.
  std::vector<std::string> const& verification_checks();

  InstanceReport verify_instance(CorpusInstance const& instance,
                                 VerifyOptions const&  options = {});

  VerificationReport verify_suite(std::vector<CorpusInstance> const& corpus,
                                  VerifyOptions const&               options = {});

  VerificationReport verify_suite(CorpusSpec const& spec,
                                  VerifyOptions const& options = {});

  nlohmann::json to_json(VerificationReport const& report);

}  // namespace semikit

#endif  // SEMIKIT_CORPUS_HPP_
