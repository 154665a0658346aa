#ifndef SEMIKIT_ERROR_HPP_
#define SEMIKIT_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semikit {

  using Element = std::uint32_t;

  enum class ErrorKind {
    out_of_range,
    not_associative,
    bad_shape,
    overflow,
    empty_generators,
    not_an_h_class,
    not_regular_subsemigroup,
    not_idempotent,
    not_an_ideal,
    element_not_in_subset,
    not_completely_simple,
    not_a_group,
    bad_sandwich_entry,
    not_a_subsemigroup,
    search_cap_exceeded,
    unknown_generator,
    census_limit_exceeded,
    invariant_violation,
    parse_error,
    io_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every failure raised by the library. The optional witness holds the
  //! offending element indices (e.g. the triple (a, b, c) for
  //! not_associative).
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message,
          std::vector<Element> witness = {});

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<Element> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind            _kind;
    std::vector<Element> _witness;
  };

  [[noreturn]] void fail(ErrorKind kind, std::string const& message,
                         std::vector<Element> witness = {});

}  // namespace semikit

#endif  // SEMIKIT_ERROR_HPP_
