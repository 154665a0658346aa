#include "semikit/error.hpp"

namespace semikit {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::out_of_range:
        return "OutOfRange";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::bad_shape:
        return "BadShape";
      case ErrorKind::overflow:
        return "Overflow";
      case ErrorKind::empty_generators:
        return "EmptyGenerators";
      case ErrorKind::not_an_h_class:
        return "NotAnHClass";
      case ErrorKind::not_regular_subsemigroup:
        return "NotRegularSubsemigroup";
      case ErrorKind::not_idempotent:
        return "NotIdempotent";
      case ErrorKind::not_an_ideal:
        return "NotAnIdeal";
      case ErrorKind::element_not_in_subset:
        return "ElementNotInSubset";
      case ErrorKind::not_completely_simple:
        return "NotCompletelySimple";
      case ErrorKind::not_a_group:
        return "NotAGroup";
      case ErrorKind::bad_sandwich_entry:
        return "BadSandwichEntry";
      case ErrorKind::not_a_subsemigroup:
        return "NotASubsemigroup";
      case ErrorKind::search_cap_exceeded:
        return "SearchCapExceeded";
      case ErrorKind::unknown_generator:
        return "UnknownGenerator";
      case ErrorKind::census_limit_exceeded:
        return "CensusLimitExceeded";
      case ErrorKind::invariant_violation:
        return "InvariantViolation";
      case ErrorKind::parse_error:
        return "ParseError";
      case ErrorKind::io_error:
        return "IOError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message,
               std::vector<Element> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind),
        _witness(std::move(witness)) {}

  void fail(ErrorKind kind, std::string const& message,
            std::vector<Element> witness) {
    throw Error(kind, message, std::move(witness));
  }

}  // namespace semikit
