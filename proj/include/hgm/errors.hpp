#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

enum class errc {
  parse_error,
  invalid_gamma,
  not_over_q,
  no_unit_denominator,
  length_mismatch,
  empty_reduction,
  not_datum_element,
  improper_subset,
  insufficient_census,
  unsupported_format,
  bad_denominator,
  bad_range,
  enumeration_range,
  method_disagreement,
  io_error,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::invalid_gamma: return "InvalidGamma";
    case errc::not_over_q: return "NotOverQ";
    case errc::no_unit_denominator: return "NoUnitDenominator";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::empty_reduction: return "EmptyReduction";
    case errc::not_datum_element: return "NotDatumElement";
    case errc::improper_subset: return "ImproperSubset";
    case errc::insufficient_census: return "InsufficientCensus";
    case errc::unsupported_format: return "UnsupportedFormat";
    case errc::bad_denominator: return "BadDenominator";
    case errc::bad_range: return "BadRange";
    case errc::enumeration_range: return "EnumerationRange";
    case errc::method_disagreement: return "MethodDisagreement";
    case errc::io_error: return "IoError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

/// Library error with a machine-readable code; the CLI maps codes to exit
/// statuses (parse errors to 2, validation errors to 3).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hgm
