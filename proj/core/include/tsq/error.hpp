// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_ERROR_HPP
#define TSQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsq {

enum class errc {
  invalid_input,
  not_unimodular,
  mixed_surd,
  needs_refinement,
  search_exhausted,
  rational_direction_rejected,
  indeterminate_direction,
  parse_error,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::not_unimodular: return "not-unimodular";
    case errc::mixed_surd: return "mixed-surd";
    case errc::needs_refinement: return "needs-refinement";
    case errc::search_exhausted: return "search-exhausted";
    case errc::rational_direction_rejected: return "rational-direction-rejected";
    case errc::indeterminate_direction: return "indeterminate-direction";
    case errc::parse_error: return "parse-error";
    case errc::internal_error: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tsq

#endif  // TSQ_ERROR_HPP
