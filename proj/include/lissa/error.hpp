#pragma once

#include <stdexcept>
#include <string>

namespace lissa {

enum class Errc {
  non_positive,
  non_odd_p,
  not_coprime,
  ambiguous_match,
  domain_error,
  length_mismatch,
  index_not_in_gamma_l,
  inconsistent_samples,
  unknown_id,
};

/// Library error carrying a machine-readable condition code.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lissa
