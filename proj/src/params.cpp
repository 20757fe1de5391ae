#include "lissa/params.hpp"

#include <numeric>
#include <string>

#include "lissa/error.hpp"

namespace lissa {

LissajousParams validate_params(int n, int p) {
  if (n <= 0 || p <= 0) {
    fail(Errc::non_positive,
         "n and p must be positive (got n=" + std::to_string(n) +
             ", p=" + std::to_string(p) + ")");
  }
  if (p % 2 == 0) {
    fail(Errc::non_odd_p, "p must be odd (got p=" + std::to_string(p) + ")");
  }
  if (std::gcd(n, n + p) != 1) {
    fail(Errc::not_coprime,
         "n and n+p must be coprime (gcd(" + std::to_string(n) + ", " +
             std::to_string(n + p) + ") = " + std::to_string(std::gcd(n, n + p)) + ")");
  }
  return LissajousParams{n, p};
}

}  // namespace lissa
