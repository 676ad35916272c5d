#include "real.hpp"

#include <ios>

namespace knotloc::detail {

std::string fixed_string(const Real& x, unsigned digits) {
  std::string s = x.str(static_cast<std::streamsize>(digits), std::ios_base::fixed);
  if (!s.empty() && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace knotloc::detail
