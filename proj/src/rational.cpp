#include "qcb/rational.hpp"

#include <cstdlib>

namespace qcb {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = text.find('/');
  auto parse_ll = [&](const std::string& s) {
    size_t pos = 0;
    long long value;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal \"" + text + "\"");
    }
    if (pos != s.size()) throw std::invalid_argument("bad rational literal \"" + text + "\"");
    return value;
  };
  if (slash == std::string::npos) return Rat(parse_ll(text));
  return Rat(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

}  // namespace qcb
