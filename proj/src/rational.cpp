#include "mgn/rational.hpp"

namespace mgn {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\n\r");
  auto last = s.find_last_not_of(" \t\n\r");
  if (first == std::string::npos) throw ParseError("empty rational");
  s = s.substr(first, last - first + 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = 0;
    if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace mgn
