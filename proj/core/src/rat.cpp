#include "pqs/rat.hpp"

#include <cctype>

#include "pqs/errors.hpp"

namespace pqs {

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {
bool valid_int(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  if (!valid_int(num)) fail(ErrorKind::Input, "bad rational '" + std::string(s) + "'");
  std::string ns(num);
  if (ns[0] == '+') ns.erase(0, 1);
  Int n(ns);
  Int d(1);
  if (slash != std::string_view::npos) {
    auto den = s.substr(slash + 1);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+')
      fail(ErrorKind::Input, "bad rational '" + std::string(s) + "'");
    d = Int(std::string(den));
    if (d == 0) fail(ErrorKind::Input, "zero denominator in '" + std::string(s) + "'");
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& x, unsigned e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  return r;
}

}  // namespace pqs
