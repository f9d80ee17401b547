#include "tb/rational.hpp"

namespace tb {

// Akiyama-Tanigawa transform; rows are cheap at the sizes we need (weights
// up to ~20 for the Eisenstein constant terms).
Q bernoulli(unsigned n) {
  std::vector<Q> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Q(1, (long)m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Q((long)j) * (a[j - 1] - a[j]);
  }
  // Akiyama-Tanigawa yields B_1 = +1/2; flip to the B_1 = -1/2 convention.
  if (n == 1) return -a[0];
  return a[0];
}

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Q r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Q& x) {
  return x.get_str();
}

}  // namespace tb
