#include "telescoper/algebra/monomial.hpp"

#include <algorithm>

namespace tel {

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = m.exp(static_cast<int>(i));
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

namespace {

void enumerate(int nvars, int var, int left, std::vector<int>& e, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    e[var] = left;
    out.push_back(Monomial::from_exponents(e));
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[var] = k;
    enumerate(nvars, var + 1, left - k, e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) return out;
  if (d > Monomial::kMaxExp) throw ResourceError("degree too large for packed monomials");
  std::vector<int> e(nvars, 0);
  enumerate(nvars, 0, d, e, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace tel
