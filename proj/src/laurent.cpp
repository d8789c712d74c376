#include "xxzlbf/laurent.hpp"

namespace xxz {

Laurent<Cyclotomic> specialize_even_t_to_omega(const Laurent<Rational>& p) {
  const int nv = p.nvars();
  if (nv < 1) throw ArgumentError("specialize_even_t_to_omega: no t variable");
  Laurent<Cyclotomic> out = Laurent<Cyclotomic>::zero(nv - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] % 2 != 0)
      throw DegeneracyError("specialize_even_t_to_omega: odd power of t encountered");
    Laurent<Cyclotomic>::Exponents rest(e.begin() + 1, e.end());
    const Cyclotomic coeff = Cyclotomic(c) * Cyclotomic::omega_pow(e[0] / 2);
    out += Laurent<Cyclotomic>::monomial(nv - 1, std::move(rest), coeff);
  }
  return out;
}

}  // namespace xxz
