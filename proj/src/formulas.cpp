#include "nullity/formulas.hpp"

#include "nullity/error.hpp"

#include <numeric>

namespace nullity {

namespace {

std::pair<std::uint64_t, std::uint64_t> require_prime_power(std::uint64_t q) {
  const auto pm = prime_power(q);
  if (!pm) throw Error(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
  return *pm;
}

BigRational poly_over_power(std::initializer_list<std::int64_t> coeffs_high_to_low, std::uint64_t q,
                            std::uint64_t denom_exp) {
  BigInt value = 0;
  for (auto c : coeffs_high_to_low) value = value * q + c;
  return BigRational(value, big_pow(BigInt(q), denom_exp));
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t l) {
  if (l == 0) throw Error(ErrorCode::invalid_argument, "phi(0) is undefined");
  std::uint64_t result = l;
  for (std::uint64_t p = 2; p * p <= l; ++p) {
    if (l % p != 0) continue;
    while (l % p == 0) l /= p;
    result -= result / p;
  }
  if (l > 1) result -= result / l;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t l) {
  if (l == 0 || std::gcd(q, l) != 1)
    throw Error(ErrorCode::domain, "multiplicative order of " + std::to_string(q) + " mod " + std::to_string(l) +
                                       " is undefined (gcd != 1)");
  if (l == 1) return 1;
  const unsigned __int128 base = q % l;
  unsigned __int128 power = base;
  std::uint64_t d = 1;
  while (power != 1) {
    power = power * base % l;
    ++d;
  }
  return d;
}

std::uint64_t PWDecomposition::dimension() const {
  std::uint64_t dim = 1;
  for (const auto& c : components) dim += c.d * c.e;
  return dim;
}

PWDecomposition perlis_walker(std::uint64_t q, std::uint64_t n) {
  if (n == 0 || std::gcd(n, q) != 1)
    throw Error(ErrorCode::domain, "gcd(" + std::to_string(n) + ", " + std::to_string(q) +
                                       ") != 1: modular case, use oracle or chain formula");
  PWDecomposition pw{q, n, {}};
  for (auto l : divisors(n)) {
    if (l == 1) continue;
    const auto d = mult_order(q, l);
    pw.components.push_back({l, d, euler_phi(l) / d});
  }
  return pw;
}

const char* to_string(Variant v) { return v == Variant::printed ? "printed" : "derived"; }

const char* to_string(Char2Target t) {
  switch (t) {
    case Char2Target::s3_left: return "s3_left";
    case Char2Target::s3_twosided: return "s3_twosided";
    case Char2Target::q8_twosided: return "q8_twosided";
  }
  return "?";
}

BigRational p_field(const BigInt& q) {
  if (q < 2) throw Error(ErrorCode::invalid_argument, "field size must be >= 2");
  return BigRational(2 * q - 1, q * q);
}

FormulaResult p_cyclic_semisimple(std::uint64_t q, std::uint64_t n) {
  require_prime_power(q);
  const auto pw = perlis_walker(q, n);
  BigRational value = p_field(q);
  for (const auto& c : pw.components) {
    const BigInt qd = big_pow(BigInt(q), c.d);
    value *= rational_pow(BigRational(2 * qd - 1, qd * qd), c.e);
  }
  return {"cyclic_semisimple", value, Variant::printed,
          "semisimple cyclic group algebra: (2q-1)/q^2 times ((2q^d-1)/q^2d)^e over divisors l > 1 of n"};
}

FormulaResult p_cyclic_chain(std::uint64_t q, std::uint64_t n) {
  const auto [p, m] = require_prime_power(q);
  (void)m;
  const auto np = prime_power(n);
  if (!np || np->first != p)
    throw Error(ErrorCode::domain, std::to_string(n) + " is not a power of the characteristic " + std::to_string(p));
  const BigInt Q = q;
  return {"cyclic_chain", BigRational(Q + BigInt(n) * (Q - 1), big_pow(Q, n + 1)), Variant::derived,
          "chain ring F_Q[y]/(y^N): Q^{N-1-j}(Q-1) elements of annihilator size Q^j"};
}

C5Case c5_case(std::uint64_t q) {
  const auto [p, m] = require_prime_power(q);
  (void)m;
  if (p == 5) return C5Case::modular;
  switch (q % 5) {
    case 1: return C5Case::split;
    case 4: return C5Case::order2;
    default: return C5Case::order4;
  }
}

FormulaResult p_c5(std::uint64_t q, Variant variant) {
  const auto which = c5_case(q);
  const std::string case_tag = "case" + std::to_string(static_cast<int>(which));
  if (variant == Variant::derived) {
    auto r = which == C5Case::modular ? p_cyclic_chain(q, 5) : p_cyclic_semisimple(q, 5);
    r.id = "c5.derived." + case_tag;
    r.variant = Variant::derived;
    r.provenance = "C5 " + case_tag + " from the group algebra decomposition: " + r.provenance;
    return r;
  }
  BigRational value;
  std::string text;
  switch (which) {
    case C5Case::modular:
      value = poly_over_power({1, -1, 1, 1, 0, -1, 1, -1}, q, 9);
      text = "(q^7-q^6+q^5+q^4-q^2+q-1)/q^9";
      break;
    case C5Case::order4:
      value = poly_over_power({4, -2, 0, 0, -2, 1}, q, 10);
      text = "(4q^5-2q^4-2q+1)/q^10";
      break;
    case C5Case::order2:
      value = poly_over_power({1, 0, 0, -2, 5, -2, -1}, q, 8);
      text = "(q^6-2q^3+5q^2-2q-1)/q^8";
      break;
    case C5Case::split:
      value = poly_over_power({2, 5, -21, 35, -29, 10, -1}, q, 10);
      text = "(2q^6+5q^5-21q^4+35q^3-29q^2+10q-1)/q^10";
      break;
  }
  return {"c5.printed." + case_tag, value, Variant::printed, "C5 " + case_tag + " published polynomial " + text};
}

FormulaResult p_matrix2(std::uint64_t q, Side side) {
  require_prime_power(q);
  if (side == Side::twosided)
    return {"matrix2.twosided", poly_over_power({3, 0, -2}, q, 6), Variant::printed, "M2(F_q) two-sided: (3q^2-2)/q^6"};
  return {"matrix2.left", poly_over_power({1, 3, -2, -2, 1}, q, 7), Variant::printed,
          "M2(F_q) one-sided: (q^4+3q^3-2q^2-2q+1)/q^7"};
}

FormulaResult p_q8_odd(std::uint64_t q, Side side) {
  const auto [p, m] = require_prime_power(q);
  if (p == 2) throw Error(ErrorCode::domain, "Q8 decomposition formula needs odd characteristic; use p_char2_family");
  // The decomposition F Q8 = 4F (+) M2(F) needs x^2 + y^2 = -1 solvable.
  if (!solve_sum_of_squares_minus_one(CoeffRing::field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m),
                                                        ~std::uint64_t{0})))
    throw Error(ErrorCode::internal, "x^2 + y^2 = -1 unsolvable in F_" + std::to_string(q) + " (defect)");
  const auto mat = p_matrix2(q, side);
  return {side == Side::twosided ? "q8_odd.twosided" : "q8_odd.left", rational_pow(p_field(q), 4) * mat.value,
          Variant::printed, "F_q Q8 = 4 F_q (+) M2(F_q), q odd: p_field(q)^4 * " + mat.id};
}

FormulaResult p_s3_coprime6(std::uint64_t q, Side side) {
  require_prime_power(q);
  if (std::gcd(q, std::uint64_t{6}) != 1)
    throw Error(ErrorCode::domain, "gcd(" + std::to_string(q) + ", 6) != 1: modular case");
  const auto mat = p_matrix2(q, side);
  return {side == Side::twosided ? "s3_coprime6.twosided" : "s3_coprime6.left", rational_pow(p_field(q), 2) * mat.value,
          Variant::printed, "F_q S3 = 2 F_q (+) M2(F_q), gcd(q,6)=1: p_field(q)^2 * " + mat.id};
}

FormulaResult p_char2_family(std::uint64_t q, Char2Target target) {
  const auto [p, m] = require_prime_power(q);
  (void)m;
  if (p != 2) throw Error(ErrorCode::domain, "characteristic-2 formulas need q a power of 2");
  const std::string id = std::string("char2.") + to_string(target);
  switch (target) {
    case Char2Target::s3_left:
      return {id, poly_over_power({3, 7, -12, -2, 7, -2}, q, 10), Variant::printed,
              "F_q S3, char 2, one-sided: (3q^5+7q^4-12q^3-2q^2+7q-2)/q^10"};
    case Char2Target::s3_twosided:
      return {id, poly_over_power({9, -6, -6, 4}, q, 9), Variant::printed,
              "F_q S3, char 2, two-sided: (9q^3-6q^2-6q+4)/q^9"};
    case Char2Target::q8_twosided:
      return {id, poly_over_power({3, 3, -5}, q, 9), Variant::printed, "F_q Q8, char 2, two-sided: (3q^2+3q-5)/q^9"};
  }
  throw Error(ErrorCode::internal, "unknown characteristic-2 target");
}

BigRational product_rule(std::span<const BigRational> ps) {
  BigRational result = 1;
  for (const auto& p : ps) result *= p;
  return result;
}

BigInt unit_order(std::uint64_t q, std::uint64_t n) {
  const auto [p, m] = require_prime_power(q);
  (void)m;
  const BigInt Q = q;
  if (std::gcd(n, q) == 1) {
    BigInt order = Q - 1;
    for (const auto& c : perlis_walker(q, n).components) order *= big_pow(big_pow(Q, c.d) - 1, c.e);
    return order;
  }
  const auto np = prime_power(n);
  if (!np || np->first != p)
    throw Error(ErrorCode::domain, "unit order of F_" + std::to_string(q) + " C_" + std::to_string(n) +
                                       " (mixed case) has no closed form here; use the census");
  return (Q - 1) * big_pow(Q, n - 1);
}

std::vector<FormulaResult> formulas_for(const CoeffRing& k, const CayleyGroup& g, Side side) {
  if (!k.is_field())
    throw Error(ErrorCode::domain, "no closed form for " + k.spec() + " coefficients; use the oracle");
  const std::uint64_t q = k.size();
  const std::uint64_t p = k.prime();
  std::vector<FormulaResult> out;
  if (const auto n = g.cyclic_order()) {
    if (*n == 5) {
      out.push_back(p_c5(q, Variant::printed));
      out.push_back(p_c5(q, Variant::derived));
    } else if (std::gcd(std::uint64_t{*n}, q) == 1) {
      out.push_back(p_cyclic_semisimple(q, *n));
    } else if (const auto np = prime_power(*n); np && np->first == p) {
      out.push_back(p_cyclic_chain(q, *n));
    }
  } else if (g.label() == "S3") {
    const Side s = side == Side::twosided ? Side::twosided : Side::left;
    if (std::gcd(q, std::uint64_t{6}) == 1)
      out.push_back(p_s3_coprime6(q, s));
    else if (p == 2)
      out.push_back(p_char2_family(q, s == Side::twosided ? Char2Target::s3_twosided : Char2Target::s3_left));
  } else if (g.label() == "Q8") {
    if (p != 2)
      out.push_back(p_q8_odd(q, side == Side::twosided ? Side::twosided : Side::left));
    else if (side == Side::twosided)
      out.push_back(p_char2_family(q, Char2Target::q8_twosided));
  }
  if (out.empty())
    throw Error(ErrorCode::domain, "no closed form for " + k.spec() + "[" + g.label() + "] (" + to_string(side) +
                                       "); use the oracle");
  return out;
}

std::vector<CatalogInstance> default_catalog(std::uint64_t max_size) {
  std::vector<CatalogInstance> out;
  for (std::uint64_t q = 2; q * q <= max_size; ++q) {
    if (!prime_power(q)) continue;
    std::uint64_t size = q * q;
    for (std::uint64_t n = 2; size <= max_size; ++n, size *= q)
      out.push_back({"F:" + std::to_string(q), "C:" + std::to_string(n)});
  }
  out.push_back({"Z:4", "C:2"});
  out.push_back({"Z:6", "C:2"});
  out.push_back({"F:2", "S3"});
  out.push_back({"F:2", "Q8"});
  return out;
}

Classification classify_threshold(std::span<const CatalogInstance> catalog, const BigRational& threshold,
                                  const Limits& limits, Side convention) {
  Classification result;
  result.threshold = threshold;
  result.convention = convention;
  for (const auto& inst : catalog) {
    try {
      const GroupRing ring(CoeffRing::parse(inst.coeff), CayleyGroup::parse(inst.group));
      ClassifiedInstance c{inst, nullity_probability(ring, convention, limits)};
      if (c.probability >= threshold) result.selected.push_back(c);
      result.evaluated.push_back(std::move(c));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
      result.skipped.push_back({inst, e.what()});
    }
  }
  return result;
}

}  // namespace nullity
