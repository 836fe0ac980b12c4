#include "nullity/coeffring.hpp"

#include "nullity/error.hpp"

#include <charconv>
#include <numeric>

namespace nullity {

namespace {

std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint32_t base, std::uint32_t count) {
  std::vector<std::uint32_t> d(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
  return d;
}

std::uint32_t index_of(const std::vector<std::uint32_t>& digits, std::uint32_t base) {
  std::uint64_t index = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) index = index * base + *it;
  return static_cast<std::uint32_t>(index);
}

// Remainder of `num` (coefficients low to high, arbitrary degree) modulo the
// monic polynomial with low coefficients `div_low` over F_p.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& div_low,
                                    std::uint32_t p) {
  const std::size_t d = div_low.size();
  while (num.size() > d) {
    const std::uint64_t lead = num.back();
    num.pop_back();
    if (lead == 0) continue;
    // x^{k} = x^{k-d} * x^d and x^d = -(div_low)
    const std::size_t shift = num.size() - d;
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t sub = lead * div_low[i] % p;
      num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
    }
  }
  num.resize(d, 0);
  return num;
}

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || value > 0xffffffffULL)
    throw Error(ErrorCode::parse, "bad integer '" + std::string(text) + "' in ring spec '" + std::string(whole) + "'");
  return static_cast<std::uint32_t>(value);
}

void check_cap(std::uint64_t size, std::uint64_t cap) {
  if (size > cap)
    throw Error(ErrorCode::cap_exceeded,
                "ring of size " + std::to_string(size) + " exceeds the size cap " + std::to_string(cap));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& low) {
  const std::size_t m = low.size();
  if (m <= 1) return m == 1;
  std::vector<std::uint32_t> f(low);
  f.push_back(1);
  // Any factorization has a monic factor of degree <= m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      const auto divisor = digits_of(code, p, static_cast<std::uint32_t>(d));
      const auto r = poly_rem(f, divisor, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

CoeffRing CoeffRing::field(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::invalid_argument, "extension degree must be >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    check_cap(size, size_cap);
  }
  CoeffRing k;
  k.kind_ = m == 1 ? RingKind::prime_field : RingKind::extension_field;
  k.p_ = p;
  k.m_ = m;
  k.size_ = static_cast<std::uint32_t>(size);
  if (m > 1) {
    // Ascending code order equals lexicographic order on (a_{m-1}, ..., a0).
    bool found = false;
    for (std::uint64_t code = 0; code < size && !found; ++code) {
      auto low = digits_of(code, p, m);
      if (is_irreducible(p, low)) {
        k.modulus_poly_ = std::move(low);
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorCode::internal, "no irreducible polynomial of degree " + std::to_string(m) + " over F_" +
                                           std::to_string(p) + " (defect)");
  }
  k.build_tables();
  return k;
}

CoeffRing CoeffRing::integers_mod(std::uint32_t n, std::uint64_t size_cap) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "modulus must be >= 2");
  check_cap(n, size_cap);
  CoeffRing k;
  k.kind_ = RingKind::mod_n;
  k.n_ = n;
  k.size_ = n;
  k.build_tables();
  return k;
}

CoeffRing CoeffRing::make(const RingSpec& spec, std::uint64_t size_cap) {
  if (spec.kind == RingKind::mod_n) return integers_mod(spec.n, size_cap);
  return field(spec.p, spec.m, size_cap);
}

CoeffRing CoeffRing::parse(std::string_view spec, std::uint64_t size_cap) {
  if (spec.size() < 3 || spec[1] != ':' || (spec[0] != 'F' && spec[0] != 'Z'))
    throw Error(ErrorCode::parse, "ring spec '" + std::string(spec) + "' is not F:p^m, F:q or Z:n");
  const auto body = spec.substr(2);
  if (spec[0] == 'Z') return integers_mod(parse_u32(body, spec), size_cap);
  if (const auto caret = body.find('^'); caret != std::string_view::npos) {
    const auto p = parse_u32(body.substr(0, caret), spec);
    const auto m = parse_u32(body.substr(caret + 1), spec);
    return field(p, m, size_cap);
  }
  const auto q = parse_u32(body, spec);
  const auto pm = prime_power(q);
  if (!pm) throw Error(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
  return field(pm->first, pm->second, size_cap);
}

std::string CoeffRing::spec() const {
  switch (kind_) {
    case RingKind::mod_n: return "Z:" + std::to_string(n_);
    case RingKind::prime_field: return "F:" + std::to_string(p_);
    case RingKind::extension_field: return "F:" + std::to_string(p_) + "^" + std::to_string(m_);
  }
  return {};
}

std::string CoeffRing::format(RingElem a) const {
  if (kind_ != RingKind::extension_field) return std::to_string(a);
  const auto d = digits_of(a, p_, m_);
  std::string out;
  for (std::uint32_t i = m_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (d[i] != 1 || i == 0) out += std::to_string(d[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void CoeffRing::build_tables() {
  if (size_ > kTableThreshold) return;
  const std::size_t s = size_;
  std::vector<RingElem> add(s * s), mul(s * s), neg(s), inv(s, 0);
  for (RingElem a = 0; a < size_; ++a) {
    neg[a] = neg_slow(a);
    for (RingElem b = 0; b < size_; ++b) {
      add[a * s + b] = add_slow(a, b);
      mul[a * s + b] = mul_slow(a, b);
      if (mul[a * s + b] == 1) inv[a] = b;
    }
  }
  add_table_ = std::move(add);
  mul_table_ = std::move(mul);
  neg_table_ = std::move(neg);
  inv_table_ = std::move(inv);
}

RingElem CoeffRing::add_slow(RingElem a, RingElem b) const {
  if (kind_ == RingKind::mod_n) return static_cast<RingElem>((std::uint64_t{a} + b) % n_);
  if (kind_ == RingKind::prime_field) return static_cast<RingElem>((std::uint64_t{a} + b) % p_);
  auto da = digits_of(a, p_, m_);
  const auto db = digits_of(b, p_, m_);
  for (std::uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return index_of(da, p_);
}

RingElem CoeffRing::neg_slow(RingElem a) const {
  if (kind_ == RingKind::mod_n) return a == 0 ? 0 : n_ - a;
  if (kind_ == RingKind::prime_field) return a == 0 ? 0 : p_ - a;
  auto da = digits_of(a, p_, m_);
  for (auto& c : da) c = c == 0 ? 0 : p_ - c;
  return index_of(da, p_);
}

RingElem CoeffRing::mul_slow(RingElem a, RingElem b) const {
  if (kind_ == RingKind::mod_n) return static_cast<RingElem>(std::uint64_t{a} * b % n_);
  if (kind_ == RingKind::prime_field) return static_cast<RingElem>(std::uint64_t{a} * b % p_);
  const auto da = digits_of(a, p_, m_);
  const auto db = digits_of(b, p_, m_);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  }
  return index_of(poly_rem(std::move(prod), modulus_poly_, p_), p_);
}

RingElem CoeffRing::pow(RingElem a, std::uint64_t e) const {
  RingElem result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e != 0) a = mul(a, a);
  }
  return result;
}

RingElem CoeffRing::inv_slow(RingElem a) const {
  if (kind_ == RingKind::mod_n) {
    // Extended Euclid on (a, n).
    std::int64_t r0 = n_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const auto q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    if (r0 != 1) return 0;
    return static_cast<RingElem>((t0 % n_ + n_) % n_);
  }
  if (a == 0) return 0;
  return pow(a, std::uint64_t{size_} - 2);
}

RingElem CoeffRing::inv(RingElem a) const {
  const RingElem r = inv_table_.empty() ? inv_slow(a) : inv_table_[a];
  // size_ == 1 never happens, so a valid inverse is never 0.
  if (r == 0) throw Error(ErrorCode::not_invertible, format(a) + " is not invertible in " + spec());
  return r;
}

bool CoeffRing::is_unit(RingElem a) const {
  return (inv_table_.empty() ? inv_slow(a) : inv_table_[a]) != 0;
}

std::optional<std::pair<RingElem, RingElem>> solve_sum_of_squares_minus_one(const CoeffRing& k) {
  if (!k.is_field()) throw Error(ErrorCode::domain, "sum-of-squares search requires a field");
  // first_root[v] is the smallest y with y^2 = v, so scanning x in order and
  // looking up -1 - x^2 finds the same witness as the nested x/y search.
  constexpr RingElem kNone = 0xffffffffU;
  std::vector<RingElem> first_root(k.size(), kNone);
  for (RingElem y = k.size(); y-- > 0;) first_root[k.mul(y, y)] = y;
  const RingElem minus_one = k.neg(1);
  for (RingElem x = 0; x < k.size(); ++x) {
    const RingElem y = first_root[k.sub(minus_one, k.mul(x, x))];
    if (y != kNone) return std::pair{x, y};
  }
  return std::nullopt;
}

}  // namespace nullity
