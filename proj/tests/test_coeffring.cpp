#include <doctest.h>

#include "nullity/coeffring.hpp"
#include "nullity/error.hpp"

#include <random>
#include <set>

using namespace nullity;

namespace {

// Independent oracle: every reducible monic polynomial of degree m is a
// product of monic factors of degrees d and m - d. Returns the low
// coefficient tuples of all of them.
std::set<std::vector<std::uint32_t>> reducible_monics(std::uint32_t p, std::uint32_t m) {
  auto all_monic = [&](std::uint32_t deg) {
    std::vector<std::vector<std::uint32_t>> out;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> f(deg + 1, 0);
      auto x = c;
      for (std::uint32_t i = 0; i < deg; ++i, x /= p) f[i] = static_cast<std::uint32_t>(x % p);
      f[deg] = 1;
      out.push_back(f);
    }
    return out;
  };
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t d = 1; d < m; ++d)
    for (const auto& f : all_monic(d))
      for (const auto& g : all_monic(m - d)) {
        std::vector<std::uint32_t> prod(m + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] = (prod[i + j] + f[i] * g[j]) % p;
        prod.pop_back();
        out.insert(prod);
      }
  return out;
}

// Lexicographically smallest (a_{m-1}, ..., a0) not in the reducible set.
std::vector<std::uint32_t> smallest_irreducible_oracle(std::uint32_t p, std::uint32_t m) {
  const auto reducible = reducible_monics(p, m);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> low(m);
    auto x = c;
    for (std::uint32_t i = 0; i < m; ++i, x /= p) low[i] = static_cast<std::uint32_t>(x % p);
    if (!reducible.contains(low)) return low;
  }
  return {};
}

}  // namespace

TEST_CASE("extension modulus is the lexicographically smallest irreducible") {
  // F(2,2): t^2, t^2+1, t^2+t are reducible, t^2+t+1 is not.
  CHECK(CoeffRing::field(2, 2).modulus_poly() == std::vector<std::uint32_t>{1, 1});
  // F(3,2): t^2 + 1 (-1 is a non-residue mod 3).
  CHECK(CoeffRing::field(3, 2).modulus_poly() == std::vector<std::uint32_t>{1, 0});

  for (auto [p, m] : {std::pair{2U, 2U}, {2U, 3U}, {2U, 4U}, {2U, 5U}, {2U, 6U}, {3U, 2U}, {3U, 3U}, {3U, 4U},
                      {5U, 2U}, {5U, 3U}, {7U, 2U}}) {
    CAPTURE(p);
    CAPTURE(m);
    CHECK(CoeffRing::field(p, m).modulus_poly() == smallest_irreducible_oracle(p, m));
  }
}

TEST_CASE("is_irreducible agrees with the product-set oracle") {
  for (auto [p, m] : {std::pair{2U, 4U}, {3U, 3U}, {5U, 2U}}) {
    const auto reducible = reducible_monics(p, m);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> low(m);
      auto x = c;
      for (std::uint32_t i = 0; i < m; ++i, x /= p) low[i] = static_cast<std::uint32_t>(x % p);
      CHECK(is_irreducible(p, low) == !reducible.contains(low));
    }
  }
}

TEST_CASE("ring construction and parsing") {
  const auto z4 = CoeffRing::parse("Z:4");
  CHECK(z4.size() == 4);
  CHECK(z4.characteristic() == 4);
  CHECK_FALSE(z4.is_field());

  const auto f9 = CoeffRing::parse("F:9");
  CHECK(f9.kind() == RingKind::extension_field);
  CHECK(f9.prime() == 3);
  CHECK(f9.degree() == 2);
  CHECK(f9.spec() == "F:3^2");
  CHECK(CoeffRing::parse("F:3^2").modulus_poly() == f9.modulus_poly());
  CHECK(CoeffRing::parse("F:7").kind() == RingKind::prime_field);
  CHECK(CoeffRing::parse("F:7").spec() == "F:7");

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code_of([] { (void)CoeffRing::parse("F:6"); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)CoeffRing::parse("F:4^2"); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)CoeffRing::parse("F:2^0"); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)CoeffRing::parse("Q:3"); }) == ErrorCode::parse);
  CHECK(code_of([] { (void)CoeffRing::parse("F:x"); }) == ErrorCode::parse);
  CHECK(code_of([] { (void)CoeffRing::parse("Z:1"); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)CoeffRing::parse("F:2^30"); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { (void)CoeffRing::parse("F:2^10", 512); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("arithmetic examples") {
  const auto f7 = CoeffRing::field(7);
  CHECK(f7.inv(3) == 5);

  // t has index 2, t + 1 index 3; t^2 = t + 1 mod t^2 + t + 1.
  const auto f4 = CoeffRing::field(2, 2);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.format(3) == "t+1");

  const auto z4 = CoeffRing::integers_mod(4);
  CHECK_THROWS_AS((void)z4.inv(2), Error);
  try {
    (void)z4.inv(2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_invertible);
    CHECK(std::string(e.what()).find("not invertible") != std::string::npos);
  }
  CHECK(z4.inv(3) == 3);
  CHECK_THROWS_AS((void)f7.inv(0), Error);
  CHECK(CoeffRing::integers_mod(6).inv(5) == 5);
}

TEST_CASE("field laws: inverses and Fermat, full enumeration") {
  // Sizes above kTableThreshold exercise the computed (table-free) path.
  for (const char* spec : {"F:2", "F:3", "F:4", "F:8", "F:9", "F:25", "F:27", "F:32", "F:49", "F:81", "F:125", "F:256",
                           "F:1024", "F:2^11", "F:3^7", "F:65521", "F:2^13"}) {
    CAPTURE(spec);
    const auto k = CoeffRing::parse(spec);
    bool ok = true;
    for (RingElem a = 1; a < k.size() && ok; ++a) {
      ok = k.mul(k.inv(a), a) == 1 && k.pow(a, k.size() - 1) == 1 && k.add(a, k.neg(a)) == 0;
    }
    CHECK(ok);
  }
}

TEST_CASE("ring axioms: all triples for small rings, random triples above") {
  auto check_triple = [](const CoeffRing& k, RingElem a, RingElem b, RingElem c) {
    return k.add(k.add(a, b), c) == k.add(a, k.add(b, c)) && k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)) &&
           k.add(a, b) == k.add(b, a) && k.mul(a, b) == k.mul(b, a) &&
           k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)) && k.sub(k.add(a, b), b) == a;
  };
  for (const char* spec : {"F:2", "F:4", "F:8", "F:9", "F:16", "F:25", "F:27", "F:32", "Z:4", "Z:6", "Z:12", "Z:30"}) {
    CAPTURE(spec);
    const auto k = CoeffRing::parse(spec);
    bool ok = true;
    for (RingElem a = 0; a < k.size(); ++a)
      for (RingElem b = 0; b < k.size(); ++b)
        for (RingElem c = 0; c < k.size(); ++c) ok = ok && check_triple(k, a, b, c);
    CHECK(ok);
  }
  std::mt19937_64 rng(20240917);
  for (const char* spec : {"F:2^11", "F:3^7", "F:5^5", "F:65521", "Z:1000", "F:1021"}) {
    CAPTURE(spec);
    const auto k = CoeffRing::parse(spec);
    std::uniform_int_distribution<RingElem> pick(0, k.size() - 1);
    bool ok = true;
    for (int i = 0; i < 20000; ++i) ok = ok && check_triple(k, pick(rng), pick(rng), pick(rng));
    CHECK(ok);
  }
}

TEST_CASE("sum of two squares equal to -1") {
  const auto w3 = solve_sum_of_squares_minus_one(CoeffRing::field(3));
  REQUIRE(w3);
  CHECK(*w3 == std::pair<RingElem, RingElem>{1, 1});

  const auto w5 = solve_sum_of_squares_minus_one(CoeffRing::field(5));
  REQUIRE(w5);
  CHECK(*w5 == std::pair<RingElem, RingElem>{0, 2});

  // Squares mod 7 are {0, 1, 2, 4}; the first x with -1 - x^2 a square is 2.
  const auto f7 = CoeffRing::field(7);
  const auto w7 = solve_sum_of_squares_minus_one(f7);
  REQUIRE(w7);
  CHECK(*w7 == std::pair<RingElem, RingElem>{2, 3});
  CHECK(f7.add(f7.mul(w7->first, w7->first), f7.mul(w7->second, w7->second)) == 6);

  // Every finite field of odd characteristic has a solution; check small
  // ones against a brute-force nested search.
  for (std::uint64_t q = 3; q < 400; ++q) {
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2) continue;
    const auto k = CoeffRing::field(pm->first, pm->second);
    const auto w = solve_sum_of_squares_minus_one(k);
    REQUIRE(w);
    std::optional<std::pair<RingElem, RingElem>> brute;
    for (RingElem x = 0; x < k.size() && !brute; ++x)
      for (RingElem y = 0; y < k.size() && !brute; ++y)
        if (k.add(k.mul(x, x), k.mul(y, y)) == k.neg(1)) brute = std::pair{x, y};
    CHECK(w == brute);
  }
  CHECK_THROWS_AS((void)solve_sum_of_squares_minus_one(CoeffRing::integers_mod(4)), Error);
}

TEST_CASE("prime_power") {
  CHECK(prime_power(1) == std::nullopt);
  CHECK(prime_power(6) == std::nullopt);
  CHECK(prime_power(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
  CHECK(prime_power(65521) == std::pair<std::uint32_t, std::uint32_t>{65521, 1});
  CHECK(prime_power(3 * 3 * 3 * 3 * 3) == std::pair<std::uint32_t, std::uint32_t>{3, 5});
}
