#pragma once

#include "nullity/coeffring.hpp"
#include "nullity/groupring.hpp"
#include "nullity/groups.hpp"
#include "nullity/oracle.hpp"
#include "nullity/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nullity {

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

std::uint64_t euler_phi(std::uint64_t l);
/// Ascending divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Least d >= 1 with q^d = 1 (mod l). Throws domain if gcd(q, l) != 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t l);

/// F_q C_n = F_q (+) sum over l | n, l > 1 of F_{q^d_l}^{e_l}, gcd(n, q) = 1.
struct PWComponent {
  std::uint64_t l = 0;
  std::uint64_t d = 0;  // multiplicative order of q mod l
  std::uint64_t e = 0;  // phi(l) / d
};

struct PWDecomposition {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::vector<PWComponent> components;  // ascending l; the leading F_q is implicit

  /// 1 + sum d*e; equals n.
  [[nodiscard]] std::uint64_t dimension() const;
};

PWDecomposition perlis_walker(std::uint64_t q, std::uint64_t n);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// printed: the polynomial exactly as published; derived: a value we
/// obtained independently, validated against the census.
enum class Variant { printed, derived };
const char* to_string(Variant v);

struct FormulaResult {
  std::string id;  // stable key, also used by the errata manifest
  BigRational value;
  Variant variant = Variant::printed;
  std::string provenance;
};

/// (2q - 1) / q^2: the zero-product probability of a field with q elements.
BigRational p_field(const BigInt& q);

FormulaResult p_cyclic_semisimple(std::uint64_t q, std::uint64_t n);

/// K = F_Q, G = C_N with N a power of char K: (Q + N(Q - 1)) / Q^{N+1}.
FormulaResult p_cyclic_chain(std::uint64_t q, std::uint64_t n);

/// Which formula branch applies to F_q C_5.
enum class C5Case { modular = 1, order4 = 2, order2 = 3, split = 4 };
C5Case c5_case(std::uint64_t q);
FormulaResult p_c5(std::uint64_t q, Variant variant);

/// M_2(F_q): left = Pr[ab = 0], twosided = Pr[ab = 0 and ba = 0].
/// Side::right is accepted and equals left.
FormulaResult p_matrix2(std::uint64_t q, Side side);

/// F_q Q_8 with q odd: p_field(q)^4 * p_matrix2(q, side).
FormulaResult p_q8_odd(std::uint64_t q, Side side);

/// F_q S_3 with gcd(q, 6) = 1: p_field(q)^2 * p_matrix2(q, side).
FormulaResult p_s3_coprime6(std::uint64_t q, Side side);

enum class Char2Target { s3_left, s3_twosided, q8_twosided };
const char* to_string(Char2Target t);
/// The three published characteristic-2 polynomials.
FormulaResult p_char2_family(std::uint64_t q, Char2Target target);

/// P(R1 (+) ... (+) Rn) = P(R1) ... P(Rn).
BigRational product_rule(std::span<const BigRational> ps);

/// |U(F_q C_n)| for gcd(n, q) = 1, or for n a power of char F_q.
BigInt unit_order(std::uint64_t q, std::uint64_t n);

/// Every closed form that applies to K[G] for the given side, in a fixed
/// order. Throws domain when none does.
std::vector<FormulaResult> formulas_for(const CoeffRing& k, const CayleyGroup& g, Side side);

// ---------------------------------------------------------------------------
// Threshold classification over a catalog of instances
// ---------------------------------------------------------------------------

struct CatalogInstance {
  std::string coeff;
  std::string group;
  [[nodiscard]] std::string name() const { return coeff + " " + group; }
};

struct ClassifiedInstance {
  CatalogInstance instance;
  BigRational probability;
};

struct SkippedInstance {
  CatalogInstance instance;
  std::string reason;
};

struct Classification {
  BigRational threshold;
  Side convention = Side::twosided;
  std::vector<ClassifiedInstance> evaluated;  // every instance that ran
  std::vector<ClassifiedInstance> selected;   // P >= threshold
  std::vector<SkippedInstance> skipped;
};

/// F_q C_n for prime powers q, n >= 2, q^n <= max_size; then Z:4 C:2,
/// Z:6 C:2, F:2 S3, F:2 Q8.
std::vector<CatalogInstance> default_catalog(std::uint64_t max_size = 1024);

/// Instances the oracle cannot run are listed in `skipped`, never dropped.
Classification classify_threshold(std::span<const CatalogInstance> catalog, const BigRational& threshold,
                                  const Limits& limits = {}, Side convention = Side::twosided);

}  // namespace nullity
