/*
 * Exact coefficient fields: the rationals (GMP mpq) and prime fields F_p for
 * word-sized p.  A Scalar is a field element; all arithmetic goes through a
 * Field object so the prime-field modulus lives in one place instead of in
 * every element.  No floating point anywhere.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace ginv {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // set iff kind == PrimeField

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  // Validates primality (deterministic Miller-Rabin); requires p < 2^62 so
  // sums of two residues never overflow a 64-bit word.
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;  // "Q" or "F_<p>"
};

bool is_prime_u64(std::uint64_t n);

// One field element.  Rationals are held in lowest terms with positive
// denominator (mpq_class canonical form); prime-field elements are residues
// in [0, p), with p supplied by the Field performing the arithmetic.
class Scalar {
public:
  Scalar() : v_(std::in_place_type<mpq_class>, 0) {}

  static Scalar rational(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.v_ = std::move(q);
    return s;
  }
  static Scalar residue(std::uint64_t r) {
    Scalar s;
    s.v_ = r;
    return s;
  }

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue_value() const { return std::get<std::uint64_t>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator<(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
    if (is_rational()) return rational_value() < o.rational_value();
    return residue_value() < o.residue_value();
  }

private:
  std::variant<mpq_class, std::uint64_t> v_;
};

class Field {
public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  bool is_rationals() const { return spec_.kind == FieldKind::Rationals; }
  std::uint64_t modulus() const { return spec_.modulus; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  // PrimeField: reduces numerator and denominator mod p; throws
  // std::domain_error if the denominator vanishes mod p.
  Scalar from_mpq(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws std::domain_error on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  // Pivot-selection metric: numerator bit length plus denominator bit length
  // (residues count as single-word numerators over denominator 1).
  std::size_t bit_size(const Scalar& a) const;

  std::string str(const Scalar& a) const;          // "0", "5", "-3/7"
  Scalar parse(std::string_view text) const;       // inverse of str

private:
  FieldSpec spec_;

  std::uint64_t addm(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t subm(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mulm(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t powm(std::uint64_t a, std::uint64_t e) const;
};

}  // namespace ginv
