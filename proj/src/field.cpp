#include "ginv/field.hpp"

#include <cassert>
#include <stdexcept>

namespace ginv {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 62))
    throw std::invalid_argument("prime field modulus must be < 2^62");
  if (!is_prime_u64(p))
    throw std::invalid_argument("prime field modulus " + std::to_string(p) +
                                " is not prime");
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "F_" + std::to_string(modulus);
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::PrimeField && !is_prime_u64(spec_.modulus))
    throw std::invalid_argument("bad prime field modulus");
}

std::uint64_t Field::addm(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;  // no overflow: modulus < 2^62
  if (s >= spec_.modulus) s -= spec_.modulus;
  return s;
}

std::uint64_t Field::subm(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + spec_.modulus - b;
}

std::uint64_t Field::mulm(std::uint64_t a, std::uint64_t b) const {
  return mulmod_u64(a, b, spec_.modulus);
}

std::uint64_t Field::powm(std::uint64_t a, std::uint64_t e) const {
  return powmod_u64(a, e, spec_.modulus);
}

Scalar Field::zero() const {
  return is_rationals() ? Scalar::rational(0) : Scalar::residue(0);
}

Scalar Field::one() const {
  return is_rationals() ? Scalar::rational(1)
                        : Scalar::residue(1 % spec_.modulus);
}

Scalar Field::from_int(long v) const {
  if (is_rationals()) return Scalar::rational(mpq_class(v));
  long m = static_cast<long>(spec_.modulus);
  long r = v % m;
  if (r < 0) r += m;
  return Scalar::residue(static_cast<std::uint64_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return Scalar::rational(mpq_class(v));
  mpz_class m(static_cast<unsigned long>(spec_.modulus));
  mpz_class r = v % m;
  if (r < 0) r += m;
  return Scalar::residue(r.get_ui());
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (is_rationals()) return Scalar::rational(v);
  Scalar num = from_mpz(v.get_num());
  Scalar den = from_mpz(v.get_den());
  if (den.residue_value() == 0)
    throw std::domain_error("rational has zero denominator mod " +
                            std::to_string(spec_.modulus));
  return mul(num, inv(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar::rational(a.rational_value() + b.rational_value());
  return Scalar::residue(addm(a.residue_value(), b.residue_value()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar::rational(a.rational_value() - b.rational_value());
  return Scalar::residue(subm(a.residue_value(), b.residue_value()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar::rational(a.rational_value() * b.rational_value());
  return Scalar::residue(mulm(a.residue_value(), b.residue_value()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return Scalar::rational(-a.rational_value());
  std::uint64_t r = a.residue_value();
  return Scalar::residue(r == 0 ? 0 : spec_.modulus - r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_rationals()) return Scalar::rational(1 / a.rational_value());
  return Scalar::residue(powm(a.residue_value(), spec_.modulus - 2));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

bool Field::is_zero(const Scalar& a) const {
  if (is_rationals()) return sgn(a.rational_value()) == 0;
  return a.residue_value() == 0;
}

bool Field::is_one(const Scalar& a) const { return equal(a, one()); }

bool Field::equal(const Scalar& a, const Scalar& b) const { return a == b; }

std::size_t Field::bit_size(const Scalar& a) const {
  if (!is_rationals()) return 64;
  const mpq_class& q = a.rational_value();
  if (sgn(q) == 0) return 1;
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::string Field::str(const Scalar& a) const {
  if (is_rationals()) {
    const mpq_class& q = a.rational_value();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
  }
  return std::to_string(a.residue_value());
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (is_rationals()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return Scalar::rational(q);
  }
  mpz_class z;
  if (z.set_str(s, 10) != 0)
    throw std::invalid_argument("bad residue literal: " + s);
  return from_mpz(z);
}

}  // namespace ginv
