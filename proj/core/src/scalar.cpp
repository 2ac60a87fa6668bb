#include "facering/scalar.hpp"

#include <cctype>

#include "facering/errors.hpp"

namespace facering {

Field Field::of_characteristic(std::uint64_t characteristic) {
  if (characteristic == 0) return Field();
  mpz_class p(static_cast<unsigned long>(characteristic));
  if (characteristic < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw InvalidField("characteristic " + std::to_string(characteristic) +
                       " is neither 0 nor prime");
  return Field(characteristic);
}

Scalar Field::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(r));
}

Scalar Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Scalar Field::from_mpz(const mpz_class& v) const {
  if (p_ == 0) return Scalar(mpq_class(v));
  return reduce(v);
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (p_ == 0) return Scalar(v);
  Scalar den = reduce(v.get_den());
  if (den.is_zero())
    throw InvalidField("denominator of " + v.get_str() + " vanishes in " + name());
  return mul(reduce(v.get_num()), inv(den));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto well_formed = [&] {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        (slash ? den_digits : digits) = true;
      } else if (c == '/' && !slash && digits) {
        slash = true;
      } else {
        return false;
      }
    }
    return digits && (!slash || den_digits);
  };
  if (!well_formed()) throw ParseError("malformed scalar '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_mpq(q);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.value() + b.value());
  return reduce(a.value().get_num() + b.value().get_num());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.value() - b.value());
  return reduce(a.value().get_num() - b.value().get_num());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.value() * b.value());
  return reduce(a.value().get_num() * b.value().get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return Scalar(-a.value());
  return reduce(-a.value().get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw DivisionByZero("division by zero");
  if (p_ == 0) return Scalar(1 / a.value());
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.value().get_num_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(r));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace facering
