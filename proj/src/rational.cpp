#include "idg/rational.hpp"

#include <stdexcept>

namespace idg {

Int integer_sqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("integer_sqrt_floor: negative input");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> perfect_square_root(const Rat& q) {
  if (q < 0) throw std::domain_error("perfect_square_root: negative input");
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  // num/den is already reduced, so the roots are coprime as well.
  return make_rat(integer_sqrt_floor(num), integer_sqrt_floor(den));
}

SquarefreeDecomposition squarefree_part(const Int& n) {
  if (n < 1) throw std::domain_error("squarefree_part: input must be positive");
  Int rest = n;
  Int squarefree = 1;
  Int root = 1;
  auto strip = [&](const Int& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) squarefree *= p;
    for (unsigned long i = 0; i < e / 2; ++i) root *= p;
  };
  strip(2);
  for (Int p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) squarefree *= rest;
  return {squarefree, root};
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("parse_rational: empty input");
  std::string body = text.substr(begin, end - begin + 1);
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace idg
