#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace idg {

using Int = mpz_class;
using Rat = mpq_class;

// n = squarefree * cofactor_root^2 with squarefree free of square divisors > 1.
struct SquarefreeDecomposition {
  Int squarefree;
  Int cofactor_root;
};

// Largest s with s^2 <= n. Rejects negative input.
Int integer_sqrt_floor(const Int& n);

bool is_perfect_square(const Int& n);

// Exact rational square root, or nullopt if none exists. Rejects negative input.
std::optional<Rat> perfect_square_root(const Rat& q);

// Trial-division factorization; input must be >= 1.
SquarefreeDecomposition squarefree_part(const Int& n);

// Canonical (reduced, positive denominator) rational from num/den. den != 0.
Rat make_rat(const Int& num, const Int& den);

// Text form `num/den`, den omitted when 1. Accepts unreduced input and reduces.
Rat parse_rational(const std::string& text);
std::string to_string(const Rat& q);

bool is_integer(const Rat& q);
Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

}  // namespace idg
