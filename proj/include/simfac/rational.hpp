#ifndef SIMFAC_RATIONAL_HPP
#define SIMFAC_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace simfac {

using Int = mpz_class;
using Rat = mpq_class;

// Prime factorization of n > 0 as prime -> exponent, primes ascending.
// Trial division up to a fixed bound, then Miller-Rabin + Pollard rho/Brent.
// Inputs are desk-scale; this is not meant for cryptographic sizes.
std::map<Int, unsigned> factorize(const Int& n);

bool is_prime(const Int& n);

// p-adic valuation of a nonzero rational.
long valuation(const Rat& q, const Int& p);

// q / p^valuation(q), a p-adic unit (as a rational).
Rat unit_part(const Rat& q, const Int& p);

// Legendre symbol of a p-adic unit u (rational, p odd prime not dividing
// numerator or denominator): +1 if u is a square mod p, -1 otherwise.
int legendre_unit(const Rat& u, const Int& p);

// Odd residue class mod 8 of a 2-adic unit (numerator and denominator odd).
int mod8_unit(const Rat& u);

bool is_square(const Rat& q);

// Exact square root of a rational square.
Rat sqrt_exact(const Rat& q);

// Square root of a mod p (p odd prime, a a QR mod p or 0), Tonelli-Shanks.
Int sqrt_mod_prime(const Int& a, const Int& p);

// Largest m with m^2 | n, returned as (squarefree part, m); n != 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

std::string to_string(const Rat& q);

// Strict parser for the CLI rational literal: optional sign, digits,
// optional /digits. Rejects empty and malformed strings.
Rat parse_rational(const std::string& s);

} // namespace simfac

#endif
