#ifndef SIMFAC_ORACLE_HPP
#define SIMFAC_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "simfac/involution.hpp"
#include "simfac/solver.hpp"

namespace simfac {
namespace oracle {

// Independent brute-force ground truth. Deliberately dumb: only form
// evaluation, never the local-global code paths.

// Exhaustive scan of primitive integer vectors with sup-norm <= height for
// f(x) = target (target 0 requires x != 0). Returns the lexicographically
// smallest hit over the canonical sign choice, or nullopt on a bounded-search
// miss (which is not a negative decision). Coordinates are scanned
// nonnegative-first; signs enter through the coefficients' symmetry.
std::optional<RepVector> brute_search(const QuadraticForm& f, const Rat& target,
                                      unsigned height);

// Bounded search for a zero of f over Q(sqrt(d)): vectors u + v*sqrt(d) with
// integer u, v of sup-norm <= height. Returns true on a verified hit.
bool brute_isotropic_over_sqrt(const QuadraticForm& f, const SquareClass& d, unsigned height);

struct InstanceSpec {
    uint64_t seed = 0;
    unsigned max_rho_slots = 2;
    unsigned coeff_height = 20;
    bool force_c_in_g = true;
};

struct Instance {
    DecomposablePresentation pres;
    Rat c;
    bool c_in_g = false;
};

// Deterministic per seed. c_in_g = true instances are manufactured as
// products of explicit values of the relevant forms, so membership holds by
// construction; c_in_g = false instances are rejection-sampled against
// is_multiplier (GenerationExhausted if the bound is hit).
Instance random_instance(const InstanceSpec& spec);

// Seeded random diagonal form, used by the differential corpora.
QuadraticForm random_form(uint64_t seed, unsigned dim, unsigned height);

} // namespace oracle
} // namespace simfac

#endif
