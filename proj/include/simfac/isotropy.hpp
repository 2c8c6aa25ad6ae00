#ifndef SIMFAC_ISOTROPY_HPP
#define SIMFAC_ISOTROPY_HPP

#include "simfac/quadratic_form.hpp"

namespace simfac {

// Exact decision layer. Everything here is a pure invariant computation by
// the Hasse-Minkowski local-global principle; none of it depends on the
// constructive solvers.

// Local isotropy over the completion at v.
bool is_locally_isotropic(const QuadraticForm& f, const Place& v);

// Isotropy over Q.
bool is_isotropic(const QuadraticForm& f);

// Witt index over the completion at v, from local invariants.
size_t local_witt_index(const QuadraticForm& f, const Place& v);

// Witt index over Q = min of the local indices over the bad places.
size_t witt_index(const QuadraticForm& f);

bool is_hyperbolic_form(const QuadraticForm& f);

// Isometry over Q: equality of dim, det, signature and all local Hasse
// invariants (compared over the union of the two bad-place sets).
bool is_isometric(const QuadraticForm& f, const QuadraticForm& g);

// c in D(f): f represents c over Q. Decided as isotropy of f + <-c>.
bool represents(const QuadraticForm& f, const Rat& c);

// c in G(f): scale(c,f) isometric to f.
bool is_similarity_factor(const QuadraticForm& f, const Rat& c);

// tau isometric to a subform of f, by the Witt-index criterion
// i(f + (-tau)) >= dim(tau).
bool is_subform(const QuadraticForm& tau, const QuadraticForm& f);

// Isotropy of f over Q(sqrt(d)), decided exactly for every dimension via
// the places of the quadratic extension (computed rationally: only finite
// places split in Q(sqrt(d)) can obstruct, and the real embeddings exist
// only for d > 0).
bool isotropic_over_sqrt(const QuadraticForm& f, const SquareClass& d);

} // namespace simfac

#endif
