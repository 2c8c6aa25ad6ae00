#ifndef SIMFAC_SOLVER_HPP
#define SIMFAC_SOLVER_HPP

#include <array>
#include <optional>
#include <vector>

#include "simfac/isotropy.hpp"
#include "simfac/quadratic_form.hpp"

namespace simfac {

// Explicit witness behind D(f): coords with f(coords) = value exactly.
// For isotropy witnesses value = 0 and coords != 0.
struct RepVector {
    std::vector<Rat> coords;
    Rat value;
};

// Constructive layer. Decisions (yes/no) are always taken by the exact
// layer in isotropy.hpp before any search runs; these functions produce
// witnesses and may throw SearchExhausted, never a wrong answer.

// Nontrivial zero of an isotropic form. Closed form in dim <= 2, conic
// descent in dim 3, common-value splitting with a verified square-class
// search in dim >= 4. Throws NotRepresented if the form is anisotropic.
std::vector<Rat> find_isotropic_vector(const QuadraticForm& f);

// Witness for f(x) = c. Pre: c = 0 requires is_isotropic(f), c != 0
// requires represents(f, c); otherwise NotRepresented.
RepVector find_representation(const QuadraticForm& f, const Rat& c);

struct WittDecomposition {
    size_t witt_index = 0;
    QuadraticForm anisotropic;
};

// Constructive Witt decomposition: repeatedly split off a hyperbolic plane
// through an explicit isotropic vector. Cross-checked against the
// invariant-level witt_index.
WittDecomposition witt_decompose(const QuadraticForm& f);

struct ProductFactorization {
    Rat c1, c2;
    RepVector w1, w2; // witnesses in f1 and f2
};

// c in D(f1)*D(f2): membership decided exactly as isotropy of
// scale(c,f1) + -f2; on yes, factors are read off an isotropic vector's
// two blocks, with zero-value blocks resolved by universality.
std::optional<ProductFactorization> product_factorization(const QuadraticForm& f1,
                                                          const QuadraticForm& f2,
                                                          const Rat& c);

// Explicit embedding of tau into f: vectors v_1..v_k in f's space with
// polar(v_i, v_j) = 0 for i != j and f(v_i) = tau_i exactly.
// Pre: is_subform(tau, f).
std::vector<std::vector<Rat>> embed_subform(const QuadraticForm& tau, const QuadraticForm& f);

// Diagonal form of the orthogonal complement of span(v) in f, together
// with the complement basis expressed in f's coordinates. Pre: f(v) != 0.
std::pair<QuadraticForm, std::vector<std::vector<Rat>>> orthogonal_complement(
    const QuadraticForm& f, const std::vector<Rat>& v);

// Deterministic sequence of candidate square classes (as squarefree
// rationals, +/-) supported on the primes of the given values, then on that
// support enlarged one auxiliary prime at a time. Used by verified searches.
std::vector<Rat> square_class_candidates(const std::vector<Rat>& values, size_t extra_primes);

// Integer solution of Z^2 = A X^2 + B Y^2 for squarefree A, B; pre: solvable.
// Descent reduces max(|A|,|B|); exposed for tests.
std::array<Int, 3> solve_conic(const Int& A, const Int& B);

} // namespace simfac

#endif
