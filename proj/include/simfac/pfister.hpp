#ifndef SIMFAC_PFISTER_HPP
#define SIMFAC_PFISTER_HPP

#include <iosfwd>

#include "simfac/solver.hpp"

namespace simfac {

// <<a_1,...,a_n>> = <1,-a_1> x ... x <1,-a_n>, kept as the slot list with
// its canonical expansion (left fold, row-major). n = 0 gives <1>.
class PfisterForm {
  public:
    PfisterForm();
    explicit PfisterForm(std::vector<Rat> slots);

    const std::vector<Rat>& slots() const { return slots_; }
    const QuadraticForm& expansion() const { return expansion_; }
    size_t fold() const { return slots_.size(); }
    size_t dim() const { return expansion_.dim(); }
    bool trivial() const { return slots_.empty(); }

    friend std::ostream& operator<<(std::ostream& os, const PfisterForm& p);

  private:
    std::vector<Rat> slots_;
    QuadraticForm expansion_;
};

PfisterForm make_pfister(const std::vector<Rat>& slots);

// Pure part pi' with pi = <1> + pi': drop the leading 1 of the expansion.
QuadraticForm pure_part(const PfisterForm& p);

// Does pi become hyperbolic over Q(sqrt(d))? Exact; for anisotropic pi the
// subform route (<1,-d> inside pi) and the pure-part representation route
// (-d in D(pi')) are both computed and must agree.
bool hyperbolic_over_sqrt(const PfisterForm& p, const SquareClass& d);

// Constructive witness of the similitude property: d with c in D<<d>> and
// pi hyperbolic over Q(sqrt(d)). Pre: c in G(pi) (= D(pi)).
// Follows the proof: read two proportional values of pi off an isotropic
// vector of pi + -c pi, restrict pi to that plane, take its discriminant.
// Degenerate situations fall back to a verified square-class search.
// Every returned d is re-verified against both defining predicates.
SquareClass similitude_witness(const PfisterForm& p, const Rat& c);

// Prop 3.4: f' with dim(f') = dim(f) mod 2, alpha x f' anisotropic and
// Witt equivalent to alpha x f. Pre: alpha anisotropic.
QuadraticForm pfister_factorize(const PfisterForm& alpha, const QuadraticForm& f);

// Pfister literal shared with the CLI, e.g. "<<2,-1>>"; "<<>>" is <1>.
PfisterForm parse_pfister(const std::string& text);
std::string pfister_literal(const PfisterForm& p);

} // namespace simfac

#endif
