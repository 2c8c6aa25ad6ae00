#ifndef SIMFAC_QUADRATIC_FORM_HPP
#define SIMFAC_QUADRATIC_FORM_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include "simfac/places.hpp"
#include "simfac/rational.hpp"
#include "simfac/square_class.hpp"

namespace simfac {

// A regular diagonal quadratic form <c_1,...,c_n> over Q. Every coefficient
// is nonzero; the empty form (dim 0) is permitted and is both anisotropic
// and hyperbolic of index 0.
class QuadraticForm {
  public:
    QuadraticForm() = default;
    explicit QuadraticForm(std::vector<Rat> coeffs);

    size_t dim() const { return coeffs_.size(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(size_t i) const { return coeffs_.at(i); }
    bool empty() const { return coeffs_.empty(); }

    // q(x) = sum c_i x_i^2, exact.
    Rat evaluate(const std::vector<Rat>& x) const;
    // Polar form b(x,y) = sum c_i x_i y_i (so b(x,x) = q(x)).
    Rat polar(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    bool operator==(const QuadraticForm& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const QuadraticForm& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

  private:
    std::vector<Rat> coeffs_;
};

QuadraticForm make_form(const std::vector<Rat>& coeffs);

// <1,-1>
QuadraticForm hyperbolic_plane();
// k copies of <1,-1>
QuadraticForm hyperbolic_forms(size_t k);

QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b);
// All pairwise products in row-major order: (a_i b_j) with i outer, j inner.
QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm scale(const Rat& c, const QuadraticForm& f);
// <-c_1,...,-c_n>
QuadraticForm negate(const QuadraticForm& f);

// Classification data over Q: dimension, determinant and discriminant square
// classes, real signature, and the Hasse invariant at every bad place
// (product over pairs i<j of hilbert_symbol(c_i, c_j, v)).
struct FormInvariants {
    size_t dim = 0;
    SquareClass det;                 // prod c_i mod squares
    SquareClass disc;                // (-1)^{n(n-1)/2} det
    size_t positive = 0, negative = 0;
    std::map<Place, int> hasse;      // on bad_places(coeffs)

    int hasse_at(const Place& v) const {
        auto it = hasse.find(v);
        return it == hasse.end() ? 1 : it->second;
    }
};

FormInvariants invariants(const QuadraticForm& f);

// Form literal shared with the CLI: comma-separated rationals, whitespace
// ignored, empty string = dim-0 form. E.g. "1,-2,3/5".
QuadraticForm parse_form(const std::string& text);
std::string form_literal(const QuadraticForm& f);

} // namespace simfac

#endif
