#ifndef SIMFAC_INVOLUTION_HPP
#define SIMFAC_INVOLUTION_HPP

#include <iosfwd>

#include "simfac/pfister.hpp"

namespace simfac {

enum class InvolutionKind { Orthogonal, Symplectic };

enum class Branch { Symplectic, OrthoDeg2Mod4, OrthoDeg0Mod4 };

std::string branch_name(Branch b);

// Presentation of a totally decomposable algebra with involution of the
// first kind over Q with index <= 2:
//   orthogonal:  (A, sigma) = Ad(psi x rho) x (a .| b)
//   symplectic:  (A, sigma) = Ad(psi x rho) x ((a,b), canonical)
// The algebra exists only through this data; no matrix realization is built.
class DecomposablePresentation {
  public:
    DecomposablePresentation(QuadraticForm psi, PfisterForm rho, Rat a, Rat b,
                             InvolutionKind kind);

    const QuadraticForm& psi() const { return psi_; }
    const PfisterForm& rho() const { return rho_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    InvolutionKind kind() const { return kind_; }

    size_t degree() const { return 2 * psi_.dim() * rho_.dim(); }
    // 2 iff the quaternion (a,b) is non-split, i.e. <<a,b>> is anisotropic.
    int brauer_index() const;
    Branch branch() const;

    friend std::ostream& operator<<(std::ostream& os, const DecomposablePresentation& pres);

  private:
    QuadraticForm psi_;
    PfisterForm rho_;
    Rat a_, b_;
    InvolutionKind kind_;
};

DecomposablePresentation make_presentation(const QuadraticForm& psi, const PfisterForm& rho,
                                           const Rat& a, const Rat& b, InvolutionKind kind);

// The forms the decisions run on:
//   pi       = <<a>> x rho            (Pfister, slots [a] + slots(rho))
//   pi_tilde = <1,-a> x (<b> + rho')
//   tau_norm = <<a,b>>                (norm form of (a,b)), alias nu
//   phi_symp = rho x nu               (as a Pfister: slots(rho) + [a,b])
struct DerivedForms {
    PfisterForm pi;
    QuadraticForm pi_tilde;
    PfisterForm tau_norm;
    PfisterForm rho_nu; // symplectic branch only meaningful
};

DerivedForms derived_forms(const DecomposablePresentation& pres);

// c in G(A, sigma). Branch dispatch:
//   Symplectic:    c similarity factor of rho x nu (Pfister, D = G)
//   OrthoDeg2Mod4: c in D<1,-a>
//   OrthoDeg0Mod4: c in D(pi) * D(pi_tilde)
bool is_multiplier(const DecomposablePresentation& pres, const Rat& c);

// sigma hyperbolic over Q. OrthoDeg0Mod4 uses the disjunction
// "pi isotropic or pi_tilde isotropic": the pi_tilde route alone misses the
// edge dim(rho) = 2 with pi hyperbolic but tau anisotropic, where sigma is
// hyperbolic by Prop 2.3 although pi_tilde stays anisotropic.
bool is_hyperbolic(const DecomposablePresentation& pres);

// sigma hyperbolic over Q(sqrt(d)); defers to is_hyperbolic for square d.
bool is_hyperbolic_over_sqrt(const DecomposablePresentation& pres, const SquareClass& d);

// Line-oriented key=value presentation file (kind, psi, rho, a, b).
// Unknown keys are rejected with a line diagnostic.
DecomposablePresentation parse_presentation(const std::string& text);
std::string presentation_text(const DecomposablePresentation& pres);

} // namespace simfac

#endif
