#include "simfac/involution.hpp"

#include <ostream>
#include <sstream>

#include "simfac/errors.hpp"

namespace simfac {

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::Symplectic: return "S";
        case Branch::OrthoDeg2Mod4: return "O2";
        case Branch::OrthoDeg0Mod4: return "O0";
    }
    return "?";
}

DecomposablePresentation::DecomposablePresentation(QuadraticForm psi, PfisterForm rho, Rat a,
                                                   Rat b, InvolutionKind kind)
    : psi_(std::move(psi)), rho_(std::move(rho)), a_(std::move(a)), b_(std::move(b)),
      kind_(kind) {
    if (psi_.dim() % 2 == 0)
        throw InvalidPresentation("psi must have odd dimension");
    if (a_ == 0 || b_ == 0) throw InvalidPresentation("a and b must be nonzero");
}

int DecomposablePresentation::brauer_index() const {
    PfisterForm norm({a_, b_});
    return is_isotropic(norm.expansion()) ? 1 : 2;
}

Branch DecomposablePresentation::branch() const {
    if (kind_ == InvolutionKind::Symplectic) return Branch::Symplectic;
    return rho_.trivial() ? Branch::OrthoDeg2Mod4 : Branch::OrthoDeg0Mod4;
}

std::ostream& operator<<(std::ostream& os, const DecomposablePresentation& pres) {
    os << "Ad(" << pres.psi_ << " x " << pres.rho_ << ") x ("
       << pres.a_ << (pres.kind_ == InvolutionKind::Orthogonal ? " .| " : ", ") << pres.b_
       << ")";
    return os;
}

DecomposablePresentation make_presentation(const QuadraticForm& psi, const PfisterForm& rho,
                                           const Rat& a, const Rat& b, InvolutionKind kind) {
    return DecomposablePresentation(psi, rho, a, b, kind);
}

DerivedForms derived_forms(const DecomposablePresentation& pres) {
    DerivedForms out;
    std::vector<Rat> pi_slots = {pres.a()};
    pi_slots.insert(pi_slots.end(), pres.rho().slots().begin(), pres.rho().slots().end());
    out.pi = PfisterForm(pi_slots);
    QuadraticForm b_part = orth_sum(QuadraticForm({pres.b()}), pure_part(pres.rho()));
    out.pi_tilde = tensor(QuadraticForm({Rat(1), -pres.a()}), b_part);
    out.tau_norm = PfisterForm({pres.a(), pres.b()});
    std::vector<Rat> rv = pres.rho().slots();
    rv.push_back(pres.a());
    rv.push_back(pres.b());
    out.rho_nu = PfisterForm(rv);
    return out;
}

bool is_multiplier(const DecomposablePresentation& pres, const Rat& c) {
    if (c == 0) throw ZeroInput("is_multiplier: c must be nonzero");
    const DerivedForms d = derived_forms(pres);
    switch (pres.branch()) {
        case Branch::Symplectic:
            return is_similarity_factor(d.rho_nu.expansion(), c);
        case Branch::OrthoDeg2Mod4:
            return represents(QuadraticForm({Rat(1), -pres.a()}), c);
        case Branch::OrthoDeg0Mod4:
            return product_factorization(d.pi.expansion(), d.pi_tilde, c).has_value();
    }
    throw InternalError("is_multiplier: unreachable branch");
}

bool is_hyperbolic(const DecomposablePresentation& pres) {
    const DerivedForms d = derived_forms(pres);
    switch (pres.branch()) {
        case Branch::Symplectic:
            return is_isotropic(d.rho_nu.expansion());
        case Branch::OrthoDeg2Mod4:
            return is_square(pres.a());
        case Branch::OrthoDeg0Mod4:
            return is_isotropic(d.pi.expansion()) || is_isotropic(d.pi_tilde);
    }
    throw InternalError("is_hyperbolic: unreachable branch");
}

bool is_hyperbolic_over_sqrt(const DecomposablePresentation& pres, const SquareClass& d) {
    if (d.is_one()) return is_hyperbolic(pres);
    const DerivedForms df = derived_forms(pres);
    const Rat d_rep(d.representative());
    switch (pres.branch()) {
        case Branch::Symplectic:
            return hyperbolic_over_sqrt(df.rho_nu, d);
        case Branch::OrthoDeg2Mod4:
            return is_square(pres.a()) || same_square_class(pres.a(), d_rep);
        case Branch::OrthoDeg0Mod4:
            return hyperbolic_over_sqrt(df.pi, d) || isotropic_over_sqrt(df.pi_tilde, d);
    }
    throw InternalError("is_hyperbolic_over_sqrt: unreachable branch");
}

DecomposablePresentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::optional<InvolutionKind> kind;
    std::optional<QuadraticForm> psi;
    std::optional<PfisterForm> rho;
    std::optional<Rat> a, b;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string stripped;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) stripped += ch;
        if (stripped.empty()) continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("presentation line " + std::to_string(lineno) +
                             ": expected key=value");
        std::string key = stripped.substr(0, eq);
        std::string value = stripped.substr(eq + 1);
        try {
            if (key == "kind") {
                if (value == "orthogonal")
                    kind = InvolutionKind::Orthogonal;
                else if (value == "symplectic")
                    kind = InvolutionKind::Symplectic;
                else
                    throw ParseError("unknown kind '" + value + "'");
            } else if (key == "psi") {
                psi = parse_form(value);
            } else if (key == "rho") {
                rho = parse_pfister(value);
            } else if (key == "a") {
                a = parse_rational(value);
            } else if (key == "b") {
                b = parse_rational(value);
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError("presentation line " + std::to_string(lineno) + ": " + e.what());
        } catch (const DegenerateForm& e) {
            throw ParseError("presentation line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!kind || !psi || !rho || !a || !b)
        throw ParseError("presentation is missing one of kind/psi/rho/a/b");
    return DecomposablePresentation(*psi, *rho, *a, *b, *kind);
}

std::string presentation_text(const DecomposablePresentation& pres) {
    std::ostringstream os;
    os << "kind=" << (pres.kind() == InvolutionKind::Orthogonal ? "orthogonal" : "symplectic")
       << "\n";
    os << "psi=" << form_literal(pres.psi()) << "\n";
    os << "rho=" << pfister_literal(pres.rho()) << "\n";
    os << "a=" << pres.a() << "\n";
    os << "b=" << pres.b() << "\n";
    return os.str();
}

} // namespace simfac
