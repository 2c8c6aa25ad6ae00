#include "simfac/pfister.hpp"

#include <ostream>
#include <sstream>

#include "simfac/errors.hpp"

namespace simfac {

namespace {

QuadraticForm expand(const std::vector<Rat>& slots) {
    QuadraticForm acc({Rat(1)});
    for (const auto& a : slots) {
        if (a == 0) throw DegenerateForm("Pfister slot must be nonzero");
        acc = tensor(acc, QuadraticForm({Rat(1), -a}));
    }
    return acc;
}

} // namespace

PfisterForm::PfisterForm() : expansion_(QuadraticForm({Rat(1)})) {}

PfisterForm::PfisterForm(std::vector<Rat> slots)
    : slots_(std::move(slots)), expansion_(expand(slots_)) {}

std::ostream& operator<<(std::ostream& os, const PfisterForm& p) {
    os << "<<";
    for (size_t i = 0; i < p.slots_.size(); ++i) {
        if (i) os << ',';
        os << p.slots_[i];
    }
    return os << ">>";
}

PfisterForm make_pfister(const std::vector<Rat>& slots) {
    return PfisterForm(slots);
}

QuadraticForm pure_part(const PfisterForm& p) {
    std::vector<Rat> c(p.expansion().coeffs().begin() + 1, p.expansion().coeffs().end());
    return QuadraticForm(std::move(c));
}

bool hyperbolic_over_sqrt(const PfisterForm& p, const SquareClass& d) {
    if (d.is_one()) return is_hyperbolic_form(p.expansion());
    if (p.trivial()) return false; // <1> is never hyperbolic
    if (is_isotropic(p.expansion())) return true; // isotropic Pfister = hyperbolic
    const Rat d_rep(d.representative());
    // subform route: <1,-d> inside pi
    bool via_subform = is_subform(QuadraticForm({Rat(1), -d_rep}), p.expansion());
    // pure-part route: -d in D(pi')
    bool via_pure = represents(pure_part(p), -d_rep);
    if (via_subform != via_pure)
        throw InternalError("hyperbolic_over_sqrt: subform and pure-part routes disagree");
    // both must also agree with isotropy over Q(sqrt(d))
    bool via_extension = isotropic_over_sqrt(p.expansion(), d);
    if (via_subform != via_extension)
        throw InternalError("hyperbolic_over_sqrt: extension route disagrees");
    return via_subform;
}

namespace {

// Verified fallback: smallest candidate square class d with c in D<<d>> and
// pi hyperbolic over Q(sqrt(d)).
SquareClass witness_by_search(const PfisterForm& p, const Rat& c) {
    std::vector<Rat> support = p.slots();
    support.push_back(c);
    for (const auto& cand : square_class_candidates(support, 25)) {
        SquareClass d = squarefree_class(cand);
        Rat d_rep(d.representative());
        if (!represents(QuadraticForm({Rat(1), -d_rep}), c)) continue;
        if (!hyperbolic_over_sqrt(p, d)) continue;
        return d;
    }
    throw SearchExhausted("similitude_witness: square-class search exhausted");
}

} // namespace

SquareClass similitude_witness(const PfisterForm& p, const Rat& c) {
    if (c == 0) throw ZeroInput("similitude_witness: c must be nonzero");
    const QuadraticForm& pi = p.expansion();
    if (!is_similarity_factor(pi, c))
        throw NotASimilarityFactor("similitude_witness: c is not a similarity factor");

    SquareClass d;
    bool have = false;
    if (is_hyperbolic_form(pi)) {
        // any d with c in D<<d>> works; c = x^2 - d y^2 with (x,y) = (0,1)
        d = squarefree_class(-c);
        have = true;
    } else if (same_square_class(c, Rat(1))) {
        // c ~ 1: 1 in D<<d>> always; take -d = first pure coefficient
        d = squarefree_class(-pure_part(p).coeff(0));
        have = true;
    } else {
        // proof route: pi(x) = c pi(y) from an isotropic vector of pi + -c pi,
        // beta = restriction of pi to span(x, y), d = disc(beta) = -det(beta)
        QuadraticForm doubled = orth_sum(pi, scale(-c, pi));
        std::vector<Rat> z = find_isotropic_vector(doubled);
        std::vector<Rat> x(z.begin(), z.begin() + pi.dim());
        std::vector<Rat> y(z.begin() + pi.dim(), z.end());
        Rat qx = pi.evaluate(x), qy = pi.evaluate(y);
        if (qx != c * qy) throw InternalError("similitude_witness: block values inconsistent");
        if (qx != 0) { // anisotropic pi forces this
            Rat b = pi.polar(x, y);
            Rat det = qx * qy - b * b;
            det.canonicalize();
            if (det != 0) {
                d = squarefree_class(-det);
                have = true;
            }
        }
    }
    if (have) {
        Rat d_rep(d.representative());
        if (represents(QuadraticForm({Rat(1), -d_rep}), c) && hyperbolic_over_sqrt(p, d))
            return d;
    }
    // degenerate plane or failed verification: verified search
    return witness_by_search(p, c);
}

QuadraticForm pfister_factorize(const PfisterForm& alpha, const QuadraticForm& f) {
    const QuadraticForm& a = alpha.expansion();
    if (is_isotropic(a)) throw Error("pfister_factorize: alpha must be anisotropic");
    QuadraticForm product = f.empty() ? QuadraticForm() : tensor(a, f);
    QuadraticForm remainder = product.empty() ? QuadraticForm() : witt_decompose(product).anisotropic;
    if (alpha.trivial()) {
        // alpha = <1>: the anisotropic part itself
        if (remainder.dim() % 2 != f.dim() % 2)
            throw InternalError("pfister_factorize: parity violated");
        return remainder;
    }
    std::vector<Rat> peeled;
    while (!remainder.empty()) {
        Rat t = remainder.coeff(0);
        if (!is_subform(scale(t, a), remainder))
            throw SearchExhausted("pfister_factorize: peel step is not a subform");
        peeled.push_back(t);
        QuadraticForm rest = orth_sum(remainder, scale(-t, a));
        remainder = witt_decompose(rest).anisotropic;
    }
    QuadraticForm fprime(peeled);
    // postconditions
    if (fprime.dim() % 2 != f.dim() % 2)
        throw InternalError("pfister_factorize: parity violated");
    if (!fprime.empty()) {
        QuadraticForm back = tensor(a, fprime);
        if (is_isotropic(back)) throw InternalError("pfister_factorize: product not anisotropic");
        QuadraticForm diff = product.empty() ? back : orth_sum(back, negate(product));
        if (!is_hyperbolic_form(diff) && !diff.empty())
            throw InternalError("pfister_factorize: Witt equivalence violated");
    } else if (!product.empty() && !is_hyperbolic_form(product)) {
        throw InternalError("pfister_factorize: empty result for non-hyperbolic product");
    }
    return fprime;
}

PfisterForm parse_pfister(const std::string& text) {
    std::string stripped;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) stripped += ch;
    if (stripped.size() < 4 || stripped.substr(0, 2) != "<<" ||
        stripped.substr(stripped.size() - 2) != ">>")
        throw ParseError("invalid Pfister literal '" + text + "'");
    std::string inner = stripped.substr(2, stripped.size() - 4);
    if (inner.empty()) return PfisterForm();
    return PfisterForm(parse_form(inner).coeffs());
}

std::string pfister_literal(const PfisterForm& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

} // namespace simfac
