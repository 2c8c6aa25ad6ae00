#include "simfac/quadratic_form.hpp"

#include <ostream>
#include <sstream>

#include "simfac/errors.hpp"

namespace simfac {

QuadraticForm::QuadraticForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c == 0) throw DegenerateForm();
}

Rat QuadraticForm::evaluate(const std::vector<Rat>& x) const {
    if (x.size() != coeffs_.size())
        throw Error("evaluate: vector length does not match form dimension");
    Rat out = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) out += coeffs_[i] * x[i] * x[i];
    out.canonicalize();
    return out;
}

Rat QuadraticForm::polar(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (x.size() != coeffs_.size() || y.size() != coeffs_.size())
        throw Error("polar: vector length does not match form dimension");
    Rat out = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) out += coeffs_[i] * x[i] * y[i];
    out.canonicalize();
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) {
    os << '<';
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (i) os << ',';
        os << f.coeffs_[i];
    }
    return os << '>';
}

QuadraticForm make_form(const std::vector<Rat>& coeffs) {
    return QuadraticForm(coeffs);
}

QuadraticForm hyperbolic_plane() {
    return QuadraticForm({Rat(1), Rat(-1)});
}

QuadraticForm hyperbolic_forms(size_t k) {
    std::vector<Rat> c;
    c.reserve(2 * k);
    for (size_t i = 0; i < k; ++i) {
        c.emplace_back(1);
        c.emplace_back(-1);
    }
    return QuadraticForm(std::move(c));
}

QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b) {
    std::vector<Rat> c = a.coeffs();
    c.insert(c.end(), b.coeffs().begin(), b.coeffs().end());
    return QuadraticForm(std::move(c));
}

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
    std::vector<Rat> c;
    c.reserve(a.dim() * b.dim());
    for (const auto& x : a.coeffs())
        for (const auto& y : b.coeffs()) {
            Rat p = x * y;
            p.canonicalize();
            c.push_back(p);
        }
    return QuadraticForm(std::move(c));
}

QuadraticForm scale(const Rat& c, const QuadraticForm& f) {
    if (c == 0) throw DegenerateForm("scale by zero");
    std::vector<Rat> out;
    out.reserve(f.dim());
    for (const auto& x : f.coeffs()) {
        Rat p = c * x;
        p.canonicalize();
        out.push_back(p);
    }
    return QuadraticForm(std::move(out));
}

QuadraticForm negate(const QuadraticForm& f) {
    return scale(Rat(-1), f);
}

FormInvariants invariants(const QuadraticForm& f) {
    FormInvariants inv;
    inv.dim = f.dim();
    Rat det(1);
    for (const auto& c : f.coeffs()) {
        det *= c;
        if (c > 0)
            ++inv.positive;
        else
            ++inv.negative;
    }
    det.canonicalize();
    inv.det = f.empty() ? SquareClass() : squarefree_class(det);
    size_t n = f.dim();
    bool disc_flip = (n * (n - 1) / 2) % 2 == 1;
    inv.disc = disc_flip ? inv.det * SquareClass(-1, {}) : inv.det;
    if (!f.empty()) {
        for (const auto& v : bad_places(f.coeffs())) {
            int h = 1;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    h *= hilbert_symbol(f.coeff(i), f.coeff(j), v);
            inv.hasse[v] = h;
        }
    }
    return inv;
}

QuadraticForm parse_form(const std::string& text) {
    std::string stripped;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) stripped += ch;
    if (stripped.empty()) return QuadraticForm();
    std::vector<Rat> coeffs;
    size_t start = 0;
    while (true) {
        size_t comma = stripped.find(',', start);
        std::string tok = stripped.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
        coeffs.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return QuadraticForm(std::move(coeffs));
}

std::string form_literal(const QuadraticForm& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.dim(); ++i) {
        if (i) os << ',';
        os << f.coeff(i);
    }
    return os.str();
}

} // namespace simfac
