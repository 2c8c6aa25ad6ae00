#include "simfac/witness.hpp"

#include <sstream>

#include "simfac/errors.hpp"

namespace simfac {

namespace {

QuadraticForm binary_for(const SquareClass& d) {
    return QuadraticForm({Rat(1), Rat(-d.representative())});
}

std::string coords_text(const std::vector<Rat>& coords) {
    std::ostringstream os;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    return os.str();
}

std::vector<Rat> parse_vector(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) out.push_back(parse_rational(cur));
    if (out.empty()) throw ParseError("empty coordinate vector");
    return out;
}

} // namespace

const RepVector* WitnessCertificate::witness(const std::string& name) const {
    for (const auto& [n, v] : witnesses)
        if (n == name) return &v;
    return nullptr;
}

WitnessCertificate decompose_multiplier(const DecomposablePresentation& pres, const Rat& c) {
    if (c == 0) throw ZeroInput("decompose_multiplier: c must be nonzero");
    if (!is_multiplier(pres, c))
        throw NotAMultiplier("decompose_multiplier: c is not a similarity factor");

    WitnessCertificate cert;
    cert.branch = pres.branch();
    cert.kind = pres.kind();
    cert.psi = pres.psi();
    cert.rho = pres.rho();
    cert.a = pres.a();
    cert.b = pres.b();
    cert.c = c;

    const DerivedForms df = derived_forms(pres);

    if (cert.branch == Branch::Symplectic) {
        SquareClass d = similitude_witness(df.rho_nu, c);
        cert.c1 = c;
        cert.c2 = 1;
        cert.d1 = d;
        cert.d2 = d;
        cert.witnesses.emplace_back("c_in_d1", find_representation(binary_for(cert.d1), c));
        cert.witnesses.emplace_back("unit_in_d2", find_representation(binary_for(cert.d2), Rat(1)));
    } else if (cert.branch == Branch::OrthoDeg2Mod4) {
        SquareClass d = squarefree_class(pres.a());
        cert.c1 = c;
        cert.c2 = 1;
        cert.d1 = d;
        cert.d2 = d;
        cert.witnesses.emplace_back("c_in_d1", find_representation(binary_for(cert.d1), c));
        cert.witnesses.emplace_back("unit_in_d2", find_representation(binary_for(cert.d2), Rat(1)));
    } else {
        const QuadraticForm& pi = df.pi.expansion();
        auto pf = product_factorization(pi, df.pi_tilde, c);
        if (!pf) throw InternalError("decompose_multiplier: factorization vanished");
        cert.c1 = pf->c1;
        cert.c2 = pf->c2;
        cert.witnesses.emplace_back("factor_pi", pf->w1);
        cert.witnesses.emplace_back("factor_pi_tilde", pf->w2);

        // e = first coefficient of the canonical pure part of rho
        QuadraticForm rho_pure = pure_part(pres.rho());
        Rat e = rho_pure.coeff(0);
        cert.e = e;
        RepVector e_rep;
        e_rep.coords.assign(rho_pure.dim(), Rat(0));
        e_rep.coords[0] = 1;
        e_rep.value = e;
        cert.witnesses.emplace_back("e_in_rho_pure", e_rep);

        Rat ec1 = cert.c1 / e;
        ec1.canonicalize();
        cert.d1 = similitude_witness(df.pi, ec1);
        cert.witnesses.emplace_back("c1e_in_d1", find_representation(binary_for(cert.d1), ec1));

        // binary subform of e*pi_tilde through values 1 and e*c2
        QuadraticForm epit = scale(e, df.pi_tilde);
        Rat ec2 = e * cert.c2;
        ec2.canonicalize();
        RepVector u = find_representation(epit, Rat(1));
        RepVector w = find_representation(epit, ec2);
        cert.witnesses.emplace_back("u_unit", u);
        cert.witnesses.emplace_back("w_target", w);
        Rat bw = epit.polar(u.coords, w.coords);
        Rat m = ec2 - bw * bw; // value of w orthogonalized against u
        m.canonicalize();
        if (m != 0) {
            cert.d2 = squarefree_class(-m);
        } else if (is_square(ec2)) {
            // w proportional to u: pick the plane through u and the first
            // complement direction instead, so <<d2>> still embeds in e*pi_tilde
            auto [comp, basis] = orthogonal_complement(epit, u.coords);
            (void)basis;
            cert.d2 = squarefree_class(-comp.coeff(0));
        } else if (is_hyperbolic(pres)) {
            // e*pi_tilde isotropic: sigma hyperbolic over Q and any extension
            cert.d2 = squarefree_class(-ec2);
        } else {
            throw InternalError("decompose_multiplier: residual zero without hyperbolicity");
        }
        cert.witnesses.emplace_back("ec2_in_d2", find_representation(binary_for(cert.d2), ec2));
    }

    VerificationReport report = verify_certificate(pres, cert);
    cert.checks.clear();
    for (const auto& r : report.results) cert.checks.emplace_back(r.name, r.passed);
    if (!report.overall)
        throw InternalError("decompose_multiplier: freshly built certificate failed verification");
    return cert;
}

namespace {

struct Checker {
    VerificationReport report;
    bool claims_ok = true;

    void add(const std::string& name, const std::string& statement, bool passed,
             const std::string& diag = "") {
        report.results.push_back({name, statement, passed, passed ? "" : diag});
    }
};

// evaluate a recorded witness against its form and claimed value
bool vector_matches(const QuadraticForm& f, const RepVector& v, const Rat& claimed) {
    if (v.coords.size() != f.dim()) return false;
    return v.value == claimed && f.evaluate(v.coords) == claimed;
}

} // namespace

VerificationReport verify_certificate(const DecomposablePresentation& pres,
                                      const WitnessCertificate& cert) {
    // The certificate embeds its presentation; it must be the same one.
    if (cert.kind != pres.kind() || cert.psi != pres.psi() ||
        cert.rho.slots() != pres.rho().slots() || cert.a != pres.a() || cert.b != pres.b())
        throw MalformedCertificate("certificate was issued for a different presentation");
    if (cert.branch != pres.branch())
        throw MalformedCertificate("branch does not match the presentation");
    if (cert.c == 0 || cert.c1 == 0 || cert.c2 == 0)
        throw MalformedCertificate("zero field among c, c1, c2");

    const DerivedForms df = derived_forms(pres);
    Checker ck;
    const Rat d1_rep(cert.d1.representative());
    const Rat d2_rep(cert.d2.representative());
    QuadraticForm bin1 = binary_for(cert.d1), bin2 = binary_for(cert.d2);

    Rat c1c2 = cert.c1 * cert.c2;
    c1c2.canonicalize();
    ck.add("c_square_product", "c = c1*c2 modulo squares",
           same_square_class(cert.c, c1c2), "c/(c1*c2) is not a square");

    auto need = [&](const std::string& name) -> const RepVector& {
        const RepVector* v = cert.witness(name);
        if (!v) throw MalformedCertificate("missing witness '" + name + "'");
        return *v;
    };

    if (cert.branch == Branch::OrthoDeg0Mod4) {
        if (!cert.e) throw MalformedCertificate("main branch certificate is missing e");
        const Rat& e = *cert.e;
        if (e == 0) throw MalformedCertificate("e must be nonzero");
        const QuadraticForm& pi = df.pi.expansion();
        QuadraticForm rho_pure = pure_part(pres.rho());
        QuadraticForm epit = scale(e, df.pi_tilde);
        Rat ec1 = cert.c1 / e;
        ec1.canonicalize();
        Rat ec2 = e * cert.c2;
        ec2.canonicalize();

        ck.add("c1_in_D_pi", "recorded vector evaluates in pi to c1",
               vector_matches(pi, need("factor_pi"), cert.c1), "pi(coords) != c1");
        ck.add("c2_in_D_pi_tilde", "recorded vector evaluates in pi_tilde to c2",
               vector_matches(df.pi_tilde, need("factor_pi_tilde"), cert.c2),
               "pi_tilde(coords) != c2");
        ck.add("e_in_D_rho_pure", "e is a represented value of rho'",
               vector_matches(rho_pure, need("e_in_rho_pure"), e) && represents(rho_pure, e),
               "rho'(coords) != e or e not represented");
        ck.add("c1e_in_D_d1", "c1/e lies in D<<d1>>",
               vector_matches(bin1, need("c1e_in_d1"), ec1) && represents(bin1, ec1),
               "<1,-d1>(coords) != c1/e or value not represented");
        ck.add("pi_hyperbolic_over_sqrt_d1", "pi becomes hyperbolic over Q(sqrt(d1))",
               hyperbolic_over_sqrt(df.pi, cert.d1), "pi stays non-hyperbolic");
        ck.add("u_unit_in_e_pi_tilde", "recorded vector evaluates in e*pi_tilde to 1",
               vector_matches(epit, need("u_unit"), Rat(1)), "e*pi_tilde(coords) != 1");
        ck.add("w_target_in_e_pi_tilde", "recorded vector evaluates in e*pi_tilde to e*c2",
               vector_matches(epit, need("w_target"), ec2), "e*pi_tilde(coords) != e*c2");
        ck.add("ec2_in_D_d2", "e*c2 lies in D<<d2>>",
               vector_matches(bin2, need("ec2_in_d2"), ec2) && represents(bin2, ec2),
               "<1,-d2>(coords) != e*c2 or value not represented");
        ck.add("d2_subform_or_hyperbolic",
               "<<d2>> embeds into e*pi_tilde, or sigma is already hyperbolic over Q",
               is_subform(bin2, epit) || is_hyperbolic(pres),
               "neither the subform criterion nor hyperbolicity holds");
    } else {
        ck.add("c_in_D_d1", "c lies in D<<d1>>",
               vector_matches(bin1, need("c_in_d1"), cert.c) && represents(bin1, cert.c),
               "<1,-d1>(coords) != c or value not represented");
        ck.add("unit_in_D_d2", "1 lies in D<<d2>>",
               vector_matches(bin2, need("unit_in_d2"), Rat(1)) && represents(bin2, Rat(1)),
               "<1,-d2>(coords) != 1");
        if (cert.branch == Branch::OrthoDeg2Mod4) {
            ck.add("d1_is_disc", "d1 is the discriminant class of the involution",
                   cert.d1 == squarefree_class(pres.a()) && cert.d2 == cert.d1,
                   "d1/d2 do not match disc(tau)");
        } else {
            ck.add("d1_equals_d2", "the symplectic branch takes d1 = d2",
                   cert.d1 == cert.d2, "d1 != d2");
        }
        if (!same_square_class(cert.c1, cert.c) || !same_square_class(cert.c2, Rat(1)))
            ck.add("trivial_split", "c1 ~ c and c2 ~ 1 in the non-main branches", false,
                   "c1/c2 are not the trivial split");
    }
    ck.add("sigma_hyperbolic_over_sqrt_d1", "sigma is hyperbolic over Q(sqrt(d1))",
           is_hyperbolic_over_sqrt(pres, cert.d1), "sigma stays non-hyperbolic over Q(sqrt(d1))");
    ck.add("sigma_hyperbolic_over_sqrt_d2", "sigma is hyperbolic over Q(sqrt(d2))",
           is_hyperbolic_over_sqrt(pres, cert.d2), "sigma stays non-hyperbolic over Q(sqrt(d2))");

    // Recorded check lines must name known checks and claim pass.
    for (const auto& [name, passed] : cert.checks) {
        bool known = false;
        for (const auto& r : ck.report.results)
            if (r.name == name) { known = true; break; }
        if (!known) throw MalformedCertificate("unknown check '" + name + "'");
        if (!passed)
            ck.add("recorded_" + name, "recorded check claims pass", false,
                   "certificate itself records a failing check");
    }

    ck.report.overall = true;
    for (const auto& r : ck.report.results) ck.report.overall &= r.passed;
    return ck.report;
}

std::string certificate_text(const WitnessCertificate& cert) {
    std::ostringstream os;
    os << "branch=" << branch_name(cert.branch) << "\n";
    os << "pres.kind=" << (cert.kind == InvolutionKind::Orthogonal ? "orthogonal" : "symplectic")
       << "\n";
    os << "pres.psi=" << form_literal(cert.psi) << "\n";
    os << "pres.rho=" << pfister_literal(cert.rho) << "\n";
    os << "pres.a=" << cert.a << "\n";
    os << "pres.b=" << cert.b << "\n";
    os << "c=" << cert.c << "\n";
    os << "c1=" << cert.c1 << "\n";
    os << "c2=" << cert.c2 << "\n";
    if (cert.e) os << "e=" << *cert.e << "\n";
    os << "d1=" << cert.d1 << "\n";
    os << "d2=" << cert.d2 << "\n";
    for (const auto& [name, v] : cert.witnesses) {
        os << "witness." << name << ".coords=" << coords_text(v.coords) << "\n";
        os << "witness." << name << ".value=" << v.value << "\n";
    }
    for (const auto& [name, passed] : cert.checks)
        os << "check." << name << "=" << (passed ? "pass" : "fail") << "\n";
    return os.str();
}

WitnessCertificate parse_certificate(const std::string& text) {
    WitnessCertificate cert;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    bool have_branch = false, have_c = false, have_c1 = false, have_c2 = false;
    bool have_d1 = false, have_d2 = false, have_kind = false, have_psi = false;
    bool have_rho = false, have_a = false, have_b = false;
    std::string pending_witness;
    std::optional<std::vector<Rat>> pending_coords;
    auto fail = [&](const std::string& msg) {
        throw MalformedCertificate("certificate line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::string stripped;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) stripped += ch;
        if (stripped.empty()) continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos) fail("expected key=value");
        std::string key = stripped.substr(0, eq);
        std::string value = stripped.substr(eq + 1);
        try {
            if (key == "branch") {
                if (value == "S")
                    cert.branch = Branch::Symplectic;
                else if (value == "O2")
                    cert.branch = Branch::OrthoDeg2Mod4;
                else if (value == "O0")
                    cert.branch = Branch::OrthoDeg0Mod4;
                else
                    fail("unknown branch '" + value + "'");
                have_branch = true;
            } else if (key == "pres.kind") {
                if (value == "orthogonal")
                    cert.kind = InvolutionKind::Orthogonal;
                else if (value == "symplectic")
                    cert.kind = InvolutionKind::Symplectic;
                else
                    fail("unknown kind");
                have_kind = true;
            } else if (key == "pres.psi") {
                cert.psi = parse_form(value);
                have_psi = true;
            } else if (key == "pres.rho") {
                cert.rho = parse_pfister(value);
                have_rho = true;
            } else if (key == "pres.a") {
                cert.a = parse_rational(value);
                have_a = true;
            } else if (key == "pres.b") {
                cert.b = parse_rational(value);
                have_b = true;
            } else if (key == "c") {
                cert.c = parse_rational(value);
                have_c = true;
            } else if (key == "c1") {
                cert.c1 = parse_rational(value);
                have_c1 = true;
            } else if (key == "c2") {
                cert.c2 = parse_rational(value);
                have_c2 = true;
            } else if (key == "e") {
                cert.e = parse_rational(value);
            } else if (key == "d1") {
                cert.d1 = squarefree_class(parse_rational(value));
                have_d1 = true;
            } else if (key == "d2") {
                cert.d2 = squarefree_class(parse_rational(value));
                have_d2 = true;
            } else if (key.rfind("witness.", 0) == 0) {
                std::string rest = key.substr(8);
                size_t dot = rest.rfind('.');
                if (dot == std::string::npos) fail("witness key must end in .coords or .value");
                std::string name = rest.substr(0, dot);
                std::string field = rest.substr(dot + 1);
                if (field == "coords") {
                    if (pending_coords) fail("witness coords without value");
                    pending_witness = name;
                    pending_coords = parse_vector(value);
                } else if (field == "value") {
                    if (!pending_coords || pending_witness != name)
                        fail("witness value without matching coords");
                    RepVector v{*pending_coords, parse_rational(value)};
                    cert.witnesses.emplace_back(name, std::move(v));
                    pending_coords.reset();
                } else {
                    fail("unknown witness field '" + field + "'");
                }
            } else if (key.rfind("check.", 0) == 0) {
                std::string name = key.substr(6);
                if (value == "pass")
                    cert.checks.emplace_back(name, true);
                else if (value == "fail")
                    cert.checks.emplace_back(name, false);
                else
                    fail("check value must be pass or fail");
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            fail(e.what());
        } catch (const DegenerateForm& e) {
            fail(e.what());
        }
    }
    if (pending_coords) throw MalformedCertificate("dangling witness coords");
    if (!(have_branch && have_kind && have_psi && have_rho && have_a && have_b && have_c &&
          have_c1 && have_c2 && have_d1 && have_d2))
        throw MalformedCertificate("certificate is missing required fields");
    return cert;
}

} // namespace simfac
