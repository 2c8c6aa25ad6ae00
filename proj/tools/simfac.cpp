// simfac: similarity factors of totally decomposable algebras with
// involution over Q, with constructive witness pairs and certificate
// verification. Exact arithmetic throughout.
//
// Exit codes: 0 success / affirmative decision, 1 negative decision,
// 2 input error, 3 search exhausted or undecided sub-step.

#include <fstream>
#include <iostream>
#include <sstream>

#include "simfac/errors.hpp"
#include "simfac/oracle.hpp"
#include "simfac/witness.hpp"

using namespace simfac;

namespace {

struct Args {
    std::vector<std::string> positional;
    bool json = false;
    uint64_t seed = 0;
    unsigned count = 50;
    unsigned height = 30;
    std::optional<std::string> sqrt_d;
};

Args parse_args(int argc, char** argv) {
    Args out;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto value = [&](const char* flag) {
            if (i + 1 >= argc) throw ParseError(std::string(flag) + " requires a value");
            return std::string(argv[++i]);
        };
        if (a == "--json")
            out.json = true;
        else if (a == "--seed")
            out.seed = std::stoull(value("--seed"));
        else if (a == "--count")
            out.count = static_cast<unsigned>(std::stoul(value("--count")));
        else if (a == "--height")
            out.height = static_cast<unsigned>(std::stoul(value("--height")));
        else if (a == "--sqrt")
            out.sqrt_d = value("--sqrt");
        else if (a.rfind("--", 0) == 0)
            throw ParseError("unknown flag '" + a + "'");
        else
            out.positional.push_back(a);
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join_coords(const std::vector<Rat>& coords) {
    std::ostringstream os;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    return os.str();
}

const std::string kUsage =
    "usage: simfac <command> [args]\n"
    "  form invariants <form>\n"
    "  form isotropy <form>\n"
    "  form witt <form>\n"
    "  form isometric <form> <form>\n"
    "  form represents <form> <c>\n"
    "  form gfactor <form> <c>\n"
    "  alg multiplier <pres-file> <c>\n"
    "  alg hyperbolic <pres-file> [--sqrt d]\n"
    "  alg witness <pres-file> <c> [--json]\n"
    "  alg verify <pres-file> <cert-file|->\n"
    "  selftest [--seed S] [--count N] [--height H]\n"
    "forms are comma-separated rationals like \"1,-2,3/5\"; presentations and\n"
    "certificates are key=value files; '-' reads a certificate from stdin\n";

int bool_result(bool value, const std::string& key, const std::string& yes,
                const std::string& no, bool json) {
    if (json)
        std::cout << key << "=" << (value ? "true" : "false") << "\n";
    else
        std::cout << (value ? yes : no) << "\n";
    return value ? 0 : 1;
}

int cmd_form(const Args& args) {
    if (args.positional.size() < 3) throw ParseError("form: missing arguments\n" + kUsage);
    const std::string& sub = args.positional[1];
    QuadraticForm f = parse_form(args.positional[2]);
    if (sub == "invariants") {
        FormInvariants inv = invariants(f);
        std::cout << "dim=" << inv.dim << "\n";
        std::cout << "det=" << inv.det << "\n";
        std::cout << "disc=" << inv.disc << "\n";
        std::cout << "signature=(" << inv.positive << "," << inv.negative << ")\n";
        for (const auto& [v, h] : inv.hasse) std::cout << "hasse[" << v << "]=" << h << "\n";
        return 0;
    }
    if (sub == "isotropy")
        return bool_result(is_isotropic(f), "isotropic", "isotropic", "anisotropic", args.json);
    if (sub == "witt") {
        WittDecomposition wd = witt_decompose(f);
        std::cout << "witt_index=" << wd.witt_index << "\n";
        std::cout << "anisotropic=" << form_literal(wd.anisotropic) << "\n";
        return 0;
    }
    if (sub == "isometric") {
        if (args.positional.size() < 4) throw ParseError("form isometric: need two forms");
        QuadraticForm g = parse_form(args.positional[3]);
        return bool_result(is_isometric(f, g), "isometric", "isometric", "not_isometric",
                           args.json);
    }
    if (sub == "represents") {
        if (args.positional.size() < 4) throw ParseError("form represents: need a value");
        Rat c = parse_rational(args.positional[3]);
        bool yes = represents(f, c);
        if (!yes) return bool_result(false, "represented", "", "not_represented", args.json);
        RepVector v = find_representation(f, c);
        if (args.json) {
            std::cout << "represented=true\n";
            std::cout << "coords=" << join_coords(v.coords) << "\n";
        } else {
            std::cout << "represented coords=" << join_coords(v.coords) << "\n";
        }
        return 0;
    }
    if (sub == "gfactor") {
        if (args.positional.size() < 4) throw ParseError("form gfactor: need a value");
        Rat c = parse_rational(args.positional[3]);
        return bool_result(is_similarity_factor(f, c), "gfactor", "similarity_factor",
                           "not_similarity_factor", args.json);
    }
    throw ParseError("unknown form subcommand '" + sub + "'\n" + kUsage);
}

int cmd_alg(const Args& args) {
    if (args.positional.size() < 3) throw ParseError("alg: missing arguments\n" + kUsage);
    const std::string& sub = args.positional[1];
    DecomposablePresentation pres = parse_presentation(read_input(args.positional[2]));
    if (sub == "multiplier") {
        if (args.positional.size() < 4) throw ParseError("alg multiplier: need a value");
        Rat c = parse_rational(args.positional[3]);
        return bool_result(is_multiplier(pres, c), "multiplier", "multiplier", "not_multiplier",
                           args.json);
    }
    if (sub == "hyperbolic") {
        bool yes;
        if (args.sqrt_d) {
            SquareClass d = squarefree_class(parse_rational(*args.sqrt_d));
            yes = is_hyperbolic_over_sqrt(pres, d);
        } else {
            yes = is_hyperbolic(pres);
        }
        return bool_result(yes, "hyperbolic", "hyperbolic", "not_hyperbolic", args.json);
    }
    if (sub == "witness") {
        if (args.positional.size() < 4) throw ParseError("alg witness: need a value");
        Rat c = parse_rational(args.positional[3]);
        if (!is_multiplier(pres, c)) {
            std::cout << (args.json ? "multiplier=false\n" : "not_multiplier\n");
            return 1;
        }
        WitnessCertificate cert = decompose_multiplier(pres, c);
        if (args.json) {
            std::cout << certificate_text(cert);
        } else {
            std::cout << "branch=" << branch_name(cert.branch) << "\n";
            std::cout << "c1=" << cert.c1 << "\n";
            std::cout << "c2=" << cert.c2 << "\n";
            if (cert.e) std::cout << "e=" << *cert.e << "\n";
            std::cout << "d1=" << cert.d1 << "\n";
            std::cout << "d2=" << cert.d2 << "\n";
            size_t passed = 0;
            for (const auto& [name, ok] : cert.checks) passed += ok ? 1 : 0;
            std::cout << "checks=" << passed << "/" << cert.checks.size() << "\n";
        }
        return 0;
    }
    if (sub == "verify") {
        if (args.positional.size() < 4) throw ParseError("alg verify: need a certificate");
        WitnessCertificate cert = parse_certificate(read_input(args.positional[3]));
        VerificationReport report = verify_certificate(pres, cert);
        for (const auto& r : report.results) {
            std::cout << "check." << r.name << "=" << (r.passed ? "pass" : "fail");
            if (!r.passed) std::cout << "  # " << r.diagnostic;
            std::cout << "\n";
        }
        std::cout << "verdict=" << (report.overall ? "pass" : "fail") << "\n";
        return report.overall ? 0 : 1;
    }
    throw ParseError("unknown alg subcommand '" + sub + "'\n" + kUsage);
}

int cmd_selftest(const Args& args) {
    // differential corpus: exact isotropy decisions against the brute oracle
    unsigned agree = 0, witnessed = 0;
    const unsigned brute_height = 60;
    for (unsigned i = 0; i < args.count; ++i) {
        uint64_t seed = args.seed * 1000003ull + i;
        unsigned dim = 1 + static_cast<unsigned>(seed % 4);
        QuadraticForm f = oracle::random_form(seed, dim, args.height);
        bool exact = is_isotropic(f);
        auto brute = oracle::brute_search(f, Rat(0), brute_height);
        bool ok = true;
        if (brute.has_value() && !exact) ok = false; // brute zero must imply isotropy
        if (exact) {
            RepVector v = find_representation(f, Rat(0));
            if (f.evaluate(v.coords) != 0) ok = false;
            ++witnessed;
        }
        if (ok) ++agree;
    }
    std::cout << "forms_checked=" << args.count << "\n";
    std::cout << "forms_agree=" << agree << "\n";
    std::cout << "isotropy_witnesses=" << witnessed << "\n";

    // witness round trip on seeded presentations
    unsigned wit_count = std::max(1u, args.count / 5), wit_pass = 0;
    for (unsigned i = 0; i < wit_count; ++i) {
        oracle::InstanceSpec spec;
        spec.seed = args.seed * 7919ull + i;
        spec.coeff_height = 10;
        spec.force_c_in_g = true;
        oracle::Instance inst = oracle::random_instance(spec);
        WitnessCertificate cert = decompose_multiplier(inst.pres, inst.c);
        WitnessCertificate parsed = parse_certificate(certificate_text(cert));
        VerificationReport report = verify_certificate(inst.pres, parsed);
        if (report.overall && certificate_text(parsed) == certificate_text(cert)) ++wit_pass;
    }
    std::cout << "witness_checked=" << wit_count << "\n";
    std::cout << "witness_pass=" << wit_pass << "\n";
    bool all = agree == args.count && wit_pass == wit_count;
    std::cout << "result=" << (all ? "pass" : "fail") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        Args args = parse_args(argc, argv);
        if (args.positional.empty()) {
            std::cerr << kUsage;
            return 2;
        }
        const std::string& cmd = args.positional[0];
        if (cmd == "form") return cmd_form(args);
        if (cmd == "alg") return cmd_alg(args);
        if (cmd == "selftest") return cmd_selftest(args);
        throw ParseError("unknown command '" + cmd + "'\n" + kUsage);
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 3;
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const GenerationExhausted& e) {
        std::cerr << "generation exhausted: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
