#ifndef SIMFAC_WITNESS_HPP
#define SIMFAC_WITNESS_HPP

#include <string>
#include <utility>

#include "simfac/involution.hpp"

namespace simfac {

// Auditable output of the main decomposition: c = c1 * c2 (mod squares)
// with membership witnesses and the pair (d1, d2) making sigma hyperbolic
// over both quadratic extensions. Self-contained: embeds the presentation,
// so verification never re-runs derivation heuristics.
struct WitnessCertificate {
    Branch branch = Branch::OrthoDeg0Mod4;
    InvolutionKind kind = InvolutionKind::Orthogonal;
    QuadraticForm psi;
    PfisterForm rho;
    Rat a, b;

    Rat c, c1, c2;
    std::optional<Rat> e; // main (OrthoDeg0Mod4) branch only
    SquareClass d1, d2;

    std::vector<std::pair<std::string, RepVector>> witnesses; // named, ordered
    std::vector<std::pair<std::string, bool>> checks;         // named, ordered

    const RepVector* witness(const std::string& name) const;
};

struct CheckResult {
    std::string name;
    std::string statement;
    bool passed = false;
    std::string diagnostic;
};

struct VerificationReport {
    bool overall = false;
    std::vector<CheckResult> results;
};

// Theorem 4.1, constructively. Pre: is_multiplier(pres, c); otherwise
// NotAMultiplier. The returned certificate verifies; the (d1, d2) pair is
// the first one found under the deterministic search order (the theorem
// asserts existence, not uniqueness).
WitnessCertificate decompose_multiplier(const DecomposablePresentation& pres, const Rat& c);

// Re-derives every check from scratch using only the exact decision layer
// and evaluation of the recorded witness vectors; never runs a constructive
// solver. Throws MalformedCertificate on missing fields, branch mismatch,
// or a certificate for a different presentation.
VerificationReport verify_certificate(const DecomposablePresentation& pres,
                                      const WitnessCertificate& cert);

// Stable line-oriented serialization (field order fixed); round-trips
// bit-exactly through parse_certificate.
std::string certificate_text(const WitnessCertificate& cert);
WitnessCertificate parse_certificate(const std::string& text);

} // namespace simfac

#endif
