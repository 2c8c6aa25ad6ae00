#include "simfac/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "simfac/errors.hpp"

namespace simfac {
namespace oracle {

namespace {

// Clear denominators once: integer coefficients C with C = L * coeffs and
// the matching integer target L * t (when that is not an integer there is
// nothing to scan).
struct ClearedForm {
    std::vector<Int> coeffs;
    Int target;
    bool feasible = true;
};

ClearedForm clear_denominators(const QuadraticForm& f, const Rat& t) {
    Int lcm = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ClearedForm out;
    for (const auto& c : f.coeffs()) {
        Rat scaled = c * Rat(lcm);
        scaled.canonicalize();
        out.coeffs.push_back(scaled.get_num());
    }
    Rat st = t * Rat(lcm);
    st.canonicalize();
    if (st.get_den() != 1) {
        out.feasible = false;
    } else {
        out.target = st.get_num();
    }
    return out;
}

Int gcd_all(const std::vector<long>& v) {
    Int g = 0;
    for (long x : v) {
        Int ax = x < 0 ? Int(-x) : Int(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

} // namespace

std::optional<RepVector> brute_search(const QuadraticForm& f, const Rat& target,
                                      unsigned height) {
    if (height < 1) throw Error("brute_search: height must be >= 1");
    const size_t n = f.dim();
    if (n == 0) return std::nullopt;
    ClearedForm cf = clear_denominators(f, target);
    if (!cf.feasible) return std::nullopt;

    // Coordinates enter only through their squares, so scanning the
    // nonnegative orthant is exhaustive. Right block is kept small and
    // grouped by value; the left block is walked in lexicographic order, so
    // the first primitive hit is the lexicographic minimum.
    const size_t right = n == 1 ? 0 : std::min<size_t>(2, n - 1);
    const size_t left = n - right;
    const long h = static_cast<long>(height);

    std::map<Int, std::vector<std::vector<long>>> right_values;
    {
        std::vector<long> y(right, 0);
        bool done = right == 0;
        if (right == 0) right_values[Int(0)].push_back({});
        while (!done) {
            Int val = 0;
            for (size_t i = 0; i < right; ++i)
                val += cf.coeffs[left + i] * Int(y[i]) * Int(y[i]);
            right_values[val].push_back(y);
            size_t k = right;
            while (k > 0) {
                if (y[k - 1] < h) {
                    ++y[k - 1];
                    std::fill(y.begin() + k, y.end(), 0);
                    break;
                }
                --k;
            }
            if (k == 0) done = true;
        }
    }

    std::vector<long> x(left, 0);
    while (true) {
        Int val = 0;
        for (size_t i = 0; i < left; ++i) val += cf.coeffs[i] * Int(x[i]) * Int(x[i]);
        Int needed = cf.target - val;
        auto it = right_values.find(needed);
        if (it != right_values.end()) {
            for (const auto& y : it->second) {
                std::vector<long> joint = x;
                joint.insert(joint.end(), y.begin(), y.end());
                Int g = gcd_all(joint);
                if (g != 1) continue; // primitive vectors only
                RepVector out;
                out.coords.reserve(n);
                for (long xi : joint) out.coords.emplace_back(xi);
                out.value = target;
                if (f.evaluate(out.coords) != target)
                    throw InternalError("brute_search: verification failed");
                return out;
            }
        }
        size_t k = left;
        while (k > 0) {
            if (x[k - 1] < h) {
                ++x[k - 1];
                std::fill(x.begin() + k, x.end(), 0);
                break;
            }
            --k;
        }
        if (k == 0) break;
    }
    return std::nullopt;
}

bool brute_isotropic_over_sqrt(const QuadraticForm& f, const SquareClass& d, unsigned height) {
    // zero of f(u + v sqrt(d)): f(u) + d f(v) = 0 and polar(u, v) = 0
    const size_t n = f.dim();
    const long h = static_cast<long>(height);
    const Rat dr(d.representative());
    std::vector<std::vector<Rat>> box;
    std::vector<long> y(n, -h);
    while (true) {
        std::vector<Rat> v;
        v.reserve(n);
        for (long yi : y) v.emplace_back(yi);
        box.push_back(std::move(v));
        size_t k = n;
        while (k > 0) {
            if (y[k - 1] < h) {
                ++y[k - 1];
                std::fill(y.begin() + k, y.end(), -h);
                break;
            }
            --k;
        }
        if (k == 0) break;
    }
    std::map<Rat, std::vector<size_t>> by_value;
    for (size_t i = 0; i < box.size(); ++i) by_value[f.evaluate(box[i])].push_back(i);
    for (const auto& u : box) {
        Rat needed = -f.evaluate(u) / dr;
        needed.canonicalize();
        auto it = by_value.find(needed);
        if (it == by_value.end()) continue;
        for (size_t idx : it->second) {
            const auto& v = box[idx];
            bool u_zero = std::all_of(u.begin(), u.end(), [](const Rat& q) { return q == 0; });
            bool v_zero = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
            if (u_zero && v_zero) continue;
            if (f.polar(u, v) == 0) return true;
        }
    }
    return false;
}

namespace {

// Engine output reduced by hand: uniform_int_distribution is not portable.
long rand_range(std::mt19937_64& eng, long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
}

Rat rand_nonzero(std::mt19937_64& eng, long height) {
    while (true) {
        long v = rand_range(eng, -height, height);
        if (v != 0) return Rat(v);
    }
}

Rat nonzero_value(std::mt19937_64& eng, const QuadraticForm& f) {
    for (int tries = 0; tries < 100; ++tries) {
        std::vector<Rat> x;
        x.reserve(f.dim());
        for (size_t i = 0; i < f.dim(); ++i) x.emplace_back(rand_range(eng, 0, 3));
        Rat v = f.evaluate(x);
        if (v != 0) return v;
    }
    return f.coeff(0); // unit vector value
}

} // namespace

QuadraticForm random_form(uint64_t seed, unsigned dim, unsigned height) {
    std::mt19937_64 eng(seed);
    std::vector<Rat> c;
    c.reserve(dim);
    for (unsigned i = 0; i < dim; ++i) c.push_back(rand_nonzero(eng, height));
    return QuadraticForm(std::move(c));
}

Instance random_instance(const InstanceSpec& spec) {
    std::mt19937_64 eng(spec.seed);
    const long h = spec.coeff_height;
    // branch: 0 = symplectic, 1 = ortho deg 2 mod 4, 2 = ortho deg 0 mod 4
    unsigned which = static_cast<unsigned>(rand_range(eng, 0, 2));
    InvolutionKind kind = which == 0 ? InvolutionKind::Symplectic : InvolutionKind::Orthogonal;
    unsigned slots;
    if (which == 1)
        slots = 0;
    else if (which == 2)
        slots = static_cast<unsigned>(rand_range(eng, 1, spec.max_rho_slots));
    else
        slots = static_cast<unsigned>(rand_range(eng, 0, spec.max_rho_slots));
    std::vector<Rat> slot_vals;
    for (unsigned i = 0; i < slots; ++i) slot_vals.push_back(rand_nonzero(eng, h));
    PfisterForm rho(slot_vals);
    QuadraticForm psi;
    if (rand_range(eng, 0, 1) == 0) {
        psi = QuadraticForm({Rat(1)});
    } else {
        std::vector<Rat> pc;
        for (int i = 0; i < 3; ++i) pc.push_back(rand_nonzero(eng, h));
        psi = QuadraticForm(std::move(pc));
    }
    Rat a = rand_nonzero(eng, h), b = rand_nonzero(eng, h);
    DecomposablePresentation pres(psi, rho, a, b, kind);
    DerivedForms df = derived_forms(pres);

    Instance out{pres, Rat(0), false};
    if (spec.force_c_in_g) {
        Rat c;
        switch (pres.branch()) {
            case Branch::Symplectic:
                c = nonzero_value(eng, df.rho_nu.expansion());
                break;
            case Branch::OrthoDeg2Mod4: {
                QuadraticForm norm({Rat(1), -a});
                c = nonzero_value(eng, norm) * nonzero_value(eng, norm);
                break;
            }
            case Branch::OrthoDeg0Mod4:
                c = nonzero_value(eng, df.pi.expansion()) * nonzero_value(eng, df.pi_tilde);
                break;
        }
        c.canonicalize();
        out.c = c;
        out.c_in_g = true;
        return out;
    }
    for (int tries = 0; tries < 500; ++tries) {
        Rat c = rand_nonzero(eng, h);
        if (!is_multiplier(pres, c)) {
            out.c = c;
            out.c_in_g = false;
            return out;
        }
    }
    throw GenerationExhausted("random_instance: rejection sampling found no non-multiplier");
}

} // namespace oracle
} // namespace simfac
