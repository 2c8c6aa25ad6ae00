#include "simfac/rational.hpp"

#include <mutex>
#include <unordered_map>

#include "simfac/errors.hpp"

namespace simfac {

namespace {

constexpr unsigned long kTrialBound = 100000;

Int pollard_rho(const Int& n) {
    // Brent's cycle-finding variant with deterministic parameters.
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            x = (x * x + c) % n;
            ++lam;
            Int diff = x - saved_x;
            if (diff < 0) diff = -diff;
            if (diff == 0) break; // cycle without factor, retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::mutex g_factor_mutex;
std::unordered_map<std::string, std::map<Int, unsigned>> g_factor_cache;

} // namespace

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, unsigned> factorize(const Int& n) {
    if (n <= 0) throw ZeroInput("factorize requires a positive integer");
    {
        std::lock_guard<std::mutex> lock(g_factor_mutex);
        auto it = g_factor_cache.find(n.get_str());
        if (it != g_factor_cache.end()) return it->second;
    }
    std::map<Int, unsigned> out;
    Int m = n;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    // 6k +/- 1 wheel
    for (unsigned long p = 7; p <= kTrialBound && m > 1; p += 6) {
        for (unsigned long q : {p, p + 4}) {
            if (Int(q) * Int(q) > m) break;
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                ++out[Int(q)];
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
            }
        }
        if (Int(p) * Int(p) > m) break;
    }
    if (m > 1) {
        if (Int(kTrialBound) * Int(kTrialBound) > m || is_prime(m))
            ++out[m];
        else
            factor_into(m, out);
    }
    {
        std::lock_guard<std::mutex> lock(g_factor_mutex);
        if (g_factor_cache.size() < 200000) g_factor_cache.emplace(n.get_str(), out);
    }
    return out;
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) throw ZeroInput("valuation of zero");
    long v = 0;
    Int num = q.get_num(), den = q.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        --v;
    }
    return v;
}

Rat unit_part(const Rat& q, const Int& p) {
    long v = valuation(q, p);
    Rat pw;
    Int abs_pow;
    mpz_pow_ui(abs_pow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    if (v >= 0)
        pw = Rat(1, abs_pow);
    else
        pw = Rat(abs_pow, 1);
    Rat u = q * pw;
    u.canonicalize();
    return u;
}

int legendre_unit(const Rat& u, const Int& p) {
    // (num/den | p) = (num*den | p) since den^2 divides out.
    Int nd = u.get_num() * u.get_den();
    return mpz_legendre(nd.get_mpz_t(), p.get_mpz_t());
}

int mod8_unit(const Rat& u) {
    // den odd => den^{-1} = den mod 8.
    Int nd = u.get_num() * u.get_den();
    Int r = nd % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r.get_ui());
}

bool is_square(const Rat& q) {
    if (q <= 0) return q == 0;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

Rat sqrt_exact(const Rat& q) {
    if (!is_square(q)) throw Error("sqrt_exact of a non-square");
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(n, d);
}

Int sqrt_mod_prime(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != 1)
        throw Error("sqrt_mod_prime: not a quadratic residue");
    auto powmod = [&](Int base, Int exp) {
        Int out;
        mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        return out;
    };
    if (p % 4 == 3) return powmod(r, (p + 1) / 4);
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m(static_cast<unsigned long>(s));
    Int c = powmod(z, q);
    Int t = powmod(r, q);
    Int x = powmod(r, (q + 1) / 2);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - Int(i) - 1; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = Int(i);
    }
    return x;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0) throw ZeroInput("squarefree_decompose of zero");
    Int a = n < 0 ? Int(-n) : n;
    Int sf = n < 0 ? Int(-1) : Int(1);
    Int sq = 1;
    for (const auto& [p, e] : factorize(a)) {
        if (e % 2 == 1) sf *= p;
        Int half;
        mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
        sq *= half;
    }
    return {sf, sq};
}

std::string to_string(const Rat& q) {
    return q.get_str();
}

Rat parse_rational(const std::string& s) {
    auto bad = [&]() { throw ParseError("invalid rational literal '" + s + "'"); };
    if (s.empty()) bad();
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) bad();
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) {
        if (s[i] != '/') bad();
        ++i;
        if (i >= s.size()) bad();
        size_t den_start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i != s.size() || i == den_start) bad();
    }
    Rat q;
    const std::string body = s[0] == '+' ? s.substr(1) : s;
    if (q.set_str(body, 10) != 0) bad();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace simfac
