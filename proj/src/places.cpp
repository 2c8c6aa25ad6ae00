#include "simfac/places.hpp"

#include <ostream>

#include "simfac/errors.hpp"

namespace simfac {

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw Error("Place::finite requires a prime");
    return Place(p, false);
}

std::ostream& operator<<(std::ostream& os, const Place& v) {
    if (v.is_real()) return os << "oo";
    return os << v.prime();
}

std::set<Place> bad_places(const std::vector<Rat>& values) {
    std::set<Place> out;
    out.insert(Place::real());
    out.insert(Place::finite(2));
    for (const auto& q : values) {
        if (q == 0) throw ZeroInput("bad_places: zero value");
        Int nd = abs(q.get_num() * q.get_den());
        for (const auto& [p, e] : factorize(nd)) {
            (void)e;
            if (p != 2) out.insert(Place::finite(p));
        }
    }
    return out;
}

namespace {

int eps4(int r8) { return (r8 % 4 == 3) ? 1 : 0; }        // (u-1)/2 mod 2
int omega8(int r8) { return (r8 == 3 || r8 == 5) ? 1 : 0; } // (u^2-1)/8 mod 2

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroInput("hilbert_symbol of zero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.prime();
    long alpha = valuation(a, p);
    long beta = valuation(b, p);
    Rat u = unit_part(a, p);
    Rat w = unit_part(b, p);
    if (p == 2) {
        int ru = mod8_unit(u), rw = mod8_unit(w);
        long e = static_cast<long>(eps4(ru)) * eps4(rw) + alpha * omega8(rw) + beta * omega8(ru);
        return (e % 2 == 0) ? 1 : -1;
    }
    int sym = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0)) {
        // (-1)^{alpha beta (p-1)/2}
        Int e = (p - 1) / 2;
        if (e % 2 != 0) sym = -sym;
    }
    if (beta % 2 != 0) sym *= legendre_unit(u, p);
    if (alpha % 2 != 0) sym *= legendre_unit(w, p);
    return sym;
}

bool is_local_square(const Rat& q, const Place& v) {
    if (q == 0) throw ZeroInput("is_local_square of zero");
    if (v.is_real()) return q > 0;
    const Int& p = v.prime();
    if (valuation(q, p) % 2 != 0) return false;
    Rat u = unit_part(q, p);
    if (p == 2) return mod8_unit(u) == 1;
    return legendre_unit(u, p) == 1;
}

} // namespace simfac
