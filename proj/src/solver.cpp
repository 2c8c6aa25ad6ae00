#include "simfac/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "simfac/errors.hpp"

namespace simfac {

namespace {

void canon(std::vector<Rat>& v) {
    for (auto& x : v) x.canonicalize();
}

bool is_zero_vector(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::vector<Rat> axpy(const std::vector<Rat>& x, const Rat& a, const std::vector<Rat>& y) {
    // x + a*y
    std::vector<Rat> out = x;
    for (size_t i = 0; i < out.size(); ++i) { out[i] += a * y[i]; out[i].canonicalize(); }
    return out;
}

// Square root of b modulo squarefree A > 0 (CRT over the prime factors).
// Pre: solvable, i.e. b is a square mod every odd prime factor.
Int sqrt_mod_squarefree(const Int& b, const Int& A) {
    Int w = 0, mod = 1;
    for (const auto& [p, e] : factorize(A)) {
        (void)e;
        Int bp = b % p;
        if (bp < 0) bp += p;
        Int rp;
        if (bp == 0) {
            rp = 0;
        } else if (p == 2) {
            rp = 1;
        } else {
            if (mpz_legendre(bp.get_mpz_t(), p.get_mpz_t()) != 1)
                throw InternalError("sqrt_mod_squarefree: residue condition violated");
            rp = sqrt_mod_prime(bp, p);
        }
        // CRT combine w (mod mod) with rp (mod p)
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
        Int diff = rp - w;
        Int step = diff * s % p * mod;
        w = w + step;
        mod *= p;
        w %= mod;
        if (w < 0) w += mod;
    }
    return w;
}

std::array<Rat, 3> solve_ternary(const Rat& p, const Rat& q, const Rat& r);

} // namespace

std::array<Int, 3> solve_conic(const Int& A, const Int& B) {
    if (A == 0 || B == 0) throw ZeroInput("solve_conic with zero coefficient");
    if (A == 1) return {1, 0, 1};
    if (B == 1) return {0, 1, 1};
    if (abs(A) < abs(B)) {
        auto [x, y, z] = solve_conic(B, A);
        return {y, x, z};
    }
    if (A == -1 && B == -1)
        throw InternalError("solve_conic: unsolvable pair (-1,-1)");
    const Int Aabs = abs(A);
    Int w = sqrt_mod_squarefree(B, Aabs);
    if (2 * w > Aabs) w -= Aabs;
    Int k = w * w - B;
    if (k == 0) throw InternalError("solve_conic: squarefree B turned out square");
    mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), A.get_mpz_t());
    auto [A1, m] = squarefree_decompose(k);
    auto [x1, y1, z1] = solve_conic(A1, B);
    // (w^2 - B)(z1^2 - B y1^2) = (w z1 + B y1)^2 - B (w y1 + z1)^2
    Int X = A1 * m * x1;
    Int Y = w * y1 + z1;
    Int Z = w * z1 + B * y1;
    if (X == 0 && Y == 0 && Z == 0)
        throw InternalError("solve_conic: degenerate combination");
    if (Z * Z != A * X * X + B * Y * Y)
        throw InternalError("solve_conic: verification failed");
    return {X, Y, Z};
}

namespace {

// Nontrivial rational zero of p x^2 + q y^2 + r z^2, pre: isotropic.
std::array<Rat, 3> solve_ternary(const Rat& p, const Rat& q, const Rat& r) {
    // Scale to z^2 = A0 x^2 + B0 y^2 with A0 = -p/r, B0 = -q/r, then press
    // square parts of A0, B0 into the coordinates.
    Rat A0 = -p / r, B0 = -q / r;
    A0.canonicalize();
    B0.canonicalize();
    SquareClass Ac = squarefree_class(A0), Bc = squarefree_class(B0);
    Rat sa = sqrt_exact(A0 / Rat(Ac.representative()));
    Rat sb = sqrt_exact(B0 / Rat(Bc.representative()));
    auto [X, Y, Z] = solve_conic(Ac.representative(), Bc.representative());
    std::array<Rat, 3> out = {Rat(X) / sa, Rat(Y) / sb, Rat(Z)};
    for (auto& c : out) c.canonicalize();
    Rat check = p * out[0] * out[0] + q * out[1] * out[1] + r * out[2] * out[2];
    check.canonicalize();
    if (check != 0) throw InternalError("solve_ternary: verification failed");
    return out;
}

// First coefficient pair (i,j) with -c_j/c_i a square gives a closed-form zero.
std::optional<std::vector<Rat>> pair_scan(const QuadraticForm& f) {
    for (size_t i = 0; i < f.dim(); ++i)
        for (size_t j = i + 1; j < f.dim(); ++j) {
            Rat ratio = -f.coeff(j) / f.coeff(i);
            ratio.canonicalize();
            if (is_square(ratio)) {
                std::vector<Rat> x(f.dim(), Rat(0));
                x[i] = sqrt_exact(ratio);
                x[j] = 1;
                return x;
            }
        }
    return std::nullopt;
}

std::vector<Rat> hyperbolic_partner(const QuadraticForm& f, const std::vector<Rat>& u) {
    size_t j = 0;
    while (j < u.size() && u[j] == 0) ++j;
    if (j == u.size()) throw InternalError("hyperbolic_partner: zero vector");
    Rat bu = f.coeff(j) * u[j]; // B(u, e_j)
    std::vector<Rat> v0(f.dim(), Rat(0));
    v0[j] = 1 / bu;
    v0[j].canonicalize();
    Rat qv0 = f.evaluate(v0);
    std::vector<Rat> v = axpy(v0, -qv0 / 2, u);
    canon(v);
    return v;
}

// Witness for an isotropic form representing nonzero c, via a hyperbolic pair.
std::vector<Rat> represent_via_hyperbolic(const QuadraticForm& f, const std::vector<Rat>& u,
                                          const Rat& c) {
    std::vector<Rat> v = hyperbolic_partner(f, u);
    std::vector<Rat> x = axpy(v, c / 2, u);
    canon(x);
    if (f.evaluate(x) != c) throw InternalError("represent_via_hyperbolic: verification failed");
    return x;
}

std::optional<size_t> unit_scan(const QuadraticForm& f, const Rat& c) {
    for (size_t i = 0; i < f.dim(); ++i) {
        Rat ratio = c / f.coeff(i);
        ratio.canonicalize();
        if (is_square(ratio)) return i;
    }
    return std::nullopt;
}

Rat find_common_value(const QuadraticForm& f1, const QuadraticForm& f2);

// Witness for anisotropic ternary <a,b,c> representing t (pre-decided).
std::vector<Rat> represent_by_ternary(const QuadraticForm& sigma, const Rat& t) {
    if (auto i = unit_scan(sigma, t)) {
        std::vector<Rat> x(3, Rat(0));
        Rat r = t / sigma.coeff(*i);
        r.canonicalize();
        x[*i] = sqrt_exact(r);
        return x;
    }
    const Rat a = sigma.coeff(0), b = sigma.coeff(1), c = sigma.coeff(2);
    // Common value s of <a,b> and <-c,t>; then glue two ternary solutions.
    QuadraticForm b1({a, b}), b2neg({-c, t});
    Rat s;
    bool have = false;
    const std::vector<Rat> quick = {a, b, Rat(-c), t};
    for (const Rat& cand : quick)
        if (represents(b1, cand) && represents(b2neg, cand)) {
            s = cand;
            have = true;
            break;
        }
    if (!have) s = find_common_value(b1, b2neg);
    auto [u1, u2, u3] = solve_ternary(a, b, -s);
    if (u3 == 0) throw InternalError("represent_by_ternary: <a,b> unexpectedly isotropic");
    Rat x1 = u1 / u3, x2 = u2 / u3;
    auto [v1, v2, v3] = solve_ternary(-c, t, -s);
    if (v3 == 0) throw InternalError("represent_by_ternary: <-c,t> unexpectedly isotropic");
    Rat y1 = v1 / v3, y2 = v2 / v3;
    // a x1^2 + b x2^2 = s = -c y1^2 + t y2^2
    if (y2 == 0) throw InternalError("represent_by_ternary: sigma unexpectedly isotropic");
    std::vector<Rat> out = {x1 / y2, x2 / y2, y1 / y2};
    canon(out);
    if (sigma.evaluate(out) != t)
        throw InternalError("represent_by_ternary: verification failed");
    return out;
}

std::vector<Rat> embed_coords(const std::vector<Rat>& sub, const std::vector<size_t>& idx,
                              size_t n) {
    std::vector<Rat> out(n, Rat(0));
    for (size_t k = 0; k < idx.size(); ++k) out[idx[k]] = sub[k];
    return out;
}

// Representatives of the square classes of the completion at v.
std::vector<Int> local_class_reps(const Place& v) {
    if (v.is_real()) return {Int(1), Int(-1)};
    const Int& p = v.prime();
    if (p == 2) return {Int(1), Int(3), Int(5), Int(7), Int(2), Int(6), Int(10), Int(14)};
    Int u = 2;
    while (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) != -1) ++u;
    return {Int(1), u, p, u * p};
}

bool local_represents(const QuadraticForm& f, const Int& s, const Place& v) {
    return is_locally_isotropic(orth_sum(f, QuadraticForm({Rat(-s)})), v);
}

// A nonzero rational represented by both forms. Pre: such a value exists
// (both forms anisotropic and their difference isotropic). The local
// requirements pin the square class of s at every bad place; a candidate is
// then assembled as (sign * product of support primes) * q with the
// auxiliary prime q found by searching the arithmetic progression that the
// requirements prescribe (Dirichlet). Every candidate is verified exactly.
Rat find_common_value(const QuadraticForm& f1, const QuadraticForm& f2) {
    if (f1.dim() == 1) {
        Rat s = f1.coeff(0);
        if (represents(f2, s)) return s;
        throw InternalError("find_common_value: forced dim-1 value not represented");
    }
    if (f2.dim() == 1) {
        Rat s = f2.coeff(0);
        if (represents(f1, s)) return s;
        throw InternalError("find_common_value: forced dim-1 value not represented");
    }
    std::vector<Rat> support = f1.coeffs();
    support.insert(support.end(), f2.coeffs().begin(), f2.coeffs().end());
    const std::set<Place> places = bad_places(support);

    std::vector<Place> finite;
    std::vector<std::vector<Int>> choices; // admissible classes per place
    std::vector<Int> real_choices;
    for (const auto& v : places) {
        std::vector<Int> ok;
        for (const auto& s : local_class_reps(v))
            if (local_represents(f1, s, v) && local_represents(f2, s, v)) ok.push_back(s);
        if (ok.empty())
            throw InternalError("find_common_value: empty local requirement set");
        if (v.is_real()) {
            real_choices = ok;
        } else {
            finite.push_back(v);
            choices.push_back(ok);
        }
    }

    // Legendre conditions the auxiliary prime must satisfy for the binary
    // sides (higher-dimensional sides accept odd valuation at a good prime
    // unconditionally).
    std::vector<Int> binary_conditions;
    for (const auto* f : {&f1, &f2}) {
        if (f->dim() != 2) continue;
        Rat mdet = -f->coeff(0) * f->coeff(1);
        mdet.canonicalize();
        binary_conditions.push_back(squarefree_class(mdet).representative());
    }

    // walk the product of the admissible class vectors
    std::vector<size_t> pick(finite.size(), 0);
    for (const auto& sign_rep : real_choices) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            // base carries the sign and the valuation parities
            Int base = sign_rep;
            for (size_t i = 0; i < finite.size(); ++i) {
                const Int& p = finite[i].prime();
                const Int& cls = choices[i][pick[i]];
                if (mpz_divisible_p(cls.get_mpz_t(), p.get_mpz_t())) base *= p;
            }
            Rat base_cand(base);
            if (represents(f1, base_cand) && represents(f2, base_cand)) return base_cand;

            // prescribe q's residue at every finite bad place
            Int modulus = 1, residue = 0;
            bool feasible = true;
            {
                std::vector<Int> mods, res;
                for (size_t i = 0; i < finite.size(); ++i) {
                    const Int& p = finite[i].prime();
                    const Int& cls = choices[i][pick[i]];
                    Rat unit_target = unit_part(Rat(cls), p);
                    Rat unit_base = unit_part(Rat(base), p);
                    if (p == 2) {
                        // q = unit(target) * unit(base)^{-1} mod 8; odd inverse
                        // mod 8 is the number itself
                        int t8 = mod8_unit(unit_target), b8 = mod8_unit(unit_base);
                        mods.emplace_back(8);
                        res.emplace_back((t8 * b8) % 8);
                    } else {
                        int want = legendre_unit(unit_target, p) * legendre_unit(unit_base, p);
                        Int r = 1;
                        if (want == -1) {
                            r = 2;
                            while (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != -1) ++r;
                        }
                        mods.push_back(p);
                        res.push_back(r);
                    }
                }
                for (size_t i = 0; i < mods.size() && feasible; ++i) {
                    Int g, sc, tc;
                    mpz_gcdext(g.get_mpz_t(), sc.get_mpz_t(), tc.get_mpz_t(),
                               modulus.get_mpz_t(), mods[i].get_mpz_t());
                    if (g != 1) { feasible = false; break; }
                    Int step = (res[i] - residue) * sc % mods[i] * modulus;
                    residue += step;
                    modulus *= mods[i];
                    residue %= modulus;
                    if (residue < 0) residue += modulus;
                }
            }
            if (feasible) {
                if (modulus == 1) { modulus = 2; residue = 1; }
                Int q = residue;
                for (long steps = 0; steps < 20000; ++steps, q += modulus) {
                    if (q < 2) continue;
                    if (!is_prime(q)) continue;
                    bool cond_ok = true;
                    for (const auto& bc : binary_conditions)
                        if (mpz_legendre(bc.get_mpz_t(), q.get_mpz_t()) != 1) {
                            cond_ok = false;
                            break;
                        }
                    if (!cond_ok) continue;
                    Rat cand(base * q);
                    if (represents(f1, cand) && represents(f2, cand)) return cand;
                }
            }

            size_t k = 0;
            while (k < pick.size()) {
                if (++pick[k] < choices[k].size()) break;
                pick[k] = 0;
                ++k;
            }
            if (k == pick.size()) break;
        }
    }
    throw SearchExhausted("find_common_value: no common value within search bounds");
}

} // namespace

std::vector<Rat> find_isotropic_vector(const QuadraticForm& f) {
    if (!is_isotropic(f)) throw NotRepresented("find_isotropic_vector: form is anisotropic");
    const size_t n = f.dim();
    if (auto hit = pair_scan(f)) return *hit;
    if (n == 2) throw InternalError("isotropic binary without square pair");
    if (n == 3) {
        auto [x, y, z] = solve_ternary(f.coeff(0), f.coeff(1), f.coeff(2));
        return {x, y, z};
    }

    // Isotropic 3-subsets embed directly.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                QuadraticForm sub({f.coeff(i), f.coeff(j), f.coeff(k)});
                if (!is_isotropic(sub)) continue;
                auto [x, y, z] = solve_ternary(sub.coeff(0), sub.coeff(1), sub.coeff(2));
                return embed_coords({x, y, z}, {i, j, k}, n);
            }

    // Split off the first three coordinates (anisotropic by the scan above)
    // and find a value represented by both sides.
    std::vector<size_t> sidx = {0, 1, 2}, tidx;
    for (size_t k = 3; k < n; ++k) tidx.push_back(k);
    QuadraticForm sigma({f.coeff(0), f.coeff(1), f.coeff(2)});
    std::vector<Rat> tail(f.coeffs().begin() + 3, f.coeffs().end());
    QuadraticForm tau(tail);
    if (tau.dim() >= 2 && is_isotropic(tau))
        return embed_coords(find_isotropic_vector(tau), tidx, n);

    Rat t;
    bool have = false;
    std::vector<Rat> quick;
    for (const auto& ct : tau.coeffs()) quick.push_back(-ct);
    for (const auto& cs : sigma.coeffs()) quick.push_back(cs);
    for (const auto& cand : quick)
        if (represents(sigma, cand) && represents(tau, -cand)) {
            t = cand;
            have = true;
            break;
        }
    if (!have) t = find_common_value(sigma, negate(tau));
    Rat mt = -t;
    std::vector<Rat> xs = represent_by_ternary(sigma, t);
    RepVector xt = find_representation(tau, mt);
    std::vector<Rat> out = xs;
    out.insert(out.end(), xt.coords.begin(), xt.coords.end());
    canon(out);
    if (f.evaluate(out) != 0 || is_zero_vector(out))
        throw InternalError("find_isotropic_vector: verification failed");
    return out;
}

RepVector find_representation(const QuadraticForm& f, const Rat& c) {
    if (c == 0) {
        std::vector<Rat> x = find_isotropic_vector(f); // throws NotRepresented if anisotropic
        return {x, Rat(0)};
    }
    if (!represents(f, c))
        throw NotRepresented("find_representation: value is not represented");
    if (auto i = unit_scan(f, c)) {
        std::vector<Rat> x(f.dim(), Rat(0));
        Rat r = c / f.coeff(*i);
        r.canonicalize();
        x[*i] = sqrt_exact(r);
        return {x, c};
    }
    if (is_isotropic(f)) {
        std::vector<Rat> u = find_isotropic_vector(f);
        return {represent_via_hyperbolic(f, u, c), c};
    }
    if (f.dim() == 2) {
        auto [x, y, z] = solve_ternary(f.coeff(0), f.coeff(1), -c);
        if (z == 0) throw InternalError("find_representation: binary unexpectedly isotropic");
        std::vector<Rat> out = {x / z, y / z};
        canon(out);
        return {out, c};
    }
    if (f.dim() == 3) return {represent_by_ternary(f, c), c};
    // dim >= 4, f anisotropic: an isotropic vector of f + <-c> has a nonzero
    // last coordinate.
    QuadraticForm g = orth_sum(f, QuadraticForm({-c}));
    std::vector<Rat> z = find_isotropic_vector(g);
    Rat last = z.back();
    if (last == 0) throw InternalError("find_representation: anisotropic form split off a zero");
    std::vector<Rat> out(z.begin(), z.end() - 1);
    for (auto& x : out) { x /= last; x.canonicalize(); }
    if (f.evaluate(out) != c) throw InternalError("find_representation: verification failed");
    return {out, c};
}

namespace {

// Diagonalize the restriction of f to the span of the given vectors
// (assumed independent, regular subspace). Returns diagonal coefficients
// with an orthogonal basis expressed in f's coordinates.
std::pair<std::vector<Rat>, std::vector<std::vector<Rat>>> diagonalize_subspace(
    const QuadraticForm& f, std::vector<std::vector<Rat>> basis) {
    std::vector<Rat> diag;
    std::vector<std::vector<Rat>> ortho;
    while (!basis.empty()) {
        size_t pick = basis.size();
        for (size_t i = 0; i < basis.size(); ++i)
            if (f.evaluate(basis[i]) != 0) { pick = i; break; }
        if (pick == basis.size()) {
            // all isotropic: find a pair with nonzero polar and merge
            bool fixed = false;
            for (size_t i = 0; i < basis.size() && !fixed; ++i)
                for (size_t j = i + 1; j < basis.size() && !fixed; ++j)
                    if (f.polar(basis[i], basis[j]) != 0) {
                        basis[i] = axpy(basis[i], Rat(1), basis[j]);
                        pick = i;
                        fixed = true;
                    }
            if (!fixed) throw InternalError("diagonalize_subspace: degenerate subspace");
        }
        std::vector<Rat> p = basis[pick];
        basis.erase(basis.begin() + pick);
        Rat d = f.evaluate(p);
        for (auto& w : basis) {
            Rat coef = -f.polar(w, p) / d;
            coef.canonicalize();
            w = axpy(w, coef, p);
        }
        diag.push_back(d);
        ortho.push_back(std::move(p));
    }
    return {diag, ortho};
}

// Independent subset of the rows spanning their row space (exact Gauss).
std::vector<std::vector<Rat>> independent_rows(std::vector<std::vector<Rat>> rows, size_t want) {
    std::vector<std::vector<Rat>> kept;
    std::vector<std::vector<Rat>> reduced;
    for (auto& r : rows) {
        std::vector<Rat> work = r;
        for (const auto& piv : reduced) {
            size_t lead = 0;
            while (lead < piv.size() && piv[lead] == 0) ++lead;
            if (lead < piv.size() && work[lead] != 0) {
                Rat coef = -work[lead] / piv[lead];
                coef.canonicalize();
                work = axpy(work, coef, piv);
            }
        }
        if (!is_zero_vector(work)) {
            reduced.push_back(work);
            kept.push_back(r);
            if (kept.size() == want) break;
        }
    }
    if (kept.size() != want) throw InternalError("independent_rows: rank deficiency");
    return kept;
}

// Split a hyperbolic plane spanned by (u, partner) off f; returns the
// diagonalized complement.
QuadraticForm split_hyperbolic(const QuadraticForm& f, const std::vector<Rat>& u) {
    std::vector<Rat> v = hyperbolic_partner(f, u);
    const size_t n = f.dim();
    std::vector<std::vector<Rat>> proj;
    for (size_t k = 0; k < n; ++k) {
        std::vector<Rat> e(n, Rat(0));
        e[k] = 1;
        // e - B(e,v) u - B(e,u) v  (B(u,v) = 1)
        std::vector<Rat> w = axpy(e, -f.polar(e, v), u);
        w = axpy(w, -f.polar(e, u), v);
        canon(w);
        proj.push_back(std::move(w));
    }
    auto basis = independent_rows(std::move(proj), n - 2);
    auto [diag, ortho] = diagonalize_subspace(f, std::move(basis));
    (void)ortho;
    return QuadraticForm(std::move(diag));
}

} // namespace

WittDecomposition witt_decompose(const QuadraticForm& f) {
    QuadraticForm current = f;
    size_t split = 0;
    while (is_isotropic(current)) {
        std::vector<Rat> u = find_isotropic_vector(current);
        current = split_hyperbolic(current, u);
        ++split;
    }
    if (split != witt_index(f))
        throw InternalError("witt_decompose: constructive index disagrees with invariants");
    return {split, current};
}

std::optional<ProductFactorization> product_factorization(const QuadraticForm& f1,
                                                          const QuadraticForm& f2, const Rat& c) {
    if (c == 0) throw ZeroInput("product_factorization: c must be nonzero");
    if (f1.empty() || f2.empty()) throw Error("product_factorization: forms must be nonempty");
    QuadraticForm g = orth_sum(scale(c, f1), negate(f2));
    if (!is_isotropic(g)) return std::nullopt;
    std::vector<Rat> z = find_isotropic_vector(g);
    std::vector<Rat> x1(z.begin(), z.begin() + f1.dim());
    std::vector<Rat> x2(z.begin() + f1.dim(), z.end());
    Rat t = c * f1.evaluate(x1);
    t.canonicalize();
    if (t != f2.evaluate(x2)) throw InternalError("product_factorization: block values differ");
    ProductFactorization out;
    if (t != 0) {
        out.c1 = f1.evaluate(x1);
        out.c2 = t;
        out.w1 = {x1, out.c1};
        out.w2 = {x2, out.c2};
    } else if (!is_zero_vector(x1) && !is_zero_vector(x2)) {
        // both halves isotropic, hence universal
        out.c1 = c;
        out.c2 = 1;
        out.w1 = find_representation(f1, out.c1);
        out.w2 = find_representation(f2, out.c2);
    } else if (!is_zero_vector(x1)) {
        out.c2 = f2.coeff(0);
        out.c1 = c / out.c2;
        out.c1.canonicalize();
        out.w1 = find_representation(f1, out.c1); // f1 isotropic, universal
        out.w2 = {embed_coords({Rat(1)}, {0}, f2.dim()), out.c2};
    } else {
        out.c1 = f1.coeff(0);
        out.c2 = c / out.c1;
        out.c2.canonicalize();
        out.w1 = {embed_coords({Rat(1)}, {0}, f1.dim()), out.c1};
        out.w2 = find_representation(f2, out.c2); // f2 isotropic, universal
    }
    if (f1.evaluate(out.w1.coords) != out.c1 || f2.evaluate(out.w2.coords) != out.c2 ||
        !same_square_class(c, out.c1 * out.c2))
        throw InternalError("product_factorization: verification failed");
    return out;
}

std::pair<QuadraticForm, std::vector<std::vector<Rat>>> orthogonal_complement(
    const QuadraticForm& f, const std::vector<Rat>& v) {
    Rat d = f.evaluate(v);
    if (d == 0) throw Error("orthogonal_complement: vector must be non-isotropic");
    const size_t n = f.dim();
    std::vector<std::vector<Rat>> proj;
    for (size_t k = 0; k < n; ++k) {
        std::vector<Rat> e(n, Rat(0));
        e[k] = 1;
        Rat coef = -f.polar(e, v) / d;
        coef.canonicalize();
        std::vector<Rat> w = axpy(e, coef, v);
        canon(w);
        proj.push_back(std::move(w));
    }
    auto basis = independent_rows(std::move(proj), n - 1);
    auto [diag, ortho] = diagonalize_subspace(f, std::move(basis));
    return {QuadraticForm(std::move(diag)), std::move(ortho)};
}

std::vector<std::vector<Rat>> embed_subform(const QuadraticForm& tau, const QuadraticForm& f) {
    if (!is_subform(tau, f)) throw NotRepresented("embed_subform: not a subform");
    std::vector<std::vector<Rat>> out;
    // Ambient coordinates of the current complement's basis.
    std::vector<std::vector<Rat>> frame;
    for (size_t k = 0; k < f.dim(); ++k) {
        std::vector<Rat> e(f.dim(), Rat(0));
        e[k] = 1;
        frame.push_back(std::move(e));
    }
    QuadraticForm current = f;
    for (size_t step = 0; step < tau.dim(); ++step) {
        RepVector rep = find_representation(current, tau.coeff(step));
        std::vector<Rat> ambient(f.dim(), Rat(0));
        for (size_t k = 0; k < rep.coords.size(); ++k)
            ambient = axpy(ambient, rep.coords[k], frame[k]);
        canon(ambient);
        out.push_back(ambient);
        if (step + 1 == tau.dim()) break;
        auto [next_form, next_basis] = orthogonal_complement(current, rep.coords);
        std::vector<std::vector<Rat>> next_frame;
        for (const auto& nb : next_basis) {
            std::vector<Rat> amb(f.dim(), Rat(0));
            for (size_t k = 0; k < nb.size(); ++k) amb = axpy(amb, nb[k], frame[k]);
            canon(amb);
            next_frame.push_back(std::move(amb));
        }
        current = next_form;
        frame = std::move(next_frame);
    }
    // Gram check
    for (size_t i = 0; i < out.size(); ++i) {
        if (f.evaluate(out[i]) != tau.coeff(i))
            throw InternalError("embed_subform: diagonal mismatch");
        for (size_t j = i + 1; j < out.size(); ++j)
            if (f.polar(out[i], out[j]) != 0)
                throw InternalError("embed_subform: off-diagonal mismatch");
    }
    return out;
}

std::vector<Rat> square_class_candidates(const std::vector<Rat>& values, size_t extra_primes) {
    std::set<Int> prime_set;
    prime_set.insert(2);
    for (const auto& q : values) {
        if (q == 0) continue;
        Int nd = abs(q.get_num() * q.get_den());
        if (nd == 0) continue;
        for (const auto& [p, e] : factorize(nd)) {
            (void)e;
            prime_set.insert(p);
        }
    }
    std::vector<Int> primes(prime_set.begin(), prime_set.end());
    if (primes.size() > 12) primes.resize(12); // keeps the subset scan bounded
    std::vector<Int> products;
    const size_t subsets = size_t(1) << primes.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        Int prod = 1;
        for (size_t b = 0; b < primes.size(); ++b)
            if (mask & (size_t(1) << b)) prod *= primes[b];
        products.push_back(prod);
    }
    std::sort(products.begin(), products.end());
    std::vector<Rat> out;
    auto emit_block = [&](const Int& multiplier) {
        for (const auto& p : products) {
            out.emplace_back(p * multiplier);
            out.emplace_back(-p * multiplier);
        }
    };
    emit_block(1);
    // widen the support one auxiliary prime at a time
    Int q = 2;
    size_t added = 0;
    while (added < extra_primes) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        if (prime_set.count(q)) continue;
        emit_block(q);
        ++added;
    }
    return out;
}

} // namespace simfac
