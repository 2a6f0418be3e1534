#include <algorithm>
#include <filesystem>
#include <functional>

#include "cuspcoeff/modform.hpp"

// Builtin coefficient generators. Each is an independent oracle:
//
//   delta     : tau(n) by expanding q prod (1 - q^n)^24 with the pentagonal
//               number series, exact 128-bit integers.
//   level11   : a_p = p - #{affine points of y^2 + y = x^3 - x^2 over F_p},
//               extended by the Hecke recursion and multiplicativity. The
//               count at p = 11 includes the node, which makes the same
//               formula correct in the multiplicative-reduction case.
//   level9chi : the unique newform of S_3(Gamma_0(9), chi) for the order-6
//               odd character mod 9. The space has dimension one
//               (Cohen-Oesterle), so the form is obtained exactly by killing
//               the two Eisenstein eigencomponents of E_1(1,chi) *
//               E_2(chi_{-3}, chi_{-3}) under T_2 and normalizing a(1) = 1.
//               Exact Z[omega] arithmetic throughout; the divisions must come
//               out exact or generation aborts.

namespace cuspcoeff {

namespace {

std::vector<i64> primes_up_to(i64 n) {
    std::vector<char> sieve(n + 1, 1);
    std::vector<i64> out;
    for (i64 p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= n; q += p) sieve[q] = 0;
    }
    return out;
}

std::vector<EisensteinInt> eta24(i64 n_max) {
    // prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}
    std::vector<std::pair<i64, int>> pent = {{0, 1}};
    for (i64 k = 1;; ++k) {
        i64 g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > n_max && g2 > n_max) break;
        int s = (k % 2) ? -1 : 1;
        if (g1 <= n_max) pent.emplace_back(g1, s);
        if (g2 <= n_max) pent.emplace_back(g2, s);
    }
    std::vector<i128> cur(n_max + 1, 0), next(n_max + 1, 0);
    cur[0] = 1;
    for (int rep = 0; rep < 24; ++rep) {
        std::fill(next.begin(), next.end(), (i128)0);
        for (auto [g, s] : pent) {
            if (s > 0)
                for (i64 n = 0; n + g <= n_max; ++n) next[n + g] += cur[n];
            else
                for (i64 n = 0; n + g <= n_max; ++n) next[n + g] -= cur[n];
        }
        std::swap(cur, next);
    }
    std::vector<EisensteinInt> tau(n_max);
    for (i64 n = 1; n <= n_max; ++n) tau[n - 1] = EisensteinInt(cur[n - 1]);
    return tau;
}

i64 affine_point_count(i64 p) {
    // solutions of y^2 + y = x^3 - x^2 over F_p
    if (p == 2) return 4;
    std::vector<uint8_t> is_square(p, 0);
    for (i64 y = 0; y < p; ++y) is_square[(y * y) % p] = 1;
    i64 count = 0;
    for (i64 x = 0; x < p; ++x) {
        i64 t = ((x * x) % p) * x % p;
        t = mod_norm(t - x * x % p, p);
        // y^2 + y - t: discriminant 1 + 4t
        i64 disc = (1 + 4 * t) % p;
        if (disc == 0)
            count += 1;
        else
            count += is_square[disc] ? 2 : 0;
    }
    return count;
}

// a(p^r) from a(p) via a(p^{r+1}) = a(p) a(p^r) - chi(p) p^{k-1} a(p^{r-1}),
// then multiplicative assembly with a smallest-prime-factor table.
std::vector<EisensteinInt> hecke_span(
    i64 n_max, i64 level, int weight,
    const std::function<EisensteinInt(i64)>& a_prime,
    const std::function<EisensteinInt(i64)>& chi_p) {
    std::vector<i64> spf(n_max + 1, 0);
    for (i64 p = 2; p <= n_max; ++p)
        if (!spf[p])
            for (i64 q = p; q <= n_max; q += p)
                if (!spf[q]) spf[q] = p;
    std::vector<EisensteinInt> a(n_max + 1);
    a[1] = EisensteinInt(1);
    for (i64 n = 2; n <= n_max; ++n) {
        i64 p = spf[n];
        i64 pe = p, m = n / p;
        while (m % p == 0) {
            pe *= p;
            m /= p;
        }
        if (m > 1) {
            a[n] = a[pe] * a[m];
            continue;
        }
        // n = p^e
        if (pe == p) {
            a[n] = a_prime(p);
        } else {
            EisensteinInt chi = (level % p == 0) ? EisensteinInt(0) : chi_p(p);
            i128 pw = 1;
            for (int i = 0; i < weight - 1; ++i) pw *= p;
            a[n] = a[p] * a[pe / p] - chi * EisensteinInt(pw) * a[pe / (p * p)];
        }
    }
    return {a.begin() + 1, a.end()};
}

std::vector<EisensteinInt> level11_coeffs(i64 n_max) {
    auto primes = primes_up_to(n_max);
    std::vector<i64> ap_table(n_max + 1, 0);
    for (i64 p : primes) ap_table[p] = p - affine_point_count(p);
    return hecke_span(
        n_max, 11, 2,
        [&](i64 p) { return EisensteinInt(ap_table[p]); },
        [&](i64) { return EisensteinInt(1); });
}

// --- level 9, weight 3, order-6 odd character mod 9 ---

// chi(2) = zeta_6; chi as zeta_6 exponents on residues mod 9 (coprime only).
int chi9_exp(i64 n) {
    switch (mod_norm(n, 9)) {
        case 1: return 0;
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        case 7: return 4;
        case 5: return 5;
        default:
            throw std::domain_error("chi9_exp: argument not coprime to 9");
    }
}

int chi_m3(i64 n) {  // quadratic character of conductor 3
    switch (mod_norm(n, 3)) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

struct PairArray {
    std::vector<i64> a, b;
    explicit PairArray(size_t n) : a(n, 0), b(n, 0) {}
    size_t size() const { return a.size(); }
};

std::vector<EisensteinInt> level9chi_coeffs(i64 n_max) {
    const i64 LP = 4 * n_max + 1;  // two T_2 passes halve the length
    // 3*E_1(1,chi): constant term 2 + omega, then 3 * sum_{d|n} chi(d)
    PairArray e1((size_t)LP + 1);
    e1.a[0] = 2;
    e1.b[0] = 1;
    for (i64 d = 1; d <= LP; ++d) {
        if (gcd_i64(d, 9) != 1) continue;
        EisensteinInt v = EisensteinInt::zeta6_power(chi9_exp(d));
        i64 va = 3 * (i64)v.a, vb = 3 * (i64)v.b;
        for (i64 n = d; n <= LP; n += d) {
            e1.a[n] += va;
            e1.b[n] += vb;
        }
    }
    // E_2(chi_{-3}, chi_{-3}): integer coefficients, no constant term
    std::vector<i64> e2((size_t)LP + 1, 0);
    for (i64 d = 1; d <= LP; ++d) {
        int cd = chi_m3(d);
        if (cd == 0) continue;
        for (i64 m = 1; m * d <= LP; ++m) {
            int cm = chi_m3(m);
            if (cm == 0) continue;
            e2[m * d] += (i64)cm * cd * d;
        }
    }
    // product P = (3 E_1) * E_2 in M_3(Gamma_0(9), chi)
    PairArray prod((size_t)LP + 1);
    for (i64 n = 0; n <= LP; ++n) {
        i64 sa = 0, sb = 0;
        // e2[0] = 0, so start the convolution at i = 0, j = n - i >= 1
        for (i64 i = 0; i < n; ++i) {
            i64 w = e2[n - i];
            if (w == 0) continue;
            sa += e1.a[i] * w;
            sb += e1.b[i] * w;
        }
        prod.a[n] = sa;
        prod.b[n] = sb;
    }

    auto t2_minus = [](const PairArray& g, EisensteinInt eig) {
        // (T_2 - eig) g with chi(2) 2^{k-1} = 4 zeta_6 = 4 + 4 omega
        i64 half = ((i64)g.size() - 1) / 2;
        std::vector<EisensteinInt> out((size_t)half + 1);
        for (i64 n = 0; n <= half; ++n) {
            EisensteinInt v(g.a[2 * n], g.b[2 * n]);
            if (n % 2 == 0) {
                EisensteinInt u(g.a[n / 2], g.b[n / 2]);
                v = v + EisensteinInt(4, 4) * u;
            }
            out[n] = v - eig * EisensteinInt(g.a[n], g.b[n]);
        }
        return out;
    };
    auto t2_minus_e = [](const std::vector<EisensteinInt>& g,
                         EisensteinInt eig) {
        i64 half = ((i64)g.size() - 1) / 2;
        std::vector<EisensteinInt> out((size_t)half + 1);
        for (i64 n = 0; n <= half; ++n) {
            EisensteinInt v = g[2 * n];
            if (n % 2 == 0) v = v + EisensteinInt(4, 4) * g[n / 2];
            out[n] = v - eig * g[n];
        }
        return out;
    };

    // Eisenstein T_2 eigenvalues: 1 + 4 chi(2) and chi(2) + 4
    auto q1 = t2_minus(prod, EisensteinInt(5, 4));
    auto q2 = t2_minus_e(q1, EisensteinInt(5, 1));
    if (!q2[0].is_zero())
        throw std::logic_error("level9chi: projection is not cuspidal");
    EisensteinInt scale = q2[1];
    if (scale.is_zero())
        throw std::logic_error(
            "level9chi: Eisenstein product has no cuspidal component");
    std::vector<EisensteinInt> a(n_max);
    for (i64 n = 1; n <= n_max; ++n) {
        auto q = q2[n].divide_exact(scale);
        if (!q)
            throw std::logic_error(
                "level9chi: projected coefficients are not integral");
        a[n - 1] = *q;
    }
    return a;
}

DirichletCharacter chi9_character(bool conjugate) {
    return DirichletCharacter::from_generator_values(
        9, {{2, RootOfUnity(conjugate ? 5 : 1, 6)}});
}

NewformData assemble(const std::string& name, i64 level, int weight,
                     DirichletCharacter chi,
                     std::vector<EisensteinInt> coeffs) {
    NewformData f;
    f.name = name;
    f.level = level;
    f.weight = weight;
    f.kind = FormKind::holomorphic;
    f.nebentypus = chi;
    f.exact = true;
    f.exact_coeffs = std::move(coeffs);
    f.coeffs.resize(f.exact_coeffs.size());
    for (size_t i = 0; i < f.exact_coeffs.size(); ++i)
        f.coeffs[i] = f.exact_coeffs[i].value();
    f.validate();
    return f;
}

i64 default_length(const std::string& name) {
    if (name == "level11") return 140000;
    return 10000;
}

}  // namespace

NewformData generate_builtin(const std::string& name, i64 n_max) {
    if (n_max <= 0) n_max = default_length(name);
    namespace fs = std::filesystem;
    fs::path dir = cache_directory();
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / (name + ".json");
    if (fs::exists(file)) {
        try {
            NewformData cached = load_newform(file.string());
            if (cached.n_max() >= n_max) return cached;
        } catch (const std::exception&) {
            // stale or corrupt cache: regenerate below
        }
    }
    NewformData f;
    if (name == "delta") {
        f = assemble("delta", 1, 12, DirichletCharacter(1), eta24(n_max));
    } else if (name == "level11") {
        f = assemble("level11", 11, 2, DirichletCharacter(1),
                     level11_coeffs(n_max));
    } else if (name == "level9chi" || name == "level9chi_conj") {
        bool conj = name == "level9chi_conj";
        auto coeffs = level9chi_coeffs(n_max);
        if (conj)
            for (auto& c : coeffs) c = c.conj();
        f = assemble(name, 9, 3, chi9_character(conj), std::move(coeffs));
    } else {
        throw std::domain_error("unknown builtin form: " + name);
    }
    try {
        save_newform(f, file.string());
    } catch (const std::exception&) {
        // cache write failures are non-fatal
    }
    return f;
}

}  // namespace cuspcoeff
