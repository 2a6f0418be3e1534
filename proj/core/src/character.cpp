#include "cuspcoeff/character.hpp"

#include <algorithm>
#include <deque>

namespace cuspcoeff {

DirichletCharacter::DirichletCharacter(i64 modulus) : modulus_(modulus) {
    if (modulus < 1)
        throw std::domain_error("DirichletCharacter: modulus must be >= 1");
    table_.resize(modulus_);
    for (i64 n = 0; n < modulus_; ++n)
        if (gcd_i64(n, modulus_) == 1 || modulus_ == 1)
            table_[n] = RootOfUnity::one();
    finalize();
}

DirichletCharacter DirichletCharacter::from_generator_values(
    i64 modulus, const std::vector<std::pair<i64, RootOfUnity>>& gens) {
    if (modulus < 1)
        throw std::domain_error("DirichletCharacter: modulus must be >= 1");
    DirichletCharacter chi(1);
    chi.modulus_ = modulus;
    chi.table_.assign(modulus, std::nullopt);
    if (modulus == 1) {
        chi.table_[0] = RootOfUnity::one();
        chi.finalize();
        return chi;
    }
    for (auto& [g, v] : gens) {
        if (gcd_i64(g, modulus) != 1)
            throw std::domain_error(
                "character generator not coprime to the modulus");
        (void)v;
    }
    chi.table_[1] = RootOfUnity::one();
    std::deque<i64> queue = {1};
    while (!queue.empty()) {
        i64 r = queue.front();
        queue.pop_front();
        RootOfUnity vr = *chi.table_[r];
        for (auto& [g, vg] : gens) {
            i64 s = mod_mul(r, g, modulus);
            RootOfUnity vs = vr * vg;
            if (chi.table_[s]) {
                if (!(*chi.table_[s] == vs))
                    throw std::domain_error(
                        "inconsistent character values on generators");
            } else {
                chi.table_[s] = vs;
                queue.push_back(s);
            }
        }
    }
    for (i64 n = 1; n < modulus; ++n)
        if (gcd_i64(n, modulus) == 1 && !chi.table_[n])
            throw std::domain_error(
                "given residues do not generate the unit group");
    chi.finalize();
    return chi;
}

void DirichletCharacter::finalize() {
    // Parity.
    if (modulus_ <= 2) {
        parity_ = 1;
    } else {
        RootOfUnity v = *table_[modulus_ - 1];
        if (v.is_one())
            parity_ = 1;
        else if (v == RootOfUnity::minus_one())
            parity_ = -1;
        else
            throw std::domain_error("character value at -1 is not +-1");
    }
    // Trivial?
    trivial_ = true;
    for (i64 n = 0; n < modulus_; ++n)
        if (table_[n] && !table_[n]->is_one()) trivial_ = false;
    // Conductor: smallest divisor d | M with chi = 1 on {n = 1 mod d}.
    conductor_ = modulus_;
    for (i64 d : divisors(modulus_)) {
        bool ok = true;
        for (i64 n = 1; n < modulus_ && ok; n += d)
            if (table_[n] && !table_[n]->is_one()) ok = false;
        if (ok) {
            conductor_ = d;
            break;
        }
    }
}

std::optional<RootOfUnity> DirichletCharacter::value(i64 n) const {
    return table_[mod_norm(n, modulus_)];
}

cplx DirichletCharacter::eval(i64 n) const {
    auto v = value(n);
    return v ? v->value() : cplx(0.0, 0.0);
}

RootOfUnity DirichletCharacter::value_at_unit(i64 n) const {
    auto v = value(n);
    if (!v)
        throw std::domain_error("character argument shares a factor with " +
                                std::to_string(modulus_));
    return *v;
}

i64 DirichletCharacter::order() const {
    i64 o = 1;
    for (auto& v : table_)
        if (v) o = lcm_i64(o, v->order());
    return o;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    i64 f = conductor_;
    if (f == modulus_) return *this;
    DirichletCharacter chi(1);
    chi.modulus_ = f;
    chi.table_.assign(f, std::nullopt);
    if (f == 1) {
        chi.table_[0] = RootOfUnity::one();
        chi.finalize();
        return chi;
    }
    for (i64 r = 0; r < f; ++r) {
        if (gcd_i64(r, f) != 1) continue;
        i64 n = r;
        while (gcd_i64(n, modulus_) != 1) n += f;
        chi.table_[r] = *table_[mod_norm(n, modulus_)];
    }
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::local_component(i64 p) const {
    DirichletCharacter prim = primitive_part();
    i64 f = prim.modulus_;
    int e = (f == 1) ? 0 : vp(f, p);
    i64 fp = checked_pow(p, e);
    if (fp == 1) return DirichletCharacter(1);
    i64 rest = f / fp;
    DirichletCharacter chi(1);
    chi.modulus_ = fp;
    chi.table_.assign(fp, std::nullopt);
    for (i64 r = 0; r < fp; ++r) {
        if (gcd_i64(r, fp) != 1) continue;
        i64 n = crt(r, fp, 1, rest).first;
        chi.table_[r] = *prim.table_[n];
    }
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter chi = *this;
    for (auto& v : chi.table_)
        if (v) v = v->conj();
    chi.finalize();
    return chi;
}

namespace {

// Generators of (Z/p^e)^x lifted to (Z/M)^x via CRT, with their orders.
struct UnitGen {
    i64 g;    // residue mod M
    i64 ord;  // multiplicative order
};

i64 multiplicative_order(i64 g, i64 m) {
    i64 o = 1, x = mod_norm(g, m);
    i64 cur = x;
    while (cur != 1 % m) {
        cur = mod_mul(cur, x, m);
        ++o;
        if (o > m) throw std::logic_error("order computation ran away");
    }
    return o;
}

std::vector<UnitGen> unit_group_generators(i64 M) {
    std::vector<UnitGen> gens;
    if (M <= 2) return gens;
    for (auto [p, e] : factor(M).factors) {
        i64 pe = checked_pow(p, e);
        i64 rest = M / pe;
        auto lift = [&](i64 g) { return crt(g, pe, 1, rest).first; };
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                gens.push_back({lift(3), 2});
            } else {
                gens.push_back({lift(pe - 1), 2});
                gens.push_back({lift(5), multiplicative_order(5, pe)});
            }
        } else {
            // Primitive root mod p lifted to p^e.
            i64 phi_p = p - 1;
            i64 g = 2;
            for (;; ++g) {
                if (mod_norm(g, p) == 0) continue;
                bool prim = true;
                for (auto [q, _] : factor(phi_p).factors)
                    if (mod_pow(g, phi_p / q, p) == 1) prim = false;
                if (prim) break;
            }
            if (e > 1 && mod_pow(g, p - 1, p * p) == 1) g += p;
            gens.push_back({lift(g), euler_phi(pe)});
        }
    }
    return gens;
}

}  // namespace

std::vector<DirichletCharacter> DirichletCharacter::all_mod(i64 modulus) {
    auto gens = unit_group_generators(modulus);
    std::vector<DirichletCharacter> out;
    std::vector<i64> exps(gens.size(), 0);
    while (true) {
        std::vector<std::pair<i64, RootOfUnity>> assignment;
        for (size_t i = 0; i < gens.size(); ++i)
            assignment.emplace_back(gens[i].g,
                                    RootOfUnity(exps[i], gens[i].ord));
        out.push_back(from_generator_values(modulus, assignment));
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exps[i] < gens[i].ord) break;
            exps[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return out;
}

}  // namespace cuspcoeff
