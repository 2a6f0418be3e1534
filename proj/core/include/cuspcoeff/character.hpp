#pragma once

// Dirichlet characters with exact root-of-unity values, conductor
// computation, and the factorization into prime-local primitive components.

#include <optional>
#include <vector>

#include "cuspcoeff/arith.hpp"

namespace cuspcoeff {

class DirichletCharacter {
  public:
    // Trivial character mod M.
    explicit DirichletCharacter(i64 modulus = 1);

    // Build from values on a generating set of (Z/M)^x: pairs (g, e(num/den)).
    // The assignment is closed under multiplication; inconsistent or
    // non-generating data is rejected with std::domain_error.
    static DirichletCharacter from_generator_values(
        i64 modulus, const std::vector<std::pair<i64, RootOfUnity>>& gens);

    // All phi(M) characters mod M, a deterministic order. Test corpus helper.
    static std::vector<DirichletCharacter> all_mod(i64 modulus);

    i64 modulus() const { return modulus_; }
    i64 conductor() const { return conductor_; }
    bool is_trivial() const { return trivial_; }
    bool is_even() const { return parity_ == 1; }
    bool is_odd() const { return parity_ == -1; }
    // +1 even, -1 odd.
    int parity() const { return parity_; }
    i64 order() const;

    // chi(n): nullopt when gcd(n, M) > 1.
    std::optional<RootOfUnity> value(i64 n) const;
    // chi(n) as a complex number (0 off the unit group).
    cplx eval(i64 n) const;
    // chi applied to a matrix in SL2(Z) with lower-left divisible by M's
    // level context: by convention chi(gamma) = chi(d), the lower-right entry.
    RootOfUnity value_at_unit(i64 n) const;  // throws if gcd(n, M) > 1

    // The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive_part() const;

    // The primitive local component of conductor p^{v_p(conductor)}; for
    // p not dividing the conductor this is the trivial character mod 1.
    // The product of local components over p | conductor, evaluated through
    // CRT, equals the primitive part.
    DirichletCharacter local_component(i64 p) const;

    DirichletCharacter conjugate() const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus_ == o.modulus_ && table_ == o.table_;
    }

  private:
    void finalize();  // conductor, parity, trivial flag

    i64 modulus_ = 1;
    i64 conductor_ = 1;
    int parity_ = 1;
    bool trivial_ = true;
    // Value table indexed by residue; nullopt for residues off (Z/M)^x.
    std::vector<std::optional<RootOfUnity>> table_;
};

}  // namespace cuspcoeff
