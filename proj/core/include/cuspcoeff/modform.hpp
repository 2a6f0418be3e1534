#pragma once

// Newform data: q-expansion coefficients (exact where the source is exact),
// the unified kernel kappa_f, numerical evaluation with rigorous truncation
// control for holomorphic forms, the slash action, and JSON ingestion.

#include <string>
#include <vector>

#include "cuspcoeff/character.hpp"
#include "cuspcoeff/cusps.hpp"
#include "cuspcoeff/cyclotomic.hpp"

namespace cuspcoeff {

enum class FormKind { holomorphic, maass };

struct KappaKernel {
    FormKind kind = FormKind::holomorphic;
    int weight = 12;          // holomorphic: k in 2N (or odd with character)
    int parity = 0;           // maass: m in {0, 1}
    double spectral = 0.0;    // maass: t_f

    // kappa_f(y): holomorphic (sgn(y)+1)/2 * exp(-2 pi y);
    // maass sgn(y)^m |y|^{1/2} K_{i t_f}(2 pi |y|).
    double operator()(double y) const;
};

struct EvalPoint {
    double x = 0.0;
    double y = 1.0;  // must be > 0

    cplx z() const { return {x, y}; }
};

struct EvalResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;  // rigorous for holomorphic exact data
    int terms_used = 0;
};

class NewformData {
  public:
    i64 level = 1;
    int weight = 12;
    FormKind kind = FormKind::holomorphic;
    int parity = 0;
    double spectral_parameter = 0.0;
    DirichletCharacter nebentypus{1};  // stored primitive, conductor M | N
    std::string name = "f";

    // Coefficients a_f(1..n_max); exact mirror present when the source is
    // exact (builtin generators, cached data).
    std::vector<cplx> coeffs;
    std::vector<EisensteinInt> exact_coeffs;
    bool exact = false;

    i64 n_max() const { return (i64)coeffs.size(); }
    cplx a(i64 n) const;
    // Hecke-normalized lambda(n) = a(n) / n^{(k-1)/2}.
    cplx lambda(i64 n) const;
    KappaKernel kernel() const;
    // chi(gamma) = chi(d) for gamma in Gamma_0(N).
    RootOfUnity chi_of(const Mat2& gamma) const;

    // Checks every load-time invariant; throws std::domain_error naming the
    // violated one.
    void validate() const;
};

double kappa(const KappaKernel& kernel, double y);

// Truncated Fourier sum with n_terms terms plus a tail bound. Refuses
// y * n_terms < 3 for holomorphic evaluation (truncation control).
EvalResult evaluate(const NewformData& f, const EvalPoint& z, i64 n_terms);

// Chooses n_terms to push the tail bound below tol; throws if the available
// coefficients cannot reach it.
EvalResult evaluate_auto(const NewformData& f, const EvalPoint& z, double tol);

// (f|_k gamma)(z) = det^{k/2} (cz+d)^{-k} f(gamma z); weight 0 for Maass.
cplx slash(const NewformData& f, const Mat2& gamma, const EvalPoint& z,
           double tol = 1e-12);

NewformData load_newform(const std::string& path);
void save_newform(const NewformData& f, const std::string& path);

// Builtin datasets, generated from independent oracles and cached on disk:
//   delta     : level 1, weight 12 (eta^24 pentagonal recursion)
//   level11   : level 11, weight 2 (point counts of y^2+y = x^3-x^2)
//   level9chi : level 9, weight 3, order-6 odd character mod 9
//   level9chi_conj : its conjugate (the dual newform)
NewformData generate_builtin(const std::string& name, i64 n_max = 0);

// Resolve "builtin:<name>" or a file path.
NewformData resolve_form(const std::string& spec, i64 n_max = 0);

std::string cache_directory();

}  // namespace cuspcoeff
