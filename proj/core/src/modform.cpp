#include "cuspcoeff/modform.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cuspcoeff/bessel.hpp"
#include "json.hpp"

namespace cuspcoeff {

EisensteinInt EisensteinInt::zeta6_power(int k) {
    static const EisensteinInt table[6] = {{1, 0}, {1, 1},  {0, 1},
                                           {-1, 0}, {-1, -1}, {0, -1}};
    return table[((k % 6) + 6) % 6];
}

std::optional<EisensteinInt> EisensteinInt::divide_exact(
    const EisensteinInt& d) const {
    i128 nd = d.norm();
    if (nd == 0) return std::nullopt;
    EisensteinInt num = *this * d.conj();
    if (num.a % nd != 0 || num.b % nd != 0) return std::nullopt;
    return EisensteinInt{num.a / nd, num.b / nd};
}

std::string EisensteinInt::str() const {
    if (b == 0) return i128_str(a);
    return i128_str(a) + (b > 0 ? "+" : "") + i128_str(b) + "w";
}

std::string i128_str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string s;
    while (u) {
        s += char('0' + (int)(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

i128 i128_parse(const std::string& s) {
    i128 v = 0;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw std::domain_error("i128_parse: empty literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::domain_error("i128_parse: bad digit");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

double KappaKernel::operator()(double y) const {
    if (kind == FormKind::holomorphic) {
        if (y <= 0.0) return 0.0;
        return std::exp(-2.0 * M_PI * y);
    }
    if (y == 0.0) throw std::domain_error("kappa: Maass kernel needs y != 0");
    double v = std::sqrt(std::fabs(y)) *
               bessel_k_imag(spectral, 2.0 * M_PI * std::fabs(y));
    if (y < 0 && (parity % 2)) v = -v;
    return v;
}

double kappa(const KappaKernel& kernel, double y) { return kernel(y); }

cplx NewformData::a(i64 n) const {
    if (n < 1 || n > n_max())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside 1.." + std::to_string(n_max()));
    return coeffs[n - 1];
}

cplx NewformData::lambda(i64 n) const {
    return a(n) / std::pow((double)n, (weight - 1) / 2.0);
}

KappaKernel NewformData::kernel() const {
    return KappaKernel{kind, weight, parity, spectral_parameter};
}

RootOfUnity NewformData::chi_of(const Mat2& gamma) const {
    if (mod_norm(gamma.c, level) != 0)
        throw std::domain_error("chi_of: matrix not in Gamma_0(level)");
    return nebentypus.value_at_unit(gamma.d);
}

void NewformData::validate() const {
    if (level < 1) throw std::domain_error("invariant: level >= 1");
    if (n_max() < 1) throw std::domain_error("invariant: no coefficients");
    if (nebentypus.conductor() != nebentypus.modulus())
        throw std::domain_error("invariant: nebentypus must be primitive");
    if (level % nebentypus.conductor() != 0)
        throw std::domain_error("invariant: conductor must divide the level");
    if (std::abs(a(1) - cplx(1.0, 0.0)) > 1e-12)
        throw std::domain_error("invariant: a_f(1) = 1 normalization");
    if (kind == FormKind::holomorphic) {
        if (weight < 1) throw std::domain_error("invariant: weight >= 1");
        int sign = (weight % 2 == 0) ? 1 : -1;
        if (nebentypus.parity() != sign)
            throw std::domain_error("invariant: chi(-1) = (-1)^k parity");
    } else {
        if (weight != 0)
            throw std::domain_error("invariant: Maass forms have weight 0");
        if (parity != 0 && parity != 1)
            throw std::domain_error("invariant: Maass parity in {0,1}");
    }
    // Hecke multiplicativity on coprime pairs within reach; exact data is
    // checked exactly.
    for (i64 m = 2; m <= 30; ++m) {
        for (i64 n = m + 1; n <= 30; ++n) {
            if (gcd_i64(m, n) != 1 || m * n > n_max()) continue;
            bool ok;
            if (exact) {
                ok = exact_coeffs[m * n - 1] ==
                     exact_coeffs[m - 1] * exact_coeffs[n - 1];
            } else {
                double scale = std::max(1.0, std::abs(a(m * n)));
                ok = std::abs(a(m * n) - a(m) * a(n)) <= 1e-6 * scale;
            }
            if (!ok)
                throw std::domain_error(
                    "invariant: multiplicativity fails at (" +
                    std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
    if (kind == FormKind::holomorphic) {
        // |lambda(p)| <= 2 + slack off the level (data sanity).
        for (i64 p = 2; p <= std::min<i64>(n_max(), 200); ++p) {
            if (!is_prime((u64)p) || level % p == 0) continue;
            if (std::abs(lambda(p)) > 2.0 + 1e-6)
                throw std::domain_error(
                    "invariant: |lambda(p)| <= 2 fails at p = " +
                    std::to_string(p));
        }
    }
}

namespace {

// Bound sum_{n > T} n^s r^n by the first term times a geometric envelope.
double tail_geometric(double s, double r, i64 T) {
    if (r >= 1.0) return INFINITY;
    double ratio = r * std::pow(1.0 + 1.0 / (double)T, s);
    if (ratio >= 0.999) return INFINITY;
    return std::pow((double)(T + 1), s) * std::pow(r, (double)(T + 1)) /
           (1.0 - ratio);
}

// |a_f(n)| <= C n^{(k-1)/2 + 1/2} with C covering the divisor function over
// the available range (exact for the bundled data, empirical otherwise).
double coefficient_growth_constant(const NewformData& f, double exponent) {
    double c = 1.0;
    i64 limit = std::min<i64>(f.n_max(), 2000);
    for (i64 n = 1; n <= limit; ++n)
        c = std::max(c, std::abs(f.coeffs[n - 1]) /
                            std::pow((double)n, exponent));
    return 1.25 * c;
}

}  // namespace

EvalResult evaluate(const NewformData& f, const EvalPoint& z, i64 n_terms) {
    if (z.y <= 0) throw std::domain_error("evaluate: need Im z > 0");
    if (n_terms < 1 || n_terms > f.n_max())
        throw std::domain_error("evaluate: insufficient coefficients for " +
                                std::to_string(n_terms) + " terms");
    if (f.kind == FormKind::holomorphic && z.y * (double)n_terms < 3.0)
        throw std::domain_error(
            "evaluate: y * n_terms < 3; height too small for the requested "
            "truncation");
    KappaKernel ker = f.kernel();
    EvalResult out;
    out.terms_used = (int)n_terms;
    cplx sum = 0.0;
    if (f.kind == FormKind::holomorphic) {
        // sum a(n) e(n z), accumulated via the recurrence e((n+1)z)=e(nz)e(z)
        cplx ez = std::exp(cplx(0.0, 2.0 * M_PI) * cplx(z.x, z.y));
        cplx en = ez;
        for (i64 n = 1; n <= n_terms; ++n) {
            sum += f.coeffs[n - 1] * en;
            en *= ez;
        }
        double expo = (f.weight - 1) / 2.0 + 0.5;
        double c = coefficient_growth_constant(f, expo);
        out.tail_bound =
            c * tail_geometric(expo, std::exp(-2.0 * M_PI * z.y), n_terms);
    } else {
        // Maass: terms n and -n; the reflection symmetry a(-n) = a(n) with
        // the sign carried by kappa.
        for (i64 n = 1; n <= n_terms; ++n) {
            double kp = ker((double)n * z.y), km = ker(-(double)n * z.y);
            cplx ep = std::exp(cplx(0.0, 2.0 * M_PI * (double)n * z.x));
            sum += f.coeffs[n - 1] * (kp * ep + km * std::conj(ep));
        }
        double c = coefficient_growth_constant(f, 0.75);
        out.tail_bound =
            2.0 * c * tail_geometric(0.75, std::exp(-2.0 * M_PI * z.y), n_terms);
    }
    out.value = sum;
    return out;
}

EvalResult evaluate_auto(const NewformData& f, const EvalPoint& z, double tol) {
    if (z.y <= 0) throw std::domain_error("evaluate_auto: need Im z > 0");
    double expo =
        (f.kind == FormKind::holomorphic) ? (f.weight - 1) / 2.0 + 0.5 : 0.75;
    double c = coefficient_growth_constant(f, expo);
    double r = std::exp(-2.0 * M_PI * z.y);
    i64 T = std::max<i64>(4, (i64)std::ceil(3.0 / z.y) + 1);
    while (T <= f.n_max() && c * tail_geometric(expo, r, T) > tol) ++T;
    if (T > f.n_max())
        throw std::domain_error(
            "evaluate_auto: y too small for requested tolerance with " +
            std::to_string(f.n_max()) + " coefficients");
    return evaluate(f, z, T);
}

cplx slash(const NewformData& f, const Mat2& gamma, const EvalPoint& z,
           double tol) {
    i64 det = gamma.det();
    if (det <= 0) throw std::domain_error("slash: determinant must be > 0");
    cplx zz = z.z();
    cplx denom = (double)gamma.c * zz + (double)gamma.d;
    cplx gz = ((double)gamma.a * zz + (double)gamma.b) / denom;
    if (gz.imag() <= 0) throw std::logic_error("slash: mapped point left H");
    EvalResult ev = evaluate_auto(f, EvalPoint{gz.real(), gz.imag()}, tol);
    if (f.kind == FormKind::maass) return ev.value;
    return std::pow((double)det, f.weight / 2.0) *
           std::pow(denom, -(double)f.weight) * ev.value;
}

namespace {

using nlohmann::json;

DirichletCharacter character_from_json(const json& j) {
    i64 modulus = j.at("modulus").get<i64>();
    std::vector<std::pair<i64, RootOfUnity>> gens;
    if (j.contains("values_on_generators")) {
        for (const auto& row : j.at("values_on_generators")) {
            if (!row.is_array() || row.size() != 3)
                throw std::domain_error(
                    "character generator rows must be [g, num, den]");
            gens.emplace_back(row[0].get<i64>(),
                              RootOfUnity(row[1].get<i64>(), row[2].get<i64>()));
        }
    }
    return DirichletCharacter::from_generator_values(modulus, gens);
}

}  // namespace

NewformData load_newform(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open newform file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("newform JSON parse error in " + path + ": " +
                                 e.what());
    }
    NewformData f;
    try {
        f.level = j.at("level").get<i64>();
        f.weight = j.at("weight").get<int>();
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "holomorphic")
            f.kind = FormKind::holomorphic;
        else if (kind == "maass")
            f.kind = FormKind::maass;
        else
            throw std::domain_error("kind must be holomorphic|maass");
        if (f.kind == FormKind::maass) {
            f.parity = j.at("parity").get<int>();
            f.spectral_parameter = j.at("spectral_parameter").get<double>();
        }
        f.nebentypus = character_from_json(j.at("character")).primitive_part();
        if (j.contains("name")) f.name = j.at("name").get<std::string>();
        if (j.contains("coefficients_exact")) {
            const auto& rows = j.at("coefficients_exact");
            f.exact_coeffs.resize(rows.size());
            f.coeffs.resize(rows.size());
            i64 expect = 1;
            for (const auto& row : rows) {
                i64 n = row[0].get<i64>();
                if (n != expect++)
                    throw std::domain_error(
                        "exact coefficients must be contiguous from n = 1");
                EisensteinInt c(i128_parse(row[1].get<std::string>()),
                                i128_parse(row[2].get<std::string>()));
                f.exact_coeffs[n - 1] = c;
                f.coeffs[n - 1] = c.value();
            }
            f.exact = true;
        } else {
            const auto& rows = j.at("coefficients");
            f.coeffs.resize(rows.size());
            i64 expect = 1;
            for (const auto& row : rows) {
                i64 n = row[0].get<i64>();
                if (n != expect++)
                    throw std::domain_error(
                        "coefficients must be contiguous from n = 1");
                f.coeffs[n - 1] = cplx(row[1].get<double>(),
                                       row.size() > 2 ? row[2].get<double>()
                                                      : 0.0);
            }
        }
    } catch (const json::exception& e) {
        throw std::runtime_error("newform file " + path +
                                 " is malformed: " + e.what());
    }
    f.validate();
    return f;
}

void save_newform(const NewformData& f, const std::string& path) {
    nlohmann::ordered_json j;
    j["format"] = "cuspcoeff-newform-v1";
    j["name"] = f.name;
    j["level"] = f.level;
    j["weight"] = f.weight;
    j["kind"] = f.kind == FormKind::holomorphic ? "holomorphic" : "maass";
    if (f.kind == FormKind::maass) {
        j["parity"] = f.parity;
        j["spectral_parameter"] = f.spectral_parameter;
    }
    nlohmann::ordered_json chr;
    chr["modulus"] = f.nebentypus.modulus();
    auto rows = nlohmann::ordered_json::array();
    // store values on a full residue list; loader closure re-validates
    for (i64 n = 1; n < std::max<i64>(2, f.nebentypus.modulus()); ++n) {
        auto v = f.nebentypus.value(n);
        if (v) rows.push_back({n, v->num(), v->den()});
    }
    if (f.nebentypus.modulus() == 1) rows.push_back({1, 0, 1});
    chr["values_on_generators"] = rows;
    j["character"] = chr;
    if (f.exact) {
        auto arr = nlohmann::ordered_json::array();
        for (i64 n = 1; n <= f.n_max(); ++n) {
            const auto& c = f.exact_coeffs[n - 1];
            arr.push_back({n, i128_str(c.a), i128_str(c.b)});
        }
        j["coefficients_exact"] = arr;
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (i64 n = 1; n <= f.n_max(); ++n)
            arr.push_back(
                {n, f.coeffs[n - 1].real(), f.coeffs[n - 1].imag()});
        j["coefficients"] = arr;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump() << "\n";
}

std::string cache_directory() {
    if (const char* env = std::getenv("CUSPCOEFF_CACHE_DIR"))
        return std::string(env);
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/cuspcoeff";
    return "cuspcoeff-cache";
}

NewformData resolve_form(const std::string& spec, i64 n_max) {
    if (spec.rfind("builtin:", 0) == 0)
        return generate_builtin(spec.substr(8), n_max);
    for (const char* name :
         {"delta", "level11", "level9chi", "level9chi_conj"})
        if (spec == name) return generate_builtin(spec, n_max);
    return load_newform(spec);
}

}  // namespace cuspcoeff
