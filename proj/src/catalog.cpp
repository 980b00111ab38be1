#include "curvlab/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace curvlab {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string make_label(const std::string& name, const std::vector<double>& params) {
    std::string s = name + "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += fmt(params[i]);
    }
    return s + ")";
}

int as_int(double v, const char* field) {
    double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw std::invalid_argument(std::string(field) + ": must be an integer");
    return static_cast<int>(r);
}

} // namespace

PrincipalSpectrum clifford(int p, int n, double c, double t) {
    if (c <= 0.0) throw std::invalid_argument("c: must be positive");
    if (t <= 0.0 || t >= std::asin(1.0))
        throw std::invalid_argument("t: must lie in (0, pi/2)");
    if (p < 1 || p > n - 1) throw std::invalid_argument("p: must satisfy 1 <= p <= n-1");
    PrincipalSpectrum s;
    s.n = n;
    s.c = c;
    s.epsilon = 1;
    const double sc = std::sqrt(c);
    s.groups = {{sc / std::tan(t), p}, {-sc * std::tan(t), n - p}};
    s.label = make_label("clifford", {double(p), double(n), c, t});
    s.validate();
    return s;
}

PrincipalSpectrum austere(int n, int p, double lambda, double c) {
    if (p < 1 || 2 * p >= n) throw std::invalid_argument("p: must satisfy 1 <= p < n/2");
    if (lambda == 0.0) throw std::invalid_argument("lambda: must be nonzero");
    PrincipalSpectrum s;
    s.n = n;
    s.c = c;
    s.epsilon = 1;
    s.groups = {{0.0, n - 2 * p}, {lambda, p}, {-lambda, p}};
    s.label = make_label("austere", {double(n), double(p), lambda, c});
    s.validate();
    return s;
}

PrincipalSpectrum cartan(int p, double c) {
    if (p < 1) throw std::invalid_argument("p: must be >= 1");
    if (c <= 0.0) throw std::invalid_argument("c: must be positive");
    PrincipalSpectrum s = austere(3 * p, p, std::sqrt(3.0 * c), c);
    s.label = make_label("cartan", {double(p), c});
    return s;
}

PrincipalSpectrum type_two(int n, double lambda0, double lambda1, double c) {
    if (n < 4) throw std::invalid_argument("dimension: must be >= 4");
    if (lambda0 == 0.0 || lambda1 == 0.0)
        throw std::invalid_argument("lambda: both nonzero values are required");
    PrincipalSpectrum s;
    s.n = n;
    s.c = c;
    s.epsilon = 1;
    s.groups = {{lambda0, 1}, {lambda1, 1}, {0.0, n - 2}};
    s.label = make_label("type_two", {double(n), lambda0, lambda1, c});
    s.validate();
    return s;
}

PrincipalSpectrum two_quasi_umbilical(int n, double lambda) {
    if (n < 4) throw std::invalid_argument("dimension: must be >= 4");
    if (lambda == 0.0) throw std::invalid_argument("lambda: must be nonzero");
    PrincipalSpectrum s;
    s.n = n;
    s.c = 0.0;
    s.epsilon = 1;
    s.groups = {{0.0, 1}, {-(n - 2.0) * lambda, 1}, {lambda, n - 2}};
    s.label = make_label("two_quasi_umbilical", {double(n), lambda});
    s.validate();
    return s;
}

PrincipalSpectrum three_curvature(int n, double lambda0, double lambda1, double lambda2,
                                  int n1, int n2, double c) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("multiplicity: n1 and n2 must be >= 1");
    if (1 + n1 + n2 != n)
        throw std::invalid_argument("multiplicity: 1 + n1 + n2 must equal the dimension");
    if (lambda0 == lambda1 || lambda0 == lambda2 || lambda1 == lambda2)
        throw std::invalid_argument("lambda: the three values must be distinct");
    PrincipalSpectrum s;
    s.n = n;
    s.c = c;
    s.epsilon = 1;
    s.groups = {{lambda0, 1}, {lambda1, n1}, {lambda2, n2}};
    s.label = make_label("three_curvature",
                         {double(n), lambda0, lambda1, lambda2, double(n1), double(n2), c});
    s.validate();
    return s;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "clifford", "austere", "cartan", "type_two", "two_quasi_umbilical", "three_curvature",
    };
    return names;
}

PrincipalSpectrum catalog_build(const std::string& name, const std::vector<double>& v) {
    auto need = [&](size_t k) {
        if (v.size() != k)
            throw std::invalid_argument(name + ": expected " + std::to_string(k)
                                        + " parameters, got " + std::to_string(v.size()));
    };
    if (name == "clifford") {
        need(4);
        return clifford(as_int(v[0], "p"), as_int(v[1], "n"), v[2], v[3]);
    }
    if (name == "austere") {
        need(4);
        return austere(as_int(v[0], "n"), as_int(v[1], "p"), v[2], v[3]);
    }
    if (name == "cartan") {
        need(2);
        return cartan(as_int(v[0], "p"), v[1]);
    }
    if (name == "type_two") {
        need(4);
        return type_two(as_int(v[0], "n"), v[1], v[2], v[3]);
    }
    if (name == "two_quasi_umbilical") {
        need(2);
        return two_quasi_umbilical(as_int(v[0], "n"), v[1]);
    }
    if (name == "three_curvature") {
        need(7);
        return three_curvature(as_int(v[0], "n"), v[1], v[2], v[3], as_int(v[4], "n1"),
                               as_int(v[5], "n2"), v[6]);
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

namespace {

CatalogEntry make_entry(const std::string& name, const std::vector<double>& params,
                        std::vector<ExpectedValue> expected) {
    CatalogEntry e;
    e.name = name;
    e.params = params;
    e.spectrum = catalog_build(name, params);
    e.expected = std::move(expected);
    return e;
}

const double kPi = 3.14159265358979323846;

std::vector<CatalogEntry> build_standard_catalog() {
    std::vector<CatalogEntry> out;

    out.push_back(make_entry("clifford", {2, 4, 1, kPi / 3},
                             {
                                 {"class:roter", 1, "[PAPER] two-curvature Roter statement"},
                                 {"class:quasi_einstein", 0, "[PAPER] non-quasi-Einstein"},
                                 {"class:partially_einstein", 1, "[PAPER] partially Einstein"},
                                 {"class:einstein", 0, "[DERIVED] away from the Einstein threshold"},
                                 {"class:conformally_flat", 0, "[DERIVED] Weyl norm oracle"},
                                 {"roter_phi", 0.75, "[DERIVED] 1/(trH - alpha)^2 = 3/4"},
                                 {"roter_mu", -1.5, "[DERIVED] -phi xi with xi = (n-1)c - beta"},
                                 {"roter_eta", 4.0, "[DERIVED] phi xi^2 + c"},
                             }));
    out.push_back(make_entry("clifford", {2, 4, 1, kPi / 4},
                             {
                                 {"class:einstein", 1, "[PAPER] threshold t = arctan sqrt((p-1)/(n-p-1))"},
                                 {"tau", 0, "[DERIVED] two distinct curvatures, minimal polynomial degree 2"},
                             }));
    out.push_back(make_entry("clifford", {1, 4, 1, kPi / 3},
                             {
                                 {"class:quasi_umbilical", 1, "[PAPER] p = 1 case"},
                                 {"class:conformally_flat", 1, "[PAPER] conformally flat"},
                                 {"class:roter", 0, "[DERIVED] excluded off U_C"},
                             }));

    out.push_back(make_entry("austere", {6, 2, std::sqrt(3.0), 1},
                             {
                                 {"tau", 0, "[PAPER] worked example scalar"},
                                 {"kappa", 18, "[DERIVED] n(n-1)c - 2p lambda^2"},
                                 {"beta2", 0.15, "[DERIVED] (n-2p-1)lambda^2/((n-2)(n-1))"},
                                 {"mu", -0.6, "[DERIVED] -2p lambda^2/((n-2)(n-1))"},
                                 {"beta1", 0, "[PAPER] worked example scalar"},
                                 {"beta3", 0, "[PAPER] worked example scalar"},
                                 {"beta4", 0, "[PAPER] worked example scalar"},
                                 {"kappa_eigen0", 5, "[DERIVED] eigen-decomposition of S"},
                                 {"kappa_eigen1", 2, "[DERIVED] eigen-decomposition of S"},
                                 {"kappa_eigen2", 2, "[DERIVED] eigen-decomposition of S"},
                                 {"partial_l", 7, "[DERIVED] 2(n-1)c - lambda^2"},
                                 {"partial_m", -10, "[DERIVED] (n-1)c(lambda^2 - (n-1)c)"},
                                 {"L_S", 1, "[PAPER] Ricci pseudosymmetry with L_S = c"},
                                 {"class:ricci_pseudosymmetric", 1, "[PAPER] stated class"},
                                 {"class:pseudosymmetric", 0, "[PAPER] non-pseudosymmetric for p >= 2"},
                                 {"class:partially_einstein", 1, "[DERIVED] S^2 fit oracle"},
                             }));
    out.push_back(make_entry("austere", {4, 1, 1, 0},
                             {
                                 {"tau", 0, "[DERIVED] zero-curvature product"},
                                 {"class:semisymmetric", 1, "[DERIVED] L_R = c = 0"},
                                 {"class:partially_einstein", 1, "[DERIVED] S^2 fit oracle"},
                             }));
    out.push_back(make_entry("austere", {5, 1, 1.3, 0.8},
                             {
                                 {"tau", 0, "[DERIVED] zero-curvature product"},
                                 {"class:pseudosymmetric", 1, "[PAPER] p = 1 pseudosymmetric"},
                                 {"L_R", 0.8, "[PAPER] L_R = c"},
                             }));
    out.push_back(make_entry("cartan", {2, 1},
                             {
                                 {"tau", 0, "[PAPER] worked example scalar"},
                                 {"kappa", 18, "[DERIVED] n(n-1)c - 2p lambda^2"},
                                 {"L_S", 1, "[PAPER] Ricci pseudosymmetry with L_S = c"},
                                 {"class:ricci_pseudosymmetric", 1, "[PAPER] stated class"},
                                 {"class:pseudosymmetric", 0, "[PAPER] non-pseudosymmetric for p >= 2"},
                             }));

    out.push_back(make_entry("type_two", {5, 2, 2, 1},
                             {
                                 {"class:roter", 1, "[PAPER] equal-curvature Roter case"},
                                 {"roter_phi", 0.25, "[PAPER] phi = lambda0^-2"},
                                 {"class:pseudosymmetric", 1, "[PAPER] R.R = c Q(g,R)"},
                                 {"L_R", 1, "[PAPER] L_R = c"},
                                 {"tau", 0, "[PAPER] tau = 0, A = 0"},
                                 {"class:two_quasi_einstein", 1, "[PAPER] rank(S - (n-1)c g) = 2"},
                                 {"partial_l", 12, "[DERIVED] lambda0 lambda1 + 2(n-1)c"},
                                 {"partial_m", -32, "[DERIVED] -(n-1)c(lambda0 lambda1 + (n-1)c)"},
                             }));
    out.push_back(make_entry("type_two", {5, 1, 2, 1},
                             {
                                 {"tau", 0, "[PAPER] tau = 0, A = 0"},
                                 {"kappa_eigen0", 6, "[PAPER] kappa0 = lambda0 lambda1 + (n-1)c"},
                                 {"kappa_eigen1", 6, "[PAPER] kappa1 = kappa0"},
                                 {"kappa_eigen2", 4, "[DERIVED] (n-1)c"},
                                 {"class:pseudosymmetric", 1, "[PAPER] R.R = c Q(g,R)"},
                                 {"L_R", 1, "[PAPER] L_R = c"},
                                 {"class:two_quasi_einstein", 1, "[PAPER] rank(S - (n-1)c g) = 2"},
                                 {"partial_l", 10, "[DERIVED] lambda0 lambda1 + 2(n-1)c"},
                                 {"partial_m", -24, "[DERIVED] -(n-1)c(lambda0 lambda1 + (n-1)c)"},
                             }));
    out.push_back(make_entry("type_two", {5, 1.5, -1.5, 0.5},
                             {
                                 {"tau", 0, "[PAPER] tau = 0, A = 0"},
                                 {"trH", 0, "[PAPER] minimal hypersurface case"},
                                 {"class:pseudosymmetric", 1, "[PAPER] R.R = c Q(g,R)"},
                                 {"L_R", 0.5, "[PAPER] L_R = c"},
                             }));

    out.push_back(make_entry("two_quasi_umbilical", {5, 1},
                             {
                                 {"tau", -6, "[PAPER] tau = -(n-3)(n-2)lambda^3"},
                                 {"class:partially_einstein", 0, "[PAPER] non-partially-Einstein"},
                                 {"class:generalized_roter", 1, "[DERIVED] six-term fit oracle"},
                                 {"class:two_quasi_umbilical", 1, "[PAPER] stated class"},
                                 {"class:roter", 0, "[DERIVED] three-term fit fails"},
                             }));
    out.push_back(make_entry("two_quasi_umbilical", {4, 1},
                             {
                                 {"tau", -2, "[DERIVED] -(n-3)(n-2)lambda^3"},
                             }));
    out.push_back(make_entry("two_quasi_umbilical", {5, -1},
                             {
                                 {"tau", 6, "[DERIVED] odd in lambda"},
                             }));

    out.push_back(make_entry("three_curvature", {5, 1, 2, 3, 2, 2, 0},
                             {
                                 {"tau", 336, "[DERIVED] closed-form tau product, both formulas"},
                                 {"kappa", 94, "[DERIVED] trace oracle"},
                                 {"rho1", -14, "[DERIVED] independent oracle"},
                                 {"rho0", -96, "[DERIVED] independent oracle"},
                             }));
    // The (a, b, a+b) family at a=1, b=2, n=5. The closed form
    // (n-2)((n-2)a + (n-3)b)((n-3)a + (n-2)b)(a+b) = 3*7*8*3 = 504,
    // cross-checked against the scalar tau oracle.
    out.push_back(make_entry("three_curvature", {5, 1, 2, 3, 1, 3, 0},
                             {
                                 {"tau", 504, "[DERIVED] closed-form product at a=1, b=2"},
                             }));
    out.push_back(make_entry("three_curvature", {6, 0.5, 1, -2, 3, 2, 0.3},
                             {
                                 {"tau", -1, "[PAPER] rho = tau = lambda0 lambda1 lambda2"},
                                 {"rho", -1, "[PAPER] rho = tau = lambda0 lambda1 lambda2"},
                             }));
    out.push_back(make_entry("three_curvature", {5, 0.7, 1.2, -1.2, 2, 2, 0},
                             {
                                 {"tau", -1.008, "[PAPER] rho = tau = -lambda0 lambda1^2"},
                                 {"rho", -1.008, "[PAPER] rho = tau = -lambda0 lambda1^2"},
                             }));
    return out;
}

double flag_value(const ClassificationReport& cls, const std::string& flag) {
    for (const auto& [name, f] : flag_table(cls))
        if (name == flag) return f->value ? 1.0 : 0.0;
    throw std::logic_error("unknown classification flag: " + flag);
}

double scalar_value(const std::string& key, const PointGeometry& p,
                    const ClassificationReport& cls) {
    if (key == "tau") return p.tau;
    if (key == "kappa") return p.kappa;
    if (key == "trH") return p.tr_H;
    if (key == "rho1") return p.rho_c.rho1;
    if (key == "rho0") return p.rho_c.rho0;
    if (key == "phi") return p.cubic.phi;
    if (key == "psi") return p.cubic.psi;
    if (key == "rho") return p.cubic.rho;
    if (key == "beta1") return p.beta_c.beta1;
    if (key == "beta2") return p.beta_c.beta2;
    if (key == "beta3") return p.beta_c.beta3;
    if (key == "beta4") return p.beta_c.beta4;
    if (key == "beta5") return p.beta_c.beta5;
    if (key == "beta6") return p.beta_c.beta6;
    if (key == "mu") return p.beta_c.mu;
    if (key == "L_R") return cls.L_R;
    if (key == "L_S") return cls.L_S;
    if (key == "roter_phi") return cls.roter_coeffs[0];
    if (key == "roter_mu") return cls.roter_coeffs[1];
    if (key == "roter_eta") return cls.roter_coeffs[2];
    if (key == "partial_l") return cls.partial_coeffs[0];
    if (key == "partial_m") return cls.partial_coeffs[1];
    if (key == "kappa_eigen0") return ricci_eigenvalues(p)[0];
    if (key == "kappa_eigen1") return ricci_eigenvalues(p)[1];
    if (key == "kappa_eigen2") return ricci_eigenvalues(p)[2];
    throw std::logic_error("unknown expected-value key: " + key);
}

} // namespace

const std::vector<CatalogEntry>& standard_catalog() {
    static const std::vector<CatalogEntry> entries = build_standard_catalog();
    return entries;
}

std::vector<ExpectedCheck> evaluate_expected(const CatalogEntry& entry, const PointGeometry& p,
                                             const ClassificationReport& cls, double tol) {
    std::vector<ExpectedCheck> out;
    for (const ExpectedValue& ev : entry.expected) {
        ExpectedCheck chk;
        chk.key = ev.key;
        chk.expected = ev.value;
        chk.provenance = ev.provenance;
        if (ev.key.rfind("class:", 0) == 0) {
            chk.actual = flag_value(cls, ev.key.substr(6));
            chk.ok = chk.actual == chk.expected;
        } else {
            chk.actual = scalar_value(ev.key, p, cls);
            chk.ok = std::abs(chk.actual - chk.expected)
                     <= tol * std::max(1.0, std::abs(chk.expected));
        }
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace curvlab
