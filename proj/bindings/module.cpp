#include "curvlab/catalog.hpp"
#include "curvlab/classify.hpp"
#include "curvlab/identities.hpp"
#include "curvlab/point.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace curvlab;

namespace {

PrincipalSpectrum spec_from_dict(const py::dict& d) {
    static const std::set<std::string> known = {
        "dimension", "ambient_curvature", "epsilon", "signature",
        "principal_curvatures", "label",
    };
    for (auto item : d) {
        std::string k = py::cast<std::string>(item.first);
        if (!known.count(k)) throw std::invalid_argument(k + ": unknown key");
    }
    auto need = [&](const char* k) -> py::object {
        if (!d.contains(k)) throw std::invalid_argument(std::string(k) + ": required key is missing");
        return d[k];
    };
    PrincipalSpectrum s;
    s.n = py::cast<int>(need("dimension"));
    s.c = py::cast<double>(need("ambient_curvature"));
    s.epsilon = py::cast<int>(need("epsilon"));
    if (d.contains("signature")) s.signature = py::cast<std::vector<double>>(d["signature"]);
    if (d.contains("label")) s.label = py::cast<std::string>(d["label"]);
    for (auto entry : py::cast<py::list>(need("principal_curvatures"))) {
        py::dict g = py::cast<py::dict>(entry);
        CurvatureGroup grp;
        grp.value = py::cast<double>(g["value"]);
        grp.multiplicity = py::cast<int>(g["multiplicity"]);
        s.groups.push_back(grp);
    }
    s.validate();
    return s;
}

py::dict spec_to_dict(const PrincipalSpectrum& s) {
    py::dict d;
    d["dimension"] = s.n;
    d["ambient_curvature"] = s.c;
    d["epsilon"] = s.epsilon;
    if (!s.signature.empty()) d["signature"] = s.signature;
    py::list pcs;
    for (const CurvatureGroup& g : s.groups) {
        py::dict e;
        e["value"] = g.value;
        e["multiplicity"] = g.multiplicity;
        pcs.append(e);
    }
    d["principal_curvatures"] = pcs;
    d["label"] = s.label;
    return d;
}

py::dict scalars_dict(const PointGeometry& p) {
    py::dict d;
    d["trH"] = p.tr_H;
    d["kappa"] = p.kappa;
    d["phi"] = p.cubic.phi;
    d["psi"] = p.cubic.psi;
    d["rho"] = p.cubic.rho;
    d["cubic_residual"] = p.cubic.residual;
    d["cubic_underdetermined"] = p.cubic.underdetermined;
    d["tau"] = p.tau;
    d["rho1"] = p.rho_c.rho1;
    d["rho0"] = p.rho_c.rho0;
    if (p.frame.n >= 4) {
        d["beta1"] = p.beta_c.beta1;
        d["beta2"] = p.beta_c.beta2;
        d["beta3"] = p.beta_c.beta3;
        d["beta4"] = p.beta_c.beta4;
        d["beta5"] = p.beta_c.beta5;
        d["beta6"] = p.beta_c.beta6;
        d["mu"] = p.beta_c.mu;
    }
    return d;
}

py::dict check_impl(const py::dict& spec, double tol) {
    PointGeometry p = build_point(spec_from_dict(spec), tol);
    SuiteReport rep = run_suite(p, tol);
    py::dict d;
    d["label"] = p.spec.label;
    d["dimension"] = p.frame.n;
    d["scalars"] = scalars_dict(p);
    py::dict mem;
    mem["in_U_H"] = p.in_U_H;
    mem["in_U_S"] = p.in_U_S;
    mem["in_U_C"] = p.in_U_C;
    d["memberships"] = mem;
    py::list ids;
    for (const IdentityReport& r : rep.reports) {
        py::dict e;
        e["id"] = r.identity_id;
        e["applicable"] = r.applicable;
        e["residual"] = r.residual;
        e["passed"] = r.passed(tol);
        if (!r.note.empty()) e["note"] = r.note;
        ids.append(e);
    }
    d["identities"] = ids;
    d["all_passed"] = rep.all_passed();
    return d;
}

py::dict classify_impl(const py::dict& spec, double tol) {
    PointGeometry p = build_point(spec_from_dict(spec), tol);
    ClassificationReport c = classify(p, tol);
    py::dict d;
    d["label"] = p.spec.label;
    py::dict flags;
    for (const auto& [name, flag] : flag_table(c)) {
        py::dict f;
        f["value"] = flag->value;
        f["residual"] = flag->residual;
        f["underdetermined"] = flag->underdetermined;
        flags[name.c_str()] = f;
    }
    d["flags"] = flags;
    d["ricci_dev_rank"] = c.ricci_dev_rank;
    d["alpha"] = c.alpha;
    d["umbilicity_rank"] = c.umbilicity_rank;
    d["umbilical_alpha"] = c.umbilical_alpha;
    d["partial_coeffs"] = c.partial_coeffs;
    d["roter_coeffs"] = c.roter_coeffs;
    d["groter_coeffs"] = c.groter_coeffs;
    d["L_R"] = c.L_R;
    d["L_S"] = c.L_S;
    return d;
}

py::dict evaluate_catalog_impl(const std::string& name, const std::vector<double>& params,
                               double tol) {
    py::dict d;
    d["spectrum"] = spec_to_dict(catalog_build(name, params));
    py::list checks;
    bool all_ok = true;
    for (const CatalogEntry& e : standard_catalog()) {
        if (e.name != name || e.params != params) continue;
        PointGeometry p = build_point(e.spectrum, tol);
        ClassificationReport cls = classify(p, tol);
        for (const ExpectedCheck& chk : evaluate_expected(e, p, cls, tol)) {
            py::dict c;
            c["key"] = chk.key;
            c["expected"] = chk.expected;
            c["actual"] = chk.actual;
            c["ok"] = chk.ok;
            c["provenance"] = chk.provenance;
            checks.append(c);
            all_ok = all_ok && chk.ok;
        }
    }
    d["expected"] = checks;
    d["all_ok"] = all_ok;
    return d;
}

py::list standard_catalog_impl() {
    py::list out;
    for (const CatalogEntry& e : standard_catalog()) {
        py::dict d;
        d["name"] = e.name;
        d["params"] = e.params;
        d["spectrum"] = spec_to_dict(e.spectrum);
        py::list exp;
        for (const ExpectedValue& v : e.expected) {
            py::dict x;
            x["key"] = v.key;
            x["value"] = v.value;
            x["provenance"] = v.provenance;
            exp.append(x);
        }
        d["expected"] = exp;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "curvature verification core";

    m.def("check", &check_impl, py::arg("spectrum"), py::arg("tol") = 1e-9,
          "Run the identity suite on a spectrum dict and report per-identity residuals.");
    m.def("classify", &classify_impl, py::arg("spectrum"), py::arg("tol") = 1e-9,
          "Classify a spectrum dict into the taxonomy flags.");
    m.def("identity_ids", [] { return identity_ids(); },
          "Identity ids in suite order.");
    m.def("catalog_names", [] { return catalog_names(); },
          "Catalog builder names.");
    m.def("catalog_build",
          [](const std::string& name, const std::vector<double>& params) {
              return spec_to_dict(catalog_build(name, params));
          },
          py::arg("name"), py::arg("params"),
          "Build a named catalog spectrum; params in builder order.");
    m.def("standard_catalog", &standard_catalog_impl,
          "Regression instances with their expected values.");
    m.def("evaluate_catalog", &evaluate_catalog_impl, py::arg("name"), py::arg("params"),
          py::arg("tol") = 1e-9,
          "Build a catalog spectrum and compare against stored expected values when the "
          "parameters match a standard instance exactly.");
}
