#include "curvlab/catalog.hpp"
#include "curvlab/classify.hpp"
#include "curvlab/identities.hpp"
#include "curvlab/sampling.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace curvlab;

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

const char* yn(bool b) { return b ? "yes" : "no"; }

struct FileSpectrum {
    PrincipalSpectrum spec;
    std::optional<double> expected_tau;
};

[[noreturn]] void fail_parse(const std::string& msg) { throw std::invalid_argument(msg); }

double need_number(const json& v, const std::string& where) {
    if (!v.is_number()) fail_parse(where + ": must be a number");
    return v.get<double>();
}

int need_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail_parse(where + ": must be an integer");
    return v.get<int>();
}

FileSpectrum parse_record(const json& rec, const std::string& where, int index) {
    if (!rec.is_object())
        fail_parse(where.empty() ? "top level: must be an object or a list of objects"
                                 : where + ": must be an object");
    const std::string dot = where.empty() ? "" : where + ".";
    static const char* known[] = {"dimension",  "ambient_curvature",    "epsilon",
                                  "signature",  "principal_curvatures", "label",
                                  "expected_tau"};
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) fail_parse(dot + it.key() + ": unknown key");
    }
    for (const char* k : {"dimension", "ambient_curvature", "epsilon", "principal_curvatures"})
        if (!rec.contains(k)) fail_parse(dot + k + ": missing required key");

    FileSpectrum out;
    out.spec.n = need_int(rec["dimension"], dot + "dimension");
    out.spec.c = need_number(rec["ambient_curvature"], dot + "ambient_curvature");
    out.spec.epsilon = need_int(rec["epsilon"], dot + "epsilon");
    if (rec.contains("signature")) {
        const json& sg = rec["signature"];
        if (!sg.is_array()) fail_parse(dot + "signature: must be a list of +1/-1 entries");
        for (size_t k = 0; k < sg.size(); ++k)
            out.spec.signature.push_back(
                need_int(sg[k], dot + "signature[" + std::to_string(k) + "]"));
    }
    const json& pcs = rec["principal_curvatures"];
    if (!pcs.is_array()) fail_parse(dot + "principal_curvatures: must be a list");
    for (size_t k = 0; k < pcs.size(); ++k) {
        const std::string pw = dot + "principal_curvatures[" + std::to_string(k) + "]";
        const json& pc = pcs[k];
        if (!pc.is_object()) fail_parse(pw + ": must be an object with value and multiplicity");
        for (auto it = pc.begin(); it != pc.end(); ++it)
            if (it.key() != "value" && it.key() != "multiplicity")
                fail_parse(pw + "." + it.key() + ": unknown key");
        if (!pc.contains("value") || !pc.contains("multiplicity"))
            fail_parse(pw + ": needs value and multiplicity");
        CurvatureGroup g;
        g.value = need_number(pc["value"], pw + ".value");
        g.multiplicity = need_int(pc["multiplicity"], pw + ".multiplicity");
        out.spec.groups.push_back(g);
    }
    if (rec.contains("label")) {
        if (!rec["label"].is_string()) fail_parse(dot + "label: must be a string");
        out.spec.label = rec["label"].get<std::string>();
    }
    if (out.spec.label.empty()) out.spec.label = "spectrum[" + std::to_string(index) + "]";
    if (rec.contains("expected_tau"))
        out.expected_tau = need_number(rec["expected_tau"], dot + "expected_tau");

    try {
        out.spec.validate();
    } catch (const std::invalid_argument& e) {
        fail_parse(dot + e.what());
    }
    return out;
}

std::vector<FileSpectrum> load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_parse("cannot open file: " + path);
    json root = json::parse(in);
    std::vector<FileSpectrum> out;
    if (root.is_array()) {
        if (root.empty()) fail_parse("top level: list must not be empty");
        for (size_t i = 0; i < root.size(); ++i)
            out.push_back(parse_record(root[i], "spectra[" + std::to_string(i) + "]", int(i)));
    } else {
        out.push_back(parse_record(root, "", 0));
    }
    return out;
}

// Frame covariance probe: transform the point by a seeded random congruence
// and require every identity that passed in the diagonal frame to stay within
// 10x the tolerance, with identical applicability.
struct CongruenceResult {
    double max_residual = 0.0;
    bool ok = true;
};

CongruenceResult congruence_probe(const PointGeometry& p, const SuiteReport& base,
                                  unsigned long long seed, size_t index, double tol) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    LinMap L = random_congruence(rng, p.frame.n);
    PointGeometry q = transform_point(p, L);
    SuiteReport moved = run_suite(q, tol);
    CongruenceResult out;
    for (size_t k = 0; k < base.reports.size(); ++k) {
        if (moved.reports[k].applicable != base.reports[k].applicable) {
            out.ok = false;
            continue;
        }
        if (!base.reports[k].applicable || base.reports[k].residual > tol) continue;
        out.max_residual = std::max(out.max_residual, moved.reports[k].residual);
    }
    out.ok = out.ok && out.max_residual <= 10.0 * tol;
    return out;
}

bool expected_tau_ok(const FileSpectrum& fs, const PointGeometry& p, double tol) {
    if (!fs.expected_tau) return true;
    return std::abs(p.tau - *fs.expected_tau) <= tol * std::max(1.0, std::abs(*fs.expected_tau));
}

json scalars_json(const PointGeometry& p) {
    json sc;
    sc["trH"] = p.tr_H;
    sc["kappa"] = p.kappa;
    sc["phi"] = p.cubic.phi;
    sc["psi"] = p.cubic.psi;
    sc["rho"] = p.cubic.rho;
    sc["cubic_residual"] = p.cubic.residual;
    sc["cubic_underdetermined"] = p.cubic.underdetermined;
    sc["tau"] = p.tau;
    sc["rho1"] = p.rho_c.rho1;
    sc["rho0"] = p.rho_c.rho0;
    if (p.frame.n >= 4) {
        sc["beta1"] = p.beta_c.beta1;
        sc["beta2"] = p.beta_c.beta2;
        sc["beta3"] = p.beta_c.beta3;
        sc["beta4"] = p.beta_c.beta4;
        sc["beta5"] = p.beta_c.beta5;
        sc["beta6"] = p.beta_c.beta6;
        sc["mu"] = p.beta_c.mu;
    }
    return sc;
}

json check_point_json(const FileSpectrum& fs, const PointGeometry& p, const SuiteReport& rep,
                      const CongruenceResult& cong, unsigned long long seed, double tol,
                      bool with_congruence) {
    json jp;
    jp["label"] = p.spec.label;
    jp["dimension"] = p.frame.n;
    jp["ambient_curvature"] = p.spec.c;
    jp["epsilon"] = p.spec.epsilon;
    jp["scalars"] = scalars_json(p);
    json mb;
    mb["in_U_H"] = p.in_U_H;
    mb["in_U_S"] = p.in_U_S;
    mb["in_U_C"] = p.in_U_C;
    jp["memberships"] = mb;
    json ids = json::array();
    for (const auto& r : rep.reports) {
        json e;
        e["id"] = r.identity_id;
        e["applicable"] = r.applicable;
        e["residual"] = r.residual;
        e["passed"] = r.passed(tol);
        e["note"] = r.note;
        ids.push_back(e);
    }
    jp["identities"] = ids;
    bool all = rep.all_passed();
    if (with_congruence) {
        json cg;
        cg["seed"] = seed;
        cg["max_residual"] = cong.max_residual;
        cg["passed"] = cong.ok;
        jp["congruence"] = cg;
        all = all && cong.ok;
    }
    if (fs.expected_tau) {
        json et;
        et["expected"] = *fs.expected_tau;
        et["actual"] = p.tau;
        et["ok"] = expected_tau_ok(fs, p, tol);
        jp["expected_tau"] = et;
        all = all && et["ok"].get<bool>();
    }
    jp["all_passed"] = all;
    return jp;
}

json classify_point_json(const PointGeometry& p, const ClassificationReport& c) {
    json jp;
    jp["label"] = p.spec.label;
    jp["dimension"] = p.frame.n;
    json fl = json::array();
    for (const auto& [name, f] : flag_table(c)) {
        json e;
        e["name"] = name;
        e["value"] = f->value;
        e["residual"] = f->residual;
        e["underdetermined"] = f->underdetermined;
        fl.push_back(e);
    }
    jp["flags"] = fl;
    jp["ricci_dev_rank"] = c.ricci_dev_rank;
    jp["alpha"] = c.alpha;
    jp["umbilicity_rank"] = c.umbilicity_rank;
    jp["umbilical_alpha"] = c.umbilical_alpha;
    jp["partial_coeffs"] = json::array({c.partial_coeffs[0], c.partial_coeffs[1]});
    jp["roter_coeffs"] = json::array({c.roter_coeffs[0], c.roter_coeffs[1], c.roter_coeffs[2]});
    json gr = json::array();
    for (double v : c.groter_coeffs) gr.push_back(v);
    jp["groter_coeffs"] = gr;
    jp["L_R"] = c.L_R;
    jp["L_S"] = c.L_S;
    return jp;
}

void print_point_header(const PointGeometry& p) {
    std::cout << "point " << p.spec.label << "  n=" << p.frame.n << "  c=" << fmt6(p.spec.c)
              << "  epsilon=" << (p.spec.epsilon > 0 ? "+1" : "-1") << "\n";
}

void print_check_text(const FileSpectrum& fs, const PointGeometry& p, const SuiteReport& rep,
                      const CongruenceResult& cong, unsigned long long seed, double tol,
                      bool with_congruence) {
    print_point_header(p);
    std::cout << "  scalars: trH=" << fmt6(p.tr_H) << "  kappa=" << fmt6(p.kappa)
              << "  tau=" << fmt6(p.tau) << "  rho1=" << fmt6(p.rho_c.rho1)
              << "  rho0=" << fmt6(p.rho_c.rho0) << "\n";
    std::cout << "  memberships: U_H=" << yn(p.in_U_H) << "  U_S=" << yn(p.in_U_S)
              << "  U_C=" << yn(p.in_U_C) << "\n";
    std::cout << "  identities (" << rep.applicable_count() << " applicable of "
              << rep.reports.size() << "):\n";
    for (const auto& r : rep.reports) {
        std::cout << "    " << pad(r.identity_id, 28);
        if (!r.applicable) {
            std::cout << pad("n/a", 14) << r.note << "\n";
            continue;
        }
        std::cout << pad(fmt6(r.residual), 14) << (r.passed(tol) ? "pass" : "FAIL");
        if (!r.note.empty()) std::cout << "  " << r.note;
        std::cout << "\n";
    }
    bool all = rep.all_passed();
    if (with_congruence) {
        std::cout << "  congruence covariance (seed " << seed << "): max residual "
                  << fmt6(cong.max_residual) << "  " << (cong.ok ? "pass" : "FAIL") << "\n";
        all = all && cong.ok;
    }
    if (fs.expected_tau) {
        const bool ok = expected_tau_ok(fs, p, tol);
        std::cout << "  expected tau " << fmt6(*fs.expected_tau) << ", actual " << fmt6(p.tau)
                  << "  " << (ok ? "pass" : "FAIL") << "\n";
        all = all && ok;
    }
    std::cout << "  result: " << (all ? "PASS" : "FAIL") << "\n";
}

void print_classify_text(const PointGeometry& p, const ClassificationReport& c) {
    print_point_header(p);
    for (const auto& [name, f] : flag_table(c))
        std::cout << "  " << pad(name, 24) << pad(f->value ? "yes" : "no", 5) << "residual "
                  << fmt6(f->residual) << "\n";
    std::cout << "  ricci_dev_rank=" << c.ricci_dev_rank << "  alpha=" << fmt6(c.alpha)
              << "  umbilicity_rank=" << c.umbilicity_rank
              << "  umbilical_alpha=" << fmt6(c.umbilical_alpha) << "\n";
    std::cout << "  partial: l=" << fmt6(c.partial_coeffs[0])
              << "  m=" << fmt6(c.partial_coeffs[1]) << "\n";
    std::cout << "  roter: phi=" << fmt6(c.roter_coeffs[0]) << "  mu=" << fmt6(c.roter_coeffs[1])
              << "  eta=" << fmt6(c.roter_coeffs[2]) << "\n";
    std::cout << "  groter: phi2=" << fmt6(c.groter_coeffs[0])
              << "  phi1=" << fmt6(c.groter_coeffs[1]) << "  phi=" << fmt6(c.groter_coeffs[2])
              << "  mu1=" << fmt6(c.groter_coeffs[3]) << "  mu=" << fmt6(c.groter_coeffs[4])
              << "  eta=" << fmt6(c.groter_coeffs[5]) << "\n";
    std::cout << "  L_R=" << fmt6(c.L_R) << "  L_S=" << fmt6(c.L_S) << "\n";
}

int cmd_check(const std::string& path, double tol, unsigned long long seed, bool machine) {
    std::vector<FileSpectrum> items = load_file(path);
    json doc;
    doc["command"] = "check";
    doc["tol"] = tol;
    doc["seed"] = seed;
    json pts = json::array();
    bool all = true;
    int passed = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        PointGeometry p = build_point(items[i].spec, tol);
        SuiteReport rep = run_suite(p, tol);
        CongruenceResult cong = congruence_probe(p, rep, seed, i, tol);
        const bool point_ok = rep.all_passed() && cong.ok && expected_tau_ok(items[i], p, tol);
        all = all && point_ok;
        passed += point_ok ? 1 : 0;
        if (machine)
            pts.push_back(check_point_json(items[i], p, rep, cong, seed, tol, true));
        else
            print_check_text(items[i], p, rep, cong, seed, tol, true);
    }
    if (machine) {
        doc["points"] = pts;
        doc["all_passed"] = all;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "summary: " << passed << "/" << items.size() << " points passed\n";
    }
    return all ? 0 : 1;
}

int cmd_classify(const std::string& path, double tol, bool machine) {
    std::vector<FileSpectrum> items = load_file(path);
    json doc;
    doc["command"] = "classify";
    doc["tol"] = tol;
    json pts = json::array();
    for (const FileSpectrum& fs : items) {
        PointGeometry p = build_point(fs.spec, tol);
        ClassificationReport c = classify(p, tol);
        if (machine)
            pts.push_back(classify_point_json(p, c));
        else
            print_classify_text(p, c);
    }
    if (machine) {
        doc["points"] = pts;
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

const std::vector<std::pair<std::string, std::string>>& builder_signatures() {
    static const std::vector<std::pair<std::string, std::string>> sig = {
        {"clifford", "p n c t"},
        {"austere", "n p lambda c"},
        {"cartan", "p c"},
        {"type_two", "n lambda0 lambda1 c"},
        {"two_quasi_umbilical", "n lambda"},
        {"three_curvature", "n lambda0 lambda1 lambda2 n1 n2 c"},
    };
    return sig;
}

int cmd_catalog_list(bool machine) {
    if (machine) {
        json doc;
        doc["command"] = "catalog_list";
        json bl = json::array();
        for (const auto& [name, params] : builder_signatures()) {
            json b;
            b["name"] = name;
            b["params"] = params;
            bl.push_back(b);
        }
        doc["builders"] = bl;
        json st = json::array();
        for (const CatalogEntry& e : standard_catalog()) {
            json s;
            s["name"] = e.name;
            json pr = json::array();
            for (double v : e.params) pr.push_back(v);
            s["params"] = pr;
            s["label"] = e.spectrum.label;
            s["expected_count"] = e.expected.size();
            st.push_back(s);
        }
        doc["standard"] = st;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "builders:\n";
    for (const auto& [name, params] : builder_signatures())
        std::cout << "  " << pad(name, 22) << params << "\n";
    std::cout << "standard catalog:\n";
    for (const CatalogEntry& e : standard_catalog())
        std::cout << "  " << pad(e.spectrum.label, 38) << e.expected.size()
                  << " expected values\n";
    return 0;
}

int cmd_catalog_run(const std::string& name, const std::vector<std::string>& raw, double tol,
                    unsigned long long seed, bool machine) {
    std::vector<double> params;
    for (const std::string& s : raw) {
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (...) {
            fail_parse("parameter '" + s + "': not a number");
        }
        if (pos != s.size()) fail_parse("parameter '" + s + "': not a number");
        params.push_back(v);
    }
    PrincipalSpectrum spec = catalog_build(name, params);
    PointGeometry p = build_point(spec, tol);
    SuiteReport rep = run_suite(p, tol);
    ClassificationReport cls = classify(p, tol);

    // Expected values apply only when the parameters hit a standard instance
    // exactly; any other parameters run the checks without expectations.
    const CatalogEntry* match = nullptr;
    for (const CatalogEntry& e : standard_catalog())
        if (e.name == name && e.params == params) {
            match = &e;
            break;
        }
    std::vector<ExpectedCheck> checks;
    if (match) checks = evaluate_expected(*match, p, cls, tol);
    bool expected_ok = true;
    for (const auto& chk : checks) expected_ok = expected_ok && chk.ok;
    const bool all = rep.all_passed() && expected_ok;

    FileSpectrum fs;
    fs.spec = spec;
    CongruenceResult cong;
    if (machine) {
        json doc;
        doc["command"] = "catalog_run";
        doc["name"] = name;
        json pr = json::array();
        for (double v : params) pr.push_back(v);
        doc["params"] = pr;
        doc["tol"] = tol;
        doc["check"] = check_point_json(fs, p, rep, cong, seed, tol, false);
        doc["classification"] = classify_point_json(p, cls);
        doc["matched_standard"] = match != nullptr;
        json ex = json::array();
        for (const auto& chk : checks) {
            json e;
            e["key"] = chk.key;
            e["expected"] = chk.expected;
            e["actual"] = chk.actual;
            e["ok"] = chk.ok;
            e["provenance"] = chk.provenance;
            ex.push_back(e);
        }
        doc["expected"] = ex;
        doc["all_ok"] = all;
        std::cout << doc.dump(2) << "\n";
    } else {
        print_check_text(fs, p, rep, cong, seed, tol, false);
        std::cout << "classification:\n";
        print_classify_text(p, cls);
        if (match) {
            std::cout << "expected values (" << checks.size() << "):\n";
            for (const auto& chk : checks)
                std::cout << "  " << pad(chk.key, 26) << "expected " << pad(fmt6(chk.expected), 12)
                          << "actual " << pad(fmt6(chk.actual), 14) << (chk.ok ? "ok" : "MISMATCH")
                          << "  " << chk.provenance << "\n";
        } else {
            std::cout << "expected values: none (parameters do not match a standard instance)\n";
        }
        std::cout << "result: " << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointwise curvature laboratory for hypersurfaces in space forms"};
    app.require_subcommand(1);

    std::string path, format = "text", name;
    double tol = 1e-9;
    unsigned long long seed = 0;
    std::vector<std::string> raw_params;

    CLI::App* sub_check = app.add_subcommand("check", "run the identity suite on a spectrum file");
    sub_check->add_option("path", path, "spectrum file (json)")->required();
    sub_check->add_option("--tol", tol, "pass tolerance");
    sub_check->add_option("--seed", seed, "seed for the congruence covariance probe");
    sub_check->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* sub_classify = app.add_subcommand("classify", "classify the points of a spectrum file");
    sub_classify->add_option("path", path, "spectrum file (json)")->required();
    sub_classify->add_option("--tol", tol, "pass tolerance");
    sub_classify->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* sub_catalog = app.add_subcommand("catalog", "named example instances");
    sub_catalog->require_subcommand(1);
    CLI::App* sub_list = sub_catalog->add_subcommand("list", "list builders and standard instances");
    sub_list->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    CLI::App* sub_run =
        sub_catalog->add_subcommand("run", "build one instance, run check and classify");
    sub_run->add_option("name", name, "builder name")->required();
    sub_run->add_option("params", raw_params, "builder parameters");
    sub_run->add_option("--tol", tol, "pass tolerance");
    sub_run->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool machine = format == "machine";
    try {
        if (sub_check->parsed()) return cmd_check(path, tol, seed, machine);
        if (sub_classify->parsed()) return cmd_classify(path, tol, machine);
        if (sub_list->parsed()) return cmd_catalog_list(machine);
        if (sub_run->parsed()) return cmd_catalog_run(name, raw_params, tol, seed, machine);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
