#include "epwlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace epwlab {

json to_json(const QMatrix& m) {
    json entries = json::array();
    for (const Rat& q : m.entries()) entries.push_back(rat_str(q));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix qmatrix_from_json(const json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    std::vector<Rat> entries;
    for (const auto& e : j.at("entries")) entries.push_back(parse_rat(e.get<std::string>()));
    return QMatrix(rows, cols, std::move(entries));
}

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const Term& t : p.terms()) {
        json exp = json::array();
        for (unsigned char e : t.m) exp.push_back(int(e));
        terms.push_back(json{{"exp", exp}, {"coeff", rat_str(t.c)}});
    }
    return json{{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Term term;
        for (const auto& e : t.at("exp")) term.m.push_back(static_cast<unsigned char>(e.get<int>()));
        term.c = parse_rat(t.at("coeff").get<std::string>());
        terms.push_back(std::move(term));
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

json to_json(const Ideal& ideal) {
    json gens = json::array();
    for (const MultiPoly& g : ideal.gens) gens.push_back(to_json(g));
    return json{{"vars", ideal.vars}, {"gens", gens}};
}

Ideal ideal_from_json(const json& j) {
    Ideal ideal;
    ideal.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& g : j.at("gens")) {
        MultiPoly p = multipoly_from_json(g);
        if (p.vars() != ideal.vars) throw std::invalid_argument("ideal_from_json: variable mismatch");
        ideal.gens.push_back(std::move(p));
    }
    return ideal;
}

json to_json(const AltK& a) {
    json coords = json::array();
    for (const Rat& c : a.coords) coords.push_back(rat_str(c));
    return json{{"ambient", a.ambient}, {"grade", a.grade}, {"coords", coords}};
}

AltK altk_from_json(const json& j) {
    AltK a(j.at("ambient").get<int>(), j.at("grade").get<int>());
    const auto& coords = j.at("coords");
    if (coords.size() != a.coords.size()) throw std::invalid_argument("altk_from_json: wrong length");
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] = parse_rat(coords[i].get<std::string>());
    return a;
}

json to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j2 = 0; j2 < m.cols(); ++j2) {
            json terms = json::array();
            for (const Term& t : m.at(i, j2).terms()) {
                json exp = json::array();
                for (unsigned char e : t.m) exp.push_back(int(e));
                terms.push_back(json{{"exp", exp}, {"coeff", rat_str(t.c)}});
            }
            entries.push_back(terms);
        }
    return json{{"vars", m.vars()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMatrix polymatrix_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    PolyMatrix m(vars, rows, cols);
    const auto& entries = j.at("entries");
    if (int(entries.size()) != rows * cols) throw std::invalid_argument("polymatrix_from_json: wrong length");
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            std::vector<Term> terms;
            for (const auto& t : entries[i * cols + c]) {
                Term term;
                for (const auto& e : t.at("exp")) term.m.push_back(static_cast<unsigned char>(e.get<int>()));
                term.c = parse_rat(t.at("coeff").get<std::string>());
                terms.push_back(std::move(term));
            }
            m.at(i, c) = MultiPoly::from_terms(vars, std::move(terms));
        }
    return m;
}

json lagrangian_to_json(const Lagrangian& a) { return json{{"basis", to_json(a.basis)}}; }

json lagrangian_to_json(const Lagrangian& a, const DeltaCertificate& cert) {
    json j = lagrangian_to_json(a);
    json c{{"type", "delta"}, {"v0", to_json(cert.v0)}, {"K", to_json(cert.K)}};
    if (cert.emptiness_degree) c["emptiness_degree"] = *cert.emptiness_degree;
    j["certificate"] = c;
    return j;
}

json lagrangian_to_json(const Lagrangian& a, const ThetaCertificate& cert) {
    json j = lagrangian_to_json(a);
    j["certificate"] = json{{"type", "sigma"}, {"W", to_json(cert.W)}};
    return j;
}

Lagrangian lagrangian_from_json(const json& j) { return Lagrangian{qmatrix_from_json(j.at("basis"))}; }

std::optional<DeltaCertificate> delta_certificate_from_json(const json& j) {
    if (!j.contains("certificate") || j["certificate"].value("type", "") != "delta") return std::nullopt;
    const json& c = j["certificate"];
    DeltaCertificate cert{altk_from_json(c.at("v0")), qmatrix_from_json(c.at("K")), std::nullopt};
    if (c.contains("emptiness_degree")) cert.emptiness_degree = c["emptiness_degree"].get<int>();
    return cert;
}

std::optional<ThetaCertificate> theta_certificate_from_json(const json& j) {
    if (!j.contains("certificate") || j["certificate"].value("type", "") != "sigma") return std::nullopt;
    return ThetaCertificate{qmatrix_from_json(j["certificate"].at("W"))};
}

json to_json(const EPWSextic& s) {
    return json{{"poly", to_json(s.poly)}, {"chart", s.chart}, {"lagrangian_sha256", s.lagrangian_sha256}};
}

EPWSextic sextic_from_json(const json& j) {
    return EPWSextic{multipoly_from_json(j.at("poly")), j.at("chart").get<int>(),
                     j.at("lagrangian_sha256").get<std::string>()};
}

json cover_to_json(const CoverIdeal& c) {
    json j = to_json(c.ideal);
    j["d"] = c.d;
    return j;
}

json k3_to_json(const K3Data& k) {
    return json{{"K", to_json(k.k)},
                {"annK", to_json(k.annk)},
                {"wk_ideal", to_json(k.wk)},
                {"r_form", to_json(k.r)},
                {"s_ideal", to_json(k.s)},
                {"frame", json{{"v0", to_json(k.d.v0)}, {"V0", to_json(k.d.V0)}, {"annK", to_json(k.annk)}}}};
}

json report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(json{{"id", c.id}, {"status", c.status}, {"detail", c.detail}, {"millis", c.millis}});
    return json{{"suite", r.suite}, {"seed", r.seed}, {"checks", checks}, {"passed", r.all_passed()}};
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " (seed " << r.seed << ")\n";
    for (const CheckResult& c : r.checks) {
        os << "  [" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "????") << "] " << c.id
           << " (" << c.millis << " ms)";
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
    }
    os << (r.all_passed() ? "all checks passed" : "FAILURES present") << "\n";
    return os.str();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace epwlab
