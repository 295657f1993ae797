#include "polyvar/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyvar {

namespace {

using nlohmann::json;

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("expected number or [re, im] pair");
}

}  // namespace

std::string to_json(const Polynomial& p) {
    json j;
    j["coeffs"] = json::array();
    for (cplx c : p.coeffs()) j["coeffs"].push_back(complex_to_json(c));
    return j.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.contains("coeffs")) {
        std::vector<cplx> c;
        for (const auto& e : j["coeffs"]) c.push_back(complex_from_json(e));
        return Polynomial(c);
    }
    if (j.contains("roots")) {
        RootMultiset r;
        for (const auto& e : j["roots"]) {
            RootMultiset::Entry entry;
            entry.location =
                cplx(e.value("re", 0.0), e.value("im", 0.0));
            entry.multiplicity = e.value("mult", 1);
            r.entries.push_back(entry);
        }
        cplx lead(1.0);
        if (j.contains("leading")) lead = complex_from_json(j["leading"]);
        return from_roots(r, lead);
    }
    throw std::invalid_argument("polynomial JSON needs 'coeffs' or 'roots'");
}

std::string to_json(const PointMeasure& mu) {
    json j;
    j["atoms"] = json::array();
    for (const auto& a : mu.atoms())
        j["atoms"].push_back({{"re", a.location.real()},
                              {"im", a.location.imag()},
                              {"w", a.weight}});
    return j.dump();
}

PointMeasure measure_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.contains("atoms"))
        throw std::invalid_argument("measure JSON needs 'atoms'");
    std::vector<PointMeasure::Atom> atoms;
    for (const auto& e : j["atoms"])
        atoms.push_back({cplx(e.value("re", 0.0), e.value("im", 0.0)),
                         e.value("w", 1.0)});
    return PointMeasure(atoms);
}

std::string to_json(const Verdict& v) {
    json j;
    j["check"] = v.check;
    j["status"] = to_string(v.status);
    j["margin"] = v.margin;
    j["witness"] = complex_to_json(v.witness);
    j["tolerances"] = {{"base", v.tolerance}, {"guard_band", 10.0 * v.tolerance}};
    if (!v.note.empty()) j["note"] = v.note;
    json d = json::object();
    for (const auto& [k, val] : v.details) d[k] = val;
    j["details"] = d;
    return j.dump();
}

std::string csv_header() { return "instance,check,status,margin,tolerance"; }

std::string csv_row(const std::string& instance, const Verdict& v) {
    std::ostringstream os;
    os.precision(17);
    os << instance << ',' << v.check << ',' << to_string(v.status) << ','
       << v.margin << ',' << v.tolerance;
    return os.str();
}

std::string to_json(const ToeplitzInstance& t) {
    json j;
    j["a"] = json::array();
    for (cplx c : t.a) j["a"].push_back(complex_to_json(c));
    j["a0"] = complex_to_json(t.a0);
    return j.dump();
}

std::vector<cplx> toeplitz_symbol_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.contains("a"))
        throw std::invalid_argument("toeplitz JSON needs 'a'");
    std::vector<cplx> a;
    for (const auto& e : j["a"]) a.push_back(complex_from_json(e));
    return a;
}

std::string to_json(const SearchRecord& rec) {
    json j;
    j["best_rho"] = rec.best_rho;
    j["best_start"] = rec.best_start;
    j["total_evaluations"] = rec.total_evaluations;
    j["violation_candidate"] = rec.violation_candidate;
    j["best_roots"] = json::array();
    for (cplx z : rec.best_roots) j["best_roots"].push_back(complex_to_json(z));
    return j.dump();
}

std::string search_csv(const SearchRecord& rec, int degree, double p,
                       unsigned seed) {
    std::ostringstream os;
    os.precision(17);
    os << "seed,n,p,start,rho,roots\n";
    for (const auto& s : rec.starts) {
        os << seed << ',' << degree << ',' << p << ',' << s.start_index << ','
           << s.rho << ',';
        for (size_t k = 0; k < s.roots.size(); ++k) {
            if (k) os << ';';
            os << s.roots[k].real() << '+' << s.roots[k].imag() << 'i';
        }
        os << '\n';
    }
    return os.str();
}

InputKind detect_input(const std::string& text) {
    const json j = json::parse(text);
    if (j.contains("coeffs") || j.contains("roots"))
        return InputKind::Polynomial;
    if (j.contains("atoms")) return InputKind::Measure;
    if (j.contains("a")) return InputKind::Toeplitz;
    throw std::invalid_argument("unrecognized input document");
}

}  // namespace polyvar
