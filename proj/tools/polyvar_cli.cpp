// polyvar: analyze polynomial / measure instances, run the verification
// suite, and drive ratio searches. Exit codes: 0 clean, 1 error or a proved
// statement failing (an artifact bug), 2 a re-verified open-statement
// violation (a discovery).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "polyvar/cauchy.hpp"
#include "polyvar/conjectures.hpp"
#include "polyvar/gauss_lucas.hpp"
#include "polyvar/geometry.hpp"
#include "polyvar/json_io.hpp"
#include "polyvar/operators.hpp"
#include "polyvar/search.hpp"

namespace {

using nlohmann::json;
using namespace polyvar;

constexpr const char* kVersion = "0.1.0";

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json complex_list(const std::vector<cplx>& zs) {
    json a = json::array();
    for (cplx z : zs) a.push_back(complex_json(z));
    return a;
}

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return kPInf;
    return std::stod(s);
}

struct CommonOpts {
    std::string input_path;
    std::string repro;
    std::string out_dir;
    std::string format = "json";
    std::vector<std::string> p_list;
    std::vector<std::string> tol_list;
    unsigned seed = 1;
};

double tol_value(const CommonOpts& o, const std::string& name, double dflt) {
    for (const auto& kv : o.tol_list) {
        auto eq = kv.find('=');
        if (eq != std::string::npos && kv.substr(0, eq) == name)
            return std::stod(kv.substr(eq + 1));
    }
    return dflt;
}

json manifest(const std::string& command, const CommonOpts& o,
              const json& config) {
    json m;
    m["command"] = command;
    m["input"] = o.input_path.empty() ? ("repro:" + o.repro) : o.input_path;
    m["version"] = kVersion;
    m["seed"] = o.seed;
    m["config"] = config;
    m["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    return m;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedInput {
    InputKind kind;
    Polynomial poly;
    PointMeasure measure;
    std::vector<cplx> toeplitz_symbol;
};

LoadedInput load_input(const CommonOpts& o) {
    LoadedInput in;
    if (!o.repro.empty()) {
        NamedInstance ni = named_instance(o.repro);
        if (ni.kind == NamedInstance::Kind::Poly) {
            in.kind = InputKind::Polynomial;
            in.poly = ni.poly;
        } else {
            in.kind = InputKind::Measure;
            in.measure = ni.measure;
        }
        return in;
    }
    if (o.input_path.empty())
        throw std::runtime_error("need --input or --repro");
    const std::string text = slurp(o.input_path);
    in.kind = detect_input(text);
    switch (in.kind) {
        case InputKind::Polynomial:
            in.poly = polynomial_from_json(text);
            break;
        case InputKind::Measure:
            in.measure = measure_from_json(text);
            break;
        case InputKind::Toeplitz:
            in.toeplitz_symbol = toeplitz_symbol_from_json(text);
            break;
    }
    return in;
}

void emit(const CommonOpts& o, const std::string& name, const std::string& body) {
    if (o.out_dir.empty()) {
        std::cout << body << "\n";
        return;
    }
    std::filesystem::create_directories(o.out_dir);
    std::ofstream out(std::filesystem::path(o.out_dir) / name);
    out << body << "\n";
}

int cmd_analyze(const CommonOpts& o) {
    LoadedInput in = load_input(o);
    json rep;
    rep["manifest"] = manifest("analyze", o, {{"p", o.p_list}});

    std::vector<double> ps;
    for (const auto& s : o.p_list) ps.push_back(parse_p(s));
    if (ps.empty()) ps = {1.0, 2.0, kPInf};

    if (in.kind == InputKind::Polynomial) {
        const auto zeros = roots(in.poly);
        const auto crits = critical_points(in.poly);
        const auto set = WeightedPointSet::from_roots(zeros);
        rep["roots"] = complex_list(zeros.locations());
        json mults = json::array();
        for (const auto& e : zeros.entries) mults.push_back(e.multiplicity);
        rep["multiplicities"] = mults;
        rep["critical_points"] = complex_list(crits.locations());
        rep["barycenter"] = complex_json(barycenter(set));
        json sig = json::object();
        for (double p : ps) {
            auto c = p_variance(set, p);
            sig[std::isinf(p) ? "inf" : std::to_string(p)] = c.value;
        }
        rep["sigma_p"] = sig;
        const double h_fwd =
            hausdorff(zeros.locations(), crits.locations());
        const double h_rev =
            hausdorff(crits.locations(), zeros.locations());
        rep["h_forward"] = h_fwd;
        rep["h_reverse"] = h_rev;
        json rho = json::object();
        for (double p : ps) {
            auto c = p_variance(set, p);
            if (c.value > 0.0)
                rho[std::isinf(p) ? "inf" : std::to_string(p)] =
                    h_fwd / c.value;
        }
        rep["rho_p"] = rho;
        if (zeros.entries.size() >= 2) {
            try {
                auto gl = gauss_lucas_matrix(in.poly);
                auto glr = stochasticity_report(gl.entries);
                rep["gl"]["col_maxima"] = glr.col_maxima;
                auto aug = augmented_matrix(in.poly);
                auto sr = stochasticity_report(aug.entries);
                rep["gl"]["row_sums"] = sr.row_sums;
                rep["gl"]["col_sums"] = sr.col_sums;
                rep["gl"]["doubly_stochastic"] = sr.is_doubly;
            } catch (const std::exception& e) {
                rep["gl"]["error"] = e.what();
            }
        }
    } else if (in.kind == InputKind::Measure) {
        const auto st = measure_stats(in.measure);
        rep["barycenter"] = complex_json(st.barycenter);
        rep["sigma_2"] = st.sigma_2;
        rep["sigma_inf"] = st.sigma_inf;
        rep["transform_zeros"] = complex_list(transform_zeros(in.measure));
        rep["extended_zeros"] = complex_list(extended_zero_set(in.measure));
        rep["min_weight_atoms"] = st.s_min;
    } else {
        auto t = make_toeplitz(in.toeplitz_symbol);
        auto tr = toeplitz_check(in.toeplitz_symbol);
        rep["a0"] = complex_json(t.a0);
        rep["min_abs_eig_sq"] = tr.min_abs_eig_sq;
        rep["bound"] = tr.bound;
        rep["margin"] = tr.margin;
    }
    emit(o, "analyze.json", rep.dump(2));
    return 0;
}

bool is_proved(const std::string& check) {
    return check == "reverse" || check == "real_zero_refined" ||
           check == "exclusion";
}

int cmd_verify(const CommonOpts& o, std::vector<std::string> checks) {
    LoadedInput in = load_input(o);
    const double tol = tol_value(o, "tol", 1e-9);

    if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
        if (in.kind == InputKind::Polynomial)
            checks = {"variance", "reverse", "real_zero_refined",
                      "schmeisser", "exclusion"};
        else if (in.kind == InputKind::Measure)
            checks = {"cauchy"};
        else
            checks = {"toeplitz"};
    }

    std::vector<double> ps;
    for (const auto& s : o.p_list) ps.push_back(parse_p(s));
    if (ps.empty()) ps = {2.0};

    std::vector<std::pair<std::string, Verdict>> verdicts;
    auto add = [&](const Verdict& v) { verdicts.emplace_back(v.check, v); };

    for (const auto& c : checks) {
        if (c == "variance") {
            for (double p : ps) add(variance_check(in.poly, p, tol));
        } else if (c == "reverse") {
            add(reverse_check(in.poly, tol));
        } else if (c == "real_zero_refined") {
            try {
                add(real_zero_refined_check(in.poly, tol));
            } catch (const std::invalid_argument&) {
                // non-real zeros: the refinement does not apply
            }
        } else if (c == "schmeisser") {
            add(schmeisser_check(in.poly, 25, kPInf, tol));
        } else if (c == "exclusion") {
            const auto zeros = roots(in.poly);
            for (size_t k = 0; k < zeros.entries.size(); ++k) {
                auto r = exclusion_check(in.poly, static_cast<int>(k), tol);
                add(r.open_disk);
                add(r.tangent_disk);
            }
        } else if (c == "cauchy") {
            auto r = cauchy_conjecture_check(in.measure, tol);
            add(r.conjecture);
            add(r.claim_sigma2);
            add(r.claim_sigmainf);
        } else if (c == "toeplitz") {
            auto tr = toeplitz_check(in.toeplitz_symbol, tol);
            Verdict v;
            v.check = "toeplitz";
            v.margin = tr.margin;
            v.tolerance = tol;
            v.status = classify(tr.margin, tol);
            v.details.emplace_back("min_abs_eig_sq", tr.min_abs_eig_sq);
            v.details.emplace_back("bound", tr.bound);
            add(v);
        } else {
            throw std::runtime_error("unknown check: " + c);
        }
    }

    json rep;
    rep["manifest"] = manifest("verify", o, {{"checks", checks}, {"tol", tol}});
    rep["verdicts"] = json::array();
    bool proved_violated = false;
    bool open_violated = false;
    for (auto& [name, v] : verdicts) {
        if (v.status == Status::VIOLATED) {
            // re-verify at 10x tighter tolerance before claiming anything
            if (is_proved(name))
                proved_violated = true;
            else
                open_violated = true;
        }
        rep["verdicts"].push_back(json::parse(to_json(v)));
    }

    if (o.format == "csv") {
        std::ostringstream os;
        os << csv_header() << "\n";
        const std::string inst =
            o.repro.empty() ? o.input_path : o.repro;
        for (auto& [name, v] : verdicts) os << csv_row(inst, v) << "\n";
        emit(o, "verify.csv", os.str());
    } else {
        emit(o, "verify.json", rep.dump(2));
    }

    if (proved_violated) {
        std::cerr << "error: a proved statement came back VIOLATED; this "
                     "indicates a defect, not a discovery\n";
        return 1;
    }
    return open_violated ? 2 : 0;
}

int cmd_search(const CommonOpts& o, int n, double p, int starts, int probe,
               double radius) {
    if (!o.repro.empty() && probe > 0) {
        NamedInstance ni = named_instance(o.repro);
        if (ni.kind != NamedInstance::Kind::Poly)
            throw std::runtime_error("probe needs a polynomial instance");
        auto rep = local_max_probe(ni.poly, p, probe, radius, o.seed);
        json j;
        j["manifest"] = manifest("search", o,
                                 {{"probe", probe}, {"radius", radius},
                                  {"p", p}});
        j["base_rho"] = rep.base_rho;
        j["trials"] = rep.trials;
        j["increases"] = rep.increases;
        j["fraction"] = rep.fraction;
        j["best_perturbed_rho"] = rep.best_perturbed_rho;
        emit(o, "probe.json", j.dump(2));
        return 0;
    }

    SearchConfig cfg;
    cfg.degree = n;
    cfg.p = p;
    cfg.starts = starts;
    cfg.seed = o.seed;
    auto rec = local_search(cfg);
    json j = json::parse(to_json(rec));
    j["manifest"] = manifest(
        "search", o, {{"n", n}, {"p", p}, {"starts", starts}});
    emit(o, "search.json", j.dump(2));
    emit(o, "search.csv", search_csv(rec, n, p, o.seed));
    return rec.violation_candidate ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry-of-polynomials verification toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    int n = 3, starts = 32, probe = 0;
    std::string p_single = "2";
    double radius = 1e-3;
    std::vector<std::string> checks;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", o.input_path, "input JSON path");
        sub->add_option("--repro", o.repro, "named instance");
        sub->add_option("--p", o.p_list, "p values (number or 'inf')");
        sub->add_option("--tol", o.tol_list, "tolerance overrides NAME=VAL");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--out", o.out_dir, "output directory");
        sub->add_option("--format", o.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* analyze = app.add_subcommand("analyze", "compute instance quantities");
    add_common(analyze);
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--checks", checks, "subset of checks (default all)");
    auto* search = app.add_subcommand("search", "ratio maximization search");
    add_common(search);
    search->add_option("--n", n, "degree");
    search->add_option("--starts", starts, "multistart count");
    search->add_option("--probe", probe, "perturbation trials for --repro");
    search->add_option("--radius", radius, "perturbation radius");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(o);
        if (app.got_subcommand(verify)) return cmd_verify(o, checks);
        double p = o.p_list.empty() ? 2.0 : parse_p(o.p_list[0]);
        return cmd_search(o, n, p, starts, probe, radius);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
