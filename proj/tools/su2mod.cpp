// Command line front end. Every subcommand prints one JSON document to
// stdout (or --out FILE). Exit codes: 0 success, 2 a verification
// subcommand ran and failed, 1 usage or input errors.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "su2mod/commutant.hpp"
#include "su2mod/cyclotomic.hpp"
#include "su2mod/json_io.hpp"
#include "su2mod/modular_data.hpp"
#include "su2mod/qseries.hpp"
#include "su2mod/sectors.hpp"
#include "su2mod/suite.hpp"

namespace {

using su2mod::Json;

std::complex<double> parse_tau(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("tau must be given as RE,IM");
    const double re = std::stod(text.substr(0, comma));
    const double im = std::stod(text.substr(comma + 1));
    return {re, im};
}

Json tau_json(std::complex<double> tau) { return su2mod::json_of(tau); }

Json matrix_with_label(const su2mod::InvariantMatrix& m) {
    return Json{{"label", su2mod::ade_classify(m).str()}, {"matrix", su2mod::json_of(m)}};
}

su2mod::LabelFilter parse_filter(const std::string& name) {
    if (name == "all") return su2mod::LabelFilter::All;
    if (name == "odd") return su2mod::LabelFilter::Odd;
    if (name == "even") return su2mod::LabelFilter::Even;
    throw std::invalid_argument("filter must be all, odd or even");
}

struct Output {
    Json document;
    int exit_code = 0;
    bool produced = false;

    void set(Json j, int code = 0) {
        document = std::move(j);
        exit_code = code;
        produced = true;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data over the level-k su(2) character basis"};
    app.require_subcommand(0, 1);

    std::string out_path;
    bool seed_suite = false;
    app.add_option("--out", out_path, "write the JSON document to this file");
    app.add_flag("--seed-suite", seed_suite, "run the full verification battery");

    Output output;

    auto* cmd_md = app.add_subcommand("modular-data", "exact S entries and T exponents");
    int md_level = 0;
    cmd_md->add_option("--level", md_level, "level k >= 1")->required();
    cmd_md->callback([&] {
        const su2mod::ModularData md(md_level);
        Json t_exp = Json::array();
        for (int l = 1; l < md.n(); ++l) t_exp.push_back(su2mod::to_string(md.t_exponent(l)));
        Json s_rows = Json::array();
        for (int l = 1; l < md.n(); ++l) {
            Json row = Json::array();
            for (int m = 1; m < md.n(); ++m) row.push_back(su2mod::json_of(md.s_entry(l, m)));
            s_rows.push_back(std::move(row));
        }
        output.set(Json{{"level", md.level()},
                        {"n", md.n()},
                        {"period", md.period()},
                        {"tExp", std::move(t_exp)},
                        {"sHat", std::move(s_rows)}});
    });

    auto* cmd_cos = app.add_subcommand("cos-sum", "exact cosine sum over a label range");
    int cos_rho = 0;
    long long cos_delta = 0;
    std::string cos_filter = "all";
    cmd_cos->add_option("--rho", cos_rho, "rho >= 2")->required();
    cmd_cos->add_option("--delta", cos_delta, "integer offset")->required();
    cmd_cos->add_option("--filter", cos_filter, "label subset")
        ->check(CLI::IsMember({"all", "odd", "even"}));
    cmd_cos->callback([&] {
        const su2mod::Integer value =
            su2mod::cos_sum(cos_rho, cos_delta, parse_filter(cos_filter));
        output.set(Json{{"rho", cos_rho},
                        {"delta", cos_delta},
                        {"filter", cos_filter},
                        {"value", value.get_str()}});
    });

    auto* cmd_comm = app.add_subcommand("commutant", "primitive integer commutant basis");
    int comm_level = 0;
    cmd_comm->add_option("--level", comm_level, "level k >= 1")->required();
    cmd_comm->callback([&] {
        const su2mod::ModularData md(comm_level);
        const auto basis = su2mod::commutant_basis(md);
        Json arr = Json::array();
        for (const auto& b : basis) arr.push_back(su2mod::json_of(b));
        output.set(Json{{"level", md.level()},
                        {"n", md.n()},
                        {"dimension", basis.size()},
                        {"basis", std::move(arr)}});
    });

    auto* cmd_inv = app.add_subcommand("invariants", "enumerate the physical invariants");
    int inv_level = 0, inv_bound = 3;
    cmd_inv->add_option("--level", inv_level, "level k >= 1")->required();
    cmd_inv->add_option("--bound", inv_bound, "coefficient bound (default 3)");
    cmd_inv->callback([&] {
        const su2mod::ModularData md(inv_level);
        const auto res = su2mod::enumerate_invariants(md, inv_bound);
        bool verified = true;
        Json arr = Json::array();
        for (const auto& m : res.invariants) {
            verified = verified && md.t_commutes(m) && md.s_commutes(m);
            arr.push_back(matrix_with_label(m));
        }
        output.set(Json{{"level", md.level()},
                        {"n", md.n()},
                        {"bound", inv_bound},
                        {"count", res.invariants.size()},
                        {"boundTouched", res.bound_touched},
                        {"pass", verified},
                        {"invariants", std::move(arr)}},
                   verified ? 0 : 2);
    });

    auto* cmd_classify = app.add_subcommand("classify", "series label of an invariant matrix");
    std::string classify_in;
    cmd_classify->add_option("--in", classify_in, "JSON file (stdin when omitted)");
    cmd_classify->callback([&] {
        Json parsed;
        if (classify_in.empty()) {
            parsed = Json::parse(std::cin);
        } else {
            std::ifstream f(classify_in);
            if (!f) throw std::runtime_error("cannot open input file: " + classify_in);
            parsed = Json::parse(f);
        }
        const auto m = su2mod::invariant_from_json(parsed);
        output.set(Json{{"n", m.n}, {"label", su2mod::ade_classify(m).str()}});
    });

    auto* cmd_chars = app.add_subcommand("characters", "exact q-expansions of the characters");
    int chars_level = 0, chars_order = 200;
    cmd_chars->add_option("--level", chars_level, "level k >= 1")->required();
    cmd_chars->add_option("--order", chars_order, "retained coefficients (default 200)");
    cmd_chars->callback([&] {
        const int n = chars_level + 2;
        Json arr = Json::array();
        for (int l = 1; l < n; ++l) {
            Json entry{{"label", l}};
            Json body = su2mod::json_of(su2mod::affine_character(chars_level, l - 1, chars_order));
            for (auto& [key, value] : body.items()) entry[key] = std::move(value);
            arr.push_back(std::move(entry));
        }
        output.set(Json{{"level", chars_level},
                        {"n", n},
                        {"order", chars_order},
                        {"characters", std::move(arr)}});
    });

    auto* cmd_vt = app.add_subcommand("verify-t", "exact phase check of the characters");
    int vt_level = 0, vt_order = 50;
    cmd_vt->add_option("--level", vt_level, "level k >= 1")->required();
    cmd_vt->add_option("--order", vt_order, "retained coefficients (default 50)");
    cmd_vt->callback([&] {
        const auto report = su2mod::verify_t_transform(vt_level, vt_order);
        Json failed = Json::array();
        for (int l : report.failed_labels) failed.push_back(l);
        output.set(Json{{"level", vt_level},
                        {"order", vt_order},
                        {"pass", report.pass},
                        {"failedLabels", std::move(failed)}},
                   report.pass ? 0 : 2);
    });

    auto* cmd_vs = app.add_subcommand("verify-s", "numeric sine transform check");
    int vs_level = 0, vs_order = 200;
    std::string vs_tau = "0,1";
    double vs_tol = 1e-8;
    cmd_vs->add_option("--level", vs_level, "level k >= 1")->required();
    cmd_vs->add_option("--tau", vs_tau, "evaluation point RE,IM (default 0,1)");
    cmd_vs->add_option("--order", vs_order, "retained coefficients (default 200)");
    cmd_vs->add_option("--tol", vs_tol, "residual tolerance (default 1e-8)");
    cmd_vs->callback([&] {
        const auto tau = parse_tau(vs_tau);
        const double residual = su2mod::verify_s_transform(vs_level, tau, vs_order);
        const bool pass = residual < vs_tol;
        output.set(Json{{"level", vs_level},
                        {"tau", tau_json(tau)},
                        {"order", vs_order},
                        {"tolerance", vs_tol},
                        {"residual", residual},
                        {"pass", pass}},
                   pass ? 0 : 2);
    });

    auto* cmd_sp = app.add_subcommand("super-partition",
                                      "total partition matrix from the sector sum");
    int sp_rho = 0, sp_order = 0;
    std::string sp_tau = "0.5,1";
    cmd_sp->add_option("--rho", sp_rho, "rho >= 2 (level k = 4 rho - 2)")->required();
    cmd_sp->add_option("--order", sp_order, "enable a numeric S check at this order");
    cmd_sp->add_option("--tau", sp_tau, "numeric check point RE,IM (default 0.5,1)");
    cmd_sp->callback([&] {
        const auto sp = su2mod::super_partition(sp_rho);
        const auto expected = su2mod::InvariantMatrix::identity(4 * sp_rho) +
                              su2mod::d_odd_invariant(sp_rho);
        bool pass = sp.matrix == expected;
        Json doc{{"rho", sp_rho},
                 {"n", 4 * sp_rho},
                 {"matrix", su2mod::json_of(sp.matrix)},
                 {"equalsExpected", pass}};
        if (sp_order > 0) {
            const auto tau = parse_tau(sp_tau);
            const auto z = su2mod::evaluate_partition(sp.matrix, tau, sp_order);
            const auto zs = su2mod::evaluate_partition(sp.matrix, -1.0 / tau, sp_order);
            const double residual = std::abs(z - zs);
            pass = pass && residual < 1e-6;
            doc["numeric"] = Json{{"tau", tau_json(tau)},
                                  {"zTau", su2mod::json_of(z)},
                                  {"zSTau", su2mod::json_of(zs)},
                                  {"residual", residual},
                                  {"tolerance", 1e-6}};
        }
        doc["pass"] = pass;
        output.set(std::move(doc), pass ? 0 : 2);
    });

    auto* cmd_vp = app.add_subcommand("verify-prop52",
                                      "exact invariance of the partition matrices");
    int vp_rho = 0;
    cmd_vp->add_option("--rho", vp_rho, "rho >= 2")->required();
    cmd_vp->callback([&] {
        const auto report = su2mod::check_super_invariance(vp_rho);
        output.set(Json{{"rho", vp_rho},
                        {"tInvariant", report.t_invariant()},
                        {"sInvariant", report.s_invariant()},
                        {"detail",
                         Json{{"combinedT", report.combined_t},
                              {"combinedS", report.combined_s},
                              {"identityT", report.identity_t},
                              {"identityS", report.identity_s},
                              {"reflectionT", report.reflection_t},
                              {"reflectionS", report.reflection_s}}},
                        {"pass", report.pass()}},
                   report.pass() ? 0 : 2);
    });

    auto* cmd_probe = app.add_subcommand("conjecture-probe",
                                         "numeric S action on the sector span");
    int probe_rho = 0, probe_order = 0, probe_precision = 10;
    cmd_probe->add_option("--rho", probe_rho, "rho >= 2")->required();
    cmd_probe->add_option("--order", probe_order, "enable a series cross-check at this order");
    cmd_probe->add_option("--precision", probe_precision, "stability digits (default 10)");
    cmd_probe->callback([&] {
        const auto probe = su2mod::unitarity_probe(probe_rho, probe_order, probe_precision);
        Json rows = Json::array();
        for (int i = 0; i < probe.rep_matrix.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < probe.rep_matrix.cols(); ++j)
                row.push_back(su2mod::json_of(std::complex<double>(probe.rep_matrix(i, j), 0)));
            rows.push_back(std::move(row));
        }
        const bool pass = probe.stable && probe.unitarity_defect < 1e-9;
        Json doc{{"rho", probe_rho},
                 {"span", probe.span},
                 {"stable", probe.stable},
                 {"stabilityResidual", probe.stability_residual},
                 {"unitarityDefect", probe.unitarity_defect},
                 {"representationMatrix", std::move(rows)}};
        if (probe.series_residual >= 0) doc["seriesResidual"] = probe.series_residual;
        doc["pass"] = pass;
        output.set(std::move(doc), pass ? 0 : 2);
    });

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }

    try {
        if (seed_suite) {
            const auto results = su2mod::suite::run_all();
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                arr.push_back(Json{{"number", r.number},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail},
                                   {"seconds", r.seconds}});
            }
            output.set(Json{{"criteria", std::move(arr)}, {"pass", all}}, all ? 0 : 2);
        }
        if (!output.produced) {
            std::cerr << app.help() << std::endl;
            return 1;
        }
        if (out_path.empty()) {
            std::cout << output.document.dump(2) << std::endl;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open output file: " + out_path);
            f << output.document.dump(2) << std::endl;
        }
        return output.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
