// Command-line front end: verification suites, point evaluation, Blaschke
// and kernel construction, Schur positivity checks, and interpolation.
//
// Exit codes: 0 success, 1 mathematical failure (failed invariant, negative
// kernel, recursion breakdown, divergence), 2 input or usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "treehardy/json_io.hpp"
#include "treehardy/schur.hpp"
#include "treehardy/verify.hpp"

namespace {

using nlohmann::json;
using namespace treehardy;

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << doc.dump(2) << "\n";
}

int cmd_verify(const RunConfig& config, const std::string& out_path) {
    const std::vector<VerifyRecord> records = run_verification(config);
    bool all_pass = true;
    json jrecords = json::array();
    for (const VerifyRecord& r : records) {
        all_pass = all_pass && r.pass;
        std::printf("[%s] %-14s %-55s residual %.3e  (%s)\n",
                    r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.name.c_str(),
                    r.residual, r.law.c_str());
        jrecords.push_back(json{{"suite", r.suite},
                                {"name", r.name},
                                {"law", r.law},
                                {"residual", r.residual},
                                {"threshold", r.threshold},
                                {"pass", r.pass}});
    }
    std::printf("%zu checks, %s\n", records.size(), all_pass ? "all passed" : "FAILURES");
    const json report{{"config",
                       json{{"q", config.q},
                            {"depth", config.depth},
                            {"degree", config.degree},
                            {"tol", config.tol},
                            {"tol_eig", config.tol_eig},
                            {"inv_threshold", config.inv_threshold},
                            {"seed", config.seed}}},
                      {"records", jrecords},
                      {"pass", all_pass}};
    if (!out_path.empty()) emit(report, out_path);
    return all_pass ? 0 : 1;
}

int cmd_eval(const std::string& series_path, const std::string& point_path,
             const std::string& out_path) {
    const HardySeries s = series_from_json(load_json_file(series_path));
    const KElement c = kelement_from_json(load_json_file(point_path));
    const bool inside = in_disk(c);
    json doc{{"result", to_json(point_eval(s, c))}, {"in_disk", inside}};
    if (!inside)
        doc["warning"] = "point outside the unit disk; the finite sum is still exact";
    emit(doc, out_path);
    return 0;
}

int cmd_blaschke(const std::string& point_path, double tol,
                 const std::string& out_path) {
    const KElement a = kelement_from_json(load_json_file(point_path));
    const BlaschkeResult result = blaschke(a, tol);
    emit(to_json(result.b), out_path);
    return 0;
}

int cmd_schur(const std::string& series_path, const std::string& points_path,
              double tol, double tol_eig, const std::string& out_path) {
    const HardySeries s = series_from_json(load_json_file(series_path));
    const json pts_doc = load_json_file(points_path);
    if (!pts_doc.is_object() || !pts_doc.contains("points") ||
        !pts_doc["points"].is_array())
        throw ParseError("expected {\"points\": [...]}");
    std::vector<KElement> points, vectors;
    for (const json& p : pts_doc["points"])
        points.push_back(kelement_from_json(p));
    if (pts_doc.contains("vectors")) {
        for (const json& v : pts_doc["vectors"])
            vectors.push_back(k2element_from_json(v));
    } else {
        vectors.assign(points.size(), KElement::indicator(0));
    }

    const Eigen::MatrixXcd g = gram(s, points, vectors, tol);
    const PsdReport psd = is_psd(g, tol_eig);
    json jgram = json::array();
    for (int i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.cols(); ++j)
            row.push_back(json::array({g(i, j).real(), g(i, j).imag()}));
        jgram.push_back(std::move(row));
    }
    emit(json{{"psd", psd.psd},
              {"min_eigenvalue", psd.min_eigenvalue},
              {"gram", std::move(jgram)}},
         out_path);
    return psd.psd ? 0 : 1;
}

int cmd_interp(const std::string& problem_path, const std::string& out_path) {
    const InterpolationProblem problem =
        problem_from_json(load_json_file(problem_path));
    const InterpolationSolution solution = interpolate(problem);
    emit(to_json(solution), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator calculus on a homogeneous tree"};
    app.require_subcommand(1);

    RunConfig config;
    std::string out_path, series_path, point_path, points_path, problem_path;
    double tol = 1e-12, tol_eig = 1e-8;

    CLI::App* verify = app.add_subcommand("verify", "run every invariant suite");
    verify->add_option("--q", config.q, "branching order");
    verify->add_option("--depth", config.depth, "truncation depth");
    verify->add_option("--degree", config.degree, "series degree cap");
    verify->add_option("--tol", config.tol, "series truncation tolerance");
    verify->add_option("--tol-eig", config.tol_eig, "eigenvalue tolerance");
    verify->add_option("--inv-threshold", config.inv_threshold,
                       "invertibility threshold");
    verify->add_option("--seed", config.seed, "random seed");
    verify->add_option("--out", out_path, "write the JSON report here");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a series at a point");
    eval->add_option("--series", series_path, "series document")->required();
    eval->add_option("--point", point_path, "point document")->required();
    eval->add_option("--out", out_path, "write the result here");

    CLI::App* bla = app.add_subcommand("blaschke", "Blaschke factor at a point");
    bla->add_option("--point", point_path, "point document")->required();
    bla->add_option("--tol", tol, "series truncation tolerance");
    bla->add_option("--out", out_path, "write the series here");

    CLI::App* schur_cmd = app.add_subcommand("schur", "kernel positivity check");
    schur_cmd->add_option("--series", series_path, "series document")->required();
    schur_cmd->add_option("--points", points_path, "points document")->required();
    schur_cmd->add_option("--tol", tol, "kernel truncation tolerance");
    schur_cmd->add_option("--tol-eig", tol_eig, "eigenvalue tolerance");
    schur_cmd->add_option("--out", out_path, "write the report here");

    CLI::App* interp = app.add_subcommand("interp", "homogeneous interpolation");
    interp->add_option("--problem", problem_path, "problem document")->required();
    interp->add_option("--out", out_path, "write the solution here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(config, out_path);
        if (eval->parsed()) return cmd_eval(series_path, point_path, out_path);
        if (bla->parsed()) return cmd_blaschke(point_path, tol, out_path);
        if (schur_cmd->parsed())
            return cmd_schur(series_path, points_path, tol, tol_eig, out_path);
        if (interp->parsed()) return cmd_interp(problem_path, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainKError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Divergence, breakdown, non-invertibility: the mathematics failed,
        // not the invocation.
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}
