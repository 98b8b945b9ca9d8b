#include "treehardy/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace treehardy {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& doc) {
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() ||
        !doc[1].is_number())
        throw ParseError("expected a complex number as [re, im]");
    return Complex{doc[0].get<double>(), doc[1].get<double>()};
}

}  // namespace

json to_json(const KElement& c) {
    json prefix = json::array();
    for (const Complex& v : c.prefix()) prefix.push_back(complex_to_json(v));
    return json{{"prefix", std::move(prefix)}, {"tail", complex_to_json(c.tail())}};
}

json to_json(const HardySeries& s) {
    json coeffs = json::array();
    for (const KElement& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"coeffs", std::move(coeffs)}};
}

json to_json(const InterpolationSolution& solution) {
    json ks = json::array();
    for (const KElement& k : solution.ks) ks.push_back(to_json(k));
    return json{{"blaschke_product", to_json(solution.blaschke_product)},
                {"ks", std::move(ks)},
                {"residuals", solution.residuals}};
}

KElement kelement_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("prefix") || !doc.contains("tail") ||
        !doc["prefix"].is_array())
        throw ParseError("expected {\"prefix\": [...], \"tail\": [re, im]}");
    std::vector<Complex> prefix;
    for (const json& v : doc["prefix"]) prefix.push_back(complex_from_json(v));
    return KElement{std::move(prefix), complex_from_json(doc["tail"])};
}

KElement k2element_from_json(const json& doc) {
    const KElement c = kelement_from_json(doc);
    if (!c.has_zero_tail())
        throw ParseError("square-summable element must have tail [0, 0]");
    return c;
}

HardySeries series_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("expected {\"coeffs\": [...]}");
    std::vector<KElement> coeffs;
    for (const json& c : doc["coeffs"]) coeffs.push_back(kelement_from_json(c));
    return HardySeries{std::move(coeffs)};
}

InterpolationProblem problem_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw ParseError("expected {\"points\": [...], ...}");
    InterpolationProblem problem;
    for (const json& c : doc["points"])
        problem.points.push_back(kelement_from_json(c));
    if (doc.contains("tol")) {
        if (!doc["tol"].is_number()) throw ParseError("tol must be a number");
        problem.tol = doc["tol"].get<double>();
    }
    if (doc.contains("inv_threshold")) {
        if (!doc["inv_threshold"].is_number())
            throw ParseError("inv_threshold must be a number");
        problem.inv_threshold = doc["inv_threshold"].get<double>();
    }
    return problem;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return doc;
}

}  // namespace treehardy
