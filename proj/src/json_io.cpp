#include "leecodes/json_io.hpp"

#include <stdexcept>

namespace leecodes {

namespace {

std::string metric_name(Metric metric) {
    switch (metric) {
        case Metric::Lee: return "lee";
        case Metric::Hamming: return "hamming";
        case Metric::Manhattan: return "manhattan";
    }
    throw std::logic_error("unreachable");
}

Metric metric_from_name(const std::string& name) {
    if (name == "lee") return Metric::Lee;
    if (name == "hamming") return Metric::Hamming;
    if (name == "manhattan") return Metric::Manhattan;
    throw std::invalid_argument("unknown metric: " + name);
}

}  // namespace

Json code_to_json(const ModularCode& code) {
    Json j;
    j["kind"] = "modular_code";
    j["n"] = code.n();
    j["m"] = code.m();
    j["metric"] = metric_name(code.metric());
    Json words = Json::array();
    for (auto key : code.encoded()) words.push_back(decode_word(key, code.n(), code.m()));
    j["codewords"] = std::move(words);
    return j;
}

ModularCode code_from_json(const Json& j) {
    if (j.value("kind", "") != "modular_code")
        throw std::invalid_argument("expected a modular_code document");
    const int n = j.at("n").get<int>();
    const Coord m = j.at("m").get<Coord>();
    Metric metric = metric_from_name(j.at("metric").get<std::string>());
    std::vector<CoordVec> words;
    for (const auto& w : j.at("codewords")) words.push_back(w.get<CoordVec>());
    return ModularCode(n, m, metric, words);
}

Json lattice_to_json(const Lattice& lattice) {
    Json j;
    j["kind"] = "lattice";
    j["n"] = lattice.dim();
    j["rows"] = lattice.rows();
    return j;
}

Lattice lattice_from_json(const Json& j) {
    if (j.value("kind", "") != "lattice") throw std::invalid_argument("expected a lattice document");
    const int n = j.at("n").get<int>();
    auto rows = j.at("rows").get<std::vector<CoordVec>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("lattice document: row count differs from n");
    return Lattice(std::move(rows));
}

Json permutation_to_json(const PermutationPlan& pi) {
    Json j;
    j["size"] = pi.size();
    j["map"] = pi.mapping();
    return j;
}

PermutationPlan permutation_from_json(const Json& j) {
    auto map = j.at("map").get<std::vector<int>>();
    if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(map.size()))
        throw std::invalid_argument("permutation document: size field disagrees with map");
    return PermutationPlan(std::move(map));
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["kind"] = "certificate";
    j["check"] = cert.check;
    j["mode"] = cert.mode;
    j["pass"] = cert.pass;
    j["detail"] = cert.detail;
    j["space_size"] = cert.space_size.get_str();
    j["code_size"] = cert.code_size.get_str();
    j["ball_size"] = cert.ball_size.get_str();
    if (cert.min_distance.has_value()) j["min_distance"] = *cert.min_distance;
    if (cert.violation.has_value()) j["violation"] = *cert.violation;
    j["all_even_weight"] = cert.all_even_weight;
    if (cert.samples > 0) {
        j["seed"] = cert.seed;
        j["samples"] = cert.samples;
    }
    j["elapsed_seconds"] = cert.elapsed_seconds;
    return j;
}

Json window_report_to_json(const WindowReport& report) {
    Json j;
    j["kind"] = "window_report";
    j["window"] = {report.window.x0, report.window.y0, report.window.x1, report.window.y1};
    j["margin"] = report.margin;
    j["axis"] = report.axis;
    j["exact_cover"] = report.exact_cover;
    j["centers_used"] = report.centers_used;
    Json hist = Json::object();
    for (const auto& [mult, count] : report.histogram) hist[std::to_string(mult)] = count;
    j["histogram"] = std::move(hist);
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace leecodes
