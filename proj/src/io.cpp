#include "kprab/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kprab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

BVPConfig parse_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.contains("schema") && j["schema"].get<int>() != 1)
        throw DomainError("config: unsupported schema version");
    BVPConfig cfg;
    cfg.a = j.at("a").get<double>();
    cfg.b = j.at("b").get<double>();
    cfg.xi = j.at("xi").get<double>();
    cfg.eta = j.at("eta").get<double>();
    cfg.params.k = j.at("k").get<double>();
    cfg.params.rho = j.at("rho").get<double>();
    cfg.params.beta = j.at("beta").get<double>();
    cfg.params.gamma_p = j.at("gamma").get<double>();
    cfg.params.omega = j.at("omega").get<double>();
    return cfg;
}

BVPConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("csv: cannot open " + path);
    std::vector<double> nodes, values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string c1, c2;
        if (!std::getline(ls, c1, ',') || !std::getline(ls, c2))
            throw DomainError("csv: expected two columns in " + path);
        try {
            std::size_t p1 = 0, p2 = 0;
            double t = std::stod(c1, &p1);
            double v = std::stod(c2, &p2);
            nodes.push_back(t);
            values.push_back(v);
        } catch (const std::exception&) {
            if (first) {
                first = false;
                continue; // header row
            }
            throw DomainError("csv: non-numeric row in " + path);
        }
        first = false;
    }
    return GridFunction(std::move(nodes), std::move(values));
}

void write_grid_csv(const std::string& path, const GridFunction& g) {
    std::ofstream out(path);
    if (!out)
        throw DomainError("csv: cannot write " + path);
    out << "node,value\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << format_double(g.nodes[i]) << ',' << format_double(g.values[i])
            << '\n';
}

std::string report_to_json(const InequalityReport& rep) {
    std::ostringstream os;
    os << "{\"lhs\": " << format_double(rep.lhs)
       << ", \"rhs\": " << format_double(rep.rhs)
       << ", \"margin\": " << format_double(rep.margin) << ", \"verdict\": \""
       << (rep.verdict == Verdict::NoNontrivialSolutionCertified
               ? "NoNontrivialSolutionCertified"
               : "NecessaryConditionHolds")
       << "\"}";
    return os.str();
}

} // namespace kprab
