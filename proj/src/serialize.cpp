#include "dompoly/serialize.hpp"

#include <sstream>

namespace dompoly {

namespace {

nlohmann::json coeff_strings(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

Polynomial from_coeff_strings(int n, const nlohmann::json& coeffs) {
    if (!coeffs.is_array()) throw ParseError("polynomial coefficients must be an array");
    std::vector<BigInt> values;
    for (const auto& c : coeffs) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be decimal strings");
        const auto& text = c.get_ref<const std::string&>();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad coefficient '" + text + "'");
        }
        values.emplace_back(text);
    }
    return Polynomial::from_coefficients(n, std::move(values));
}

}  // namespace

nlohmann::json to_json(const Polynomial& p) {
    return {{"n", p.order()}, {"coeffs", coeff_strings(p)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    try {
        return from_coeff_strings(j.at("n").get<int>(), j.at("coeffs"));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

nlohmann::json to_json(const KKReport& r) {
    nlohmann::json out = {{"family_size", r.family_size}, {"k", r.k},
                          {"x_solved", r.x_solved},       {"shadow_size", r.shadow_size},
                          {"bound", r.bound},             {"bound_met", r.bound_met},
                          {"equality", r.equality},       {"clique_witness", nullptr}};
    if (r.clique_witness) out["clique_witness"] = r.clique_witness->to_vector();
    return out;
}

nlohmann::json to_json(const VerificationOutcome& o) {
    return {{"claim_id", o.claim_id},
            {"parameters", o.parameters},
            {"verdict", o.passed ? "pass" : "fail"},
            {"evidence", o.evidence}};
}

nlohmann::json to_json(const ClassReport& c) {
    return {{"poly", coeff_strings(c.polynomial)}, {"members", c.members}, {"size", c.size()}};
}

nlohmann::json to_json(const Atlas& a) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : a.classes) classes.push_back(to_json(c));
    return {{"order", a.order}, {"total", a.total_graphs}, {"classes", classes}};
}

Atlas atlas_from_json(const nlohmann::json& j) {
    try {
        Atlas a;
        a.order = j.at("order").get<int>();
        a.total_graphs = j.at("total").get<std::size_t>();
        for (const auto& c : j.at("classes")) {
            ClassReport cls{from_coeff_strings(a.order, c.at("poly")),
                            c.at("members").get<std::vector<std::string>>()};
            if (cls.size() != c.at("size").get<std::size_t>()) throw ParseError("atlas class size mismatch");
            a.classes.push_back(std::move(cls));
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("atlas JSON: ") + e.what());
    }
}

std::string atlas_csv(const Atlas& a) {
    std::string out = "polynomial,size\n";
    for (const auto& c : a.classes) out += c.polynomial.to_string() + "," + std::to_string(c.size()) + "\n";
    return out;
}

SetFamily parse_family(std::istream& in) {
    std::vector<VertexSet> sets;
    std::string line;
    int k = -1, max_vertex = -1;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        VertexSet s;
        int count = 0;
        std::string tok;
        while (fields >> tok) {
            int v = -1;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) v = -1;
            } catch (const std::exception&) {
            }
            if (v < 0 || v >= kMaxVertices) {
                throw ParseError("family line " + std::to_string(line_no) + ": bad vertex '" + tok + "'");
            }
            if (s.contains(v)) throw ParseError("family line " + std::to_string(line_no) + ": repeated vertex");
            s = s.with(v);
            max_vertex = std::max(max_vertex, v);
            ++count;
        }
        if (count == 0) continue;
        if (k >= 0 && count != k) {
            throw ParseError("family line " + std::to_string(line_no) + ": set size " + std::to_string(count) +
                             " differs from " + std::to_string(k));
        }
        k = count;
        sets.push_back(s);
    }
    if (sets.empty()) throw ParseError("family file has no sets");
    try {
        return SetFamily(max_vertex + 1, k, std::move(sets));
    } catch (const Error& e) {
        throw ParseError(std::string("family: ") + e.what());
    }
}

}  // namespace dompoly
