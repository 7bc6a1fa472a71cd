#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omsv/amplituhedron.hpp"
#include "omsv/chirotope.hpp"
#include "omsv/cocircuits.hpp"
#include "omsv/criteria.hpp"
#include "omsv/matrix.hpp"
#include "omsv/plucker.hpp"
#include "omsv/positroid.hpp"
#include "omsv/rational.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// All CLI-facing JSON uses ordered maps so repeated runs are byte-identical.
using Json = nlohmann::ordered_json;

[[nodiscard]] inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

[[nodiscard]] inline ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs \"rows\", \"cols\", \"entries\"");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("matrix JSON: \"entries\" must hold one array per row");
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) + " has wrong width");
        for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(row.at(static_cast<std::size_t>(c)));
    }
    return m;
}

[[nodiscard]] inline Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

[[nodiscard]] inline Json subset_to_json(const Subset& s) {
    Json out = Json::array();
    for (int e : s) out.push_back(e);
    return out;
}

[[nodiscard]] inline Json subspace_to_json(const Subspace& v) {
    return Json{{"dim", v.dim()},
                {"ambient", v.ambient()},
                {"pivots", subset_to_json(v.pivots())},
                {"basis", matrix_to_json(v.basis())}};
}

[[nodiscard]] inline Json plucker_to_json(const PluckerMap& p) {
    Json values = Json::object();
    Subset I = first_subset(p.k());
    std::size_t rank = 0;
    do {
        values[subset_key(I)] = rational_str(p.values()[rank]);
        ++rank;
    } while (next_subset(I, p.n()));
    return Json{{"n", p.n()}, {"k", p.k()}, {"values", std::move(values)}};
}

[[nodiscard]] inline Json chirotope_to_json(const Chirotope& c) {
    Json orientation = Json::object();
    Subset I = first_subset(c.k());
    std::size_t rank = 0;
    do {
        const int s = c.orientation()[rank];
        orientation[subset_key(I)] = (s > 0 ? "+" : (s < 0 ? "-" : "0"));
        ++rank;
    } while (next_subset(I, c.n()));
    return Json{{"n", c.n()}, {"k", c.k()}, {"orientation", std::move(orientation)}};
}

[[nodiscard]] inline Chirotope chirotope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("orientation"))
        throw std::invalid_argument("chirotope JSON needs \"n\", \"k\", \"orientation\"");
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    std::vector<std::int8_t> orientation(binomial(n, k), 0);
    for (const auto& [key, value] : j.at("orientation").items()) {
        const Subset I = parse_subset(key);
        if (static_cast<int>(I.size()) != k || (!I.empty() && (I.front() < 1 || I.back() > n)))
            throw std::invalid_argument("chirotope JSON: bad subset key '" + key + "'");
        const std::string s = value.get<std::string>();
        if (s != "+" && s != "-" && s != "0")
            throw std::invalid_argument("chirotope JSON: orientation values must be \"+\", \"-\" or \"0\"");
        orientation[subset_lex_rank(I, n)] = static_cast<std::int8_t>(s == "+" ? 1 : (s == "-" ? -1 : 0));
    }
    return Chirotope(n, k, std::move(orientation));
}

[[nodiscard]] inline Json sign_vectors_to_json(const std::vector<SignVector>& xs) {
    Json out = Json::array();
    for (const SignVector& x : xs) out.push_back(x.str());
    return out;
}

[[nodiscard]] inline Json necklace_to_json(const GrassmannNecklace& neck) {
    Json entries = Json::array();
    for (const Subset& e : neck.entries) entries.push_back(subset_to_json(e));
    return Json{{"n", neck.n}, {"k", neck.k}, {"entries", std::move(entries)}};
}

[[nodiscard]] inline GrassmannNecklace necklace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw std::invalid_argument("necklace JSON needs \"entries\"");
    GrassmannNecklace neck;
    for (const Json& entry : j.at("entries")) {
        Subset s;
        for (const Json& e : entry) s.push_back(e.get<int>());
        if (!std::is_sorted(s.begin(), s.end())) std::sort(s.begin(), s.end());
        neck.entries.push_back(std::move(s));
    }
    neck.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(neck.entries.size());
    neck.k = j.contains("k") ? j.at("k").get<int>()
                             : (neck.entries.empty() ? 0 : static_cast<int>(neck.entries.front().size()));
    if (static_cast<int>(neck.entries.size()) != neck.n)
        throw std::invalid_argument("necklace JSON: expected n entries");
    for (const Subset& s : neck.entries)
        if (static_cast<int>(s.size()) != neck.k)
            throw std::invalid_argument("necklace JSON: entries must all have size k");
    return neck;
}

[[nodiscard]] inline Json criterion_report_to_json(const CriterionReport& report) {
    Json out{{"holds", report.holds}, {"bound_checked", report.bound_checked}};
    if (report.witness_subset) {
        out["witness"] = Json{{"subset", subset_to_json(*report.witness_subset)},
                              {"sequence", report.witness_sequence->str()}};
    }
    return out;
}

[[nodiscard]] inline Json rationals_to_json(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const Rational& x : xs) out.push_back(rational_str(x));
    return out;
}

[[nodiscard]] inline std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const Json& x : j) out.push_back(rational_from_json(x));
    return out;
}

[[nodiscard]] inline Json amplituhedron_verdict_to_json(const AmplituhedronVerdict& verdict, bool tp_mode,
                                                        bool include_witness) {
    Json trace = Json::array();
    for (const auto& entry : verdict.criterion_trace) {
        Json item{{"subset", subset_to_json(entry.subset)}};
        if (!entry.sequence.empty()) item["sequence"] = rationals_to_json(entry.sequence);
        item["signs"] = entry.signs.str();
        item[tp_mode ? "var" : "varbar"] = entry.value;
        trace.push_back(std::move(item));
    }
    Json out{{"well_defined", verdict.well_defined}, {"k", verdict.k}, {"n", verdict.n},
             {"r", verdict.r},  {"d", verdict.d},    {"criterion_trace", std::move(trace)}};
    if (include_witness && verdict.witness_vector) {
        out["witness"] = Json{{"vector", rationals_to_json(*verdict.witness_vector)},
                              {"subspace", subspace_to_json(*verdict.witness_subspace)}};
    }
    return out;
}

/// FNV-1a 64-bit over the raw input text; hex-encoded.
[[nodiscard]] inline std::string content_digest(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

}  // namespace omsv
