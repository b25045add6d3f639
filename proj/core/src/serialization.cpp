#include "charmoments/serialization.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace charmoments {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const ConfigMap& config) {
    Json out = Json::object();
    for (const auto& [key, value] : config) out[key] = value;
    return out;
}

Json bigint_array(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

Json bigrat_array(const std::vector<BigRat>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

std::string dump(const Json& j) { return j.dump(2); }

BigInt bigint_from_json(const Json& v) {
    try {
        if (v.is_string()) return BigInt(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(v.get<long long>());
        if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
    } catch (const std::exception&) {
    }
    throw InvalidInput("expected an integer or integer string in JSON");
}

Json partition_json(const Partition& p) {
    Json blocks = Json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    return blocks;
}

[[noreturn]] void rethrow_as_invalid(const std::exception& e) {
    throw InvalidInput(std::string("malformed input: ") + e.what());
}

} // namespace

std::string to_json(const MomentSequence& m, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["model"] = m.model_tag;
    out["max_k"] = m.max_k();
    out["moments"] = bigint_array(m.values);
    return dump(out);
}

std::string to_csv(const MomentSequence& m, const ConfigMap& config) {
    std::ostringstream out;
    out << "# model=" << m.model_tag << "\n";
    for (const auto& [key, value] : config) out << "# " << key << "=" << value << "\n";
    out << "k,m_k\n";
    for (int k = 0; k <= m.max_k(); ++k)
        out << k << "," << m.values[static_cast<std::size_t>(k)].str() << "\n";
    return out.str();
}

MomentSequence moment_sequence_from_json(const std::string& text) {
    try {
        const Json in = Json::parse(text);
        MomentSequence m;
        m.model_tag = in.at("model").get<std::string>();
        for (const auto& v : in.at("moments")) m.values.push_back(bigint_from_json(v));
        if (m.values.empty()) throw InvalidInput("moment sequence may not be empty");
        return m;
    } catch (const Json::exception& e) {
        rethrow_as_invalid(e);
    }
}

MomentSequence moment_sequence_from_csv(const std::string& text) {
    MomentSequence m;
    std::istringstream in(text);
    std::string line;
    int expected_k = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos && line.rfind("# model=", 0) == 0)
                m.model_tag = line.substr(eq + 1);
            continue;
        }
        if (line == "k,m_k") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("malformed CSV row '" + line + "'");
        int k = 0;
        try {
            k = std::stoi(line.substr(0, comma));
        } catch (const std::exception&) {
            throw InvalidInput("malformed CSV row '" + line + "'");
        }
        if (k != expected_k)
            throw InvalidInput("CSV rows must list k = 0, 1, 2, ... in order");
        try {
            m.values.emplace_back(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw InvalidInput("malformed CSV value in row '" + line + "'");
        }
        ++expected_k;
    }
    if (m.values.empty()) throw InvalidInput("CSV contains no moment rows");
    return m;
}

std::string to_json(const ASequence& a, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["model"] = a.model_tag;
    out["A"] = bigrat_array(a.values);
    out["integral"] = a.integral;
    return dump(out);
}

std::string to_json(const ConvolutionReport& r, const ASequence& a, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["model"] = r.model_tag;
    out["A"] = bigrat_array(a.values);
    out["integral"] = a.integral;
    out["holds_a"] = r.holds_a;
    out["holds_b"] = r.holds_b;
    out["first_violation_b"] = r.first_violation_b;
    out["first_strict_b"] = r.first_strict_b;
    out["holds_c"] = r.holds_c;
    out["first_k0"] = r.first_k0;
    out["pass"] = r.holds_a && r.holds_b;
    return dump(out);
}

namespace {

Json norm_estimate_json(const NormEstimate& e) {
    Json out;
    out["model"] = e.model_tag;
    out["root_ks"] = e.root_ks;
    out["root_values"] = e.root_values;
    out["ratio_ks"] = e.ratio_ks;
    out["ratio_values"] = e.ratio_values;
    out["lower_bound"] = e.lower_bound;
    out["extrapolated"] = e.extrapolated;
    out["extrapolation_note"] = "extrapolated is a heuristic fit; only lower_bound is certified";
    out["fit"] = Json{{"intercept", e.fit_intercept},
                      {"slope", e.fit_slope},
                      {"points", e.fit_points}};
    return out;
}

Json minorant_json(const MinorantReport& r) {
    Json out;
    out["model"] = r.model_tag;
    out["applicable"] = r.applicable;
    out["strict_gap"] = r.strict_gap;
    out["seed_end"] = r.seed_end;
    out["horizon"] = r.horizon;
    out["certified"] = r.certified;
    out["growth_at_horizon"] = r.growth_at_horizon;
    out["growth_extrapolated"] = r.growth_extrapolated;
    return out;
}

} // namespace

std::string to_json(const MinorantReport& r, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    const Json body = minorant_json(r);
    for (const auto& [key, value] : body.items()) out[key] = value;
    return dump(out);
}

std::string to_json(const NormEstimate& e, const ConfigMap& config) {
    return norm_report_to_json(e, nullptr, config);
}

std::string norm_report_to_json(const NormEstimate& e, const MinorantReport* cert,
                                const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    const Json body = norm_estimate_json(e);
    for (const auto& [key, value] : body.items()) out[key] = value;
    if (cert) out["certificate"] = minorant_json(*cert);
    return dump(out);
}

std::string norm_plot_csv(const NormEstimate& e, const ConfigMap& config) {
    std::ostringstream out;
    out << "# model=" << e.model_tag << "\n";
    for (const auto& [key, value] : config) out << "# " << key << "=" << value << "\n";
    out << "k,root,ratio,fit\n";
    out.precision(17);
    for (std::size_t i = 0; i < e.root_ks.size(); ++i) {
        const int k = e.root_ks[i];
        out << k << "," << e.root_values[i] << ",";
        for (std::size_t j = 0; j < e.ratio_ks.size(); ++j)
            if (e.ratio_ks[j] == k) out << e.ratio_values[j];
        out << "," << (e.fit_intercept + e.fit_slope / k) << "\n";
    }
    return out.str();
}

std::string to_json(const HankelReport& r, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["model"] = r.model_tag;
    out["order"] = r.order;
    out["psd_ok"] = r.psd_ok;
    out["logconvex_ok"] = r.logconvex_ok;
    out["first_logconvex_violation"] = r.first_logconvex_violation;
    out["pass"] = r.psd_ok && r.logconvex_ok;
    return dump(out);
}

std::string to_json(const PushForwardReport& r, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["source_model"] = r.source.model_tag;
    out["target_model"] = r.target.model_tag;
    out["source_moments"] = bigint_array(r.source.values);
    out["target_moments"] = bigint_array(r.target.values);
    out["monotone"] = r.monotone;
    out["strict_found"] = r.strict_found;
    out["first_strict"] = r.first_strict;
    out["pass"] = r.monotone;
    return dump(out);
}

std::string to_json(const BlockInequalityReport& r, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["word"] = r.word.str();
    out["class"] = partition_class_name(r.cls);
    out["lhs"] = r.lhs.str();
    out["rhs"] = r.rhs.str();
    out["injective"] = r.injective;
    out["holds"] = r.holds;
    out["pass"] = r.holds && r.injective;
    return dump(out);
}

std::string to_json(const GramMatrix& g, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["word"] = g.word.str();
    out["class"] = partition_class_name(g.cls);
    out["n"] = g.dimension_n;
    out["dimension"] = g.labels.size();
    Json labels = Json::array();
    for (const auto& p : g.labels) labels.push_back(partition_json(p));
    out["labels"] = std::move(labels);
    Json entries = Json::array();
    for (const auto& row : g.entries)
        for (const auto& v : row) entries.push_back(v.str());
    out["entries"] = std::move(entries);
    return dump(out);
}

std::string dims_to_json(const ColorWord& w, PartitionClass cls, unsigned n,
                         const std::optional<BigInt>& count,
                         const std::optional<BigInt>& rank,
                         const BigInt& dim, const ConfigMap& config) {
    Json out;
    out["config"] = config_json(config);
    out["word"] = w.str();
    out["class"] = partition_class_name(cls);
    out["n"] = n;
    out["count"] = count ? Json(count->str()) : Json(nullptr);
    out["rank"] = rank ? Json(rank->str()) : Json(nullptr);
    out["dim"] = dim.str();
    return dump(out);
}

CayleyTable cayley_table_from_json(const std::string& text) {
    try {
        const Json in = Json::parse(text);
        CayleyTable table;
        table.order = in.at("order").get<std::size_t>();
        table.identity = in.at("identity").get<unsigned>();
        table.generators = in.at("generators").get<std::vector<unsigned>>();
        table.table = in.at("table").get<std::vector<std::vector<unsigned>>>();
        table.validate();
        return table;
    } catch (const Json::exception& e) {
        rethrow_as_invalid(e);
    }
}

HomSpec hom_spec_from_json(const std::string& text) {
    try {
        const Json in = Json::parse(text);
        HomSpec spec;
        spec.source = in.at("source").get<std::string>();
        spec.target = in.at("target").get<std::string>();
        spec.images = in.at("images").get<std::vector<std::vector<int>>>();
        return spec;
    } catch (const Json::exception& e) {
        rethrow_as_invalid(e);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace charmoments
