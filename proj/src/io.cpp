#include "mlcif/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mlcif {

using nlohmann::json;

std::string kset_to_json(const KSet& f) {
    return json(f.elements()).dump();
}

Family family_from_jsonl(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("family record is not valid JSON: ") + e.what());
    }
    if (!j.contains("k") || !j.contains("n") || !j.contains("boundary"))
        throw ParameterError("family record needs fields k, n, boundary");
    const GroundParams params(j.at("k").get<int>(), j.at("n").get<int>());
    std::vector<KSet> boundary;
    for (const auto& arr : j.at("boundary")) boundary.emplace_back(arr.get<std::vector<int>>(), params.n);
    return Family::from_boundary(std::move(boundary), params);
}

std::vector<Family> families_from_jsonl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open family file " + path);
    std::vector<Family> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(family_from_jsonl(line));
    }
    if (out.empty()) throw ParameterError("family file " + path + " contains no families");
    return out;
}

WeightFn weight_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("weight file is not valid JSON: ") + e.what());
    }
    if (!j.contains("n")) throw ParameterError("weight file needs field n");
    const int n = j.at("n").get<int>();
    if (j.contains("dense")) {
        auto v = j.at("dense").get<std::vector<double>>();
        if (static_cast<int>(v.size()) != n) throw ParameterError("dense weight list must have exactly n values");
        return WeightFn::from_dense(std::move(v));
    }
    if (j.contains("steps")) {
        std::vector<WeightStep> steps;
        for (const auto& s : j.at("steps"))
            steps.push_back(WeightStep{s.at("from").get<int>(), s.at("value").get<double>()});
        return WeightFn::from_steps(n, std::move(steps));
    }
    throw ParameterError("weight file needs either dense or steps");
}

WeightFn weight_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open weight file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return weight_from_json_text(ss.str());
}

std::string weight_to_json(const WeightFn& w) {
    json j;
    j["n"] = w.n();
    if (w.steps()) {
        json steps = json::array();
        for (const WeightStep& s : *w.steps()) steps.push_back({{"from", s.from}, {"value", s.value}});
        j["steps"] = steps;
    } else {
        j["dense"] = w.dense();
    }
    return j.dump();
}

namespace {

json report_to_json_obj(const VerificationReport& r) {
    json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["status"] = r.status();
    j["warning"] = r.warning;
    if (r.margin) j["margin"] = *r.margin;
    if (!r.note.empty()) j["note"] = r.note;
    json w = json::array();
    for (const auto& [key, value] : r.witnesses) w.push_back({{"key", key}, {"value", value}});
    j["witnesses"] = w;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    return report_to_json_obj(r).dump();
}

VerificationReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    if (j.contains("params")) r.params = j.at("params").get<std::map<std::string, std::string>>();
    const std::string status = j.at("status").get<std::string>();
    r.skipped = status == "skip";
    r.pass = status == "pass" || r.skipped;
    r.warning = j.value("warning", false);
    if (j.contains("margin")) r.margin = j.at("margin").get<double>();
    r.note = j.value("note", std::string{});
    if (j.contains("witnesses"))
        for (const auto& w : j.at("witnesses"))
            r.witnesses.emplace_back(w.at("key").get<std::string>(), w.at("value").get<std::string>());
    return r;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string param_or(const VerificationReport& r, const char* key) {
    auto it = r.params.find(key);
    return it == r.params.end() ? std::string{} : it->second;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "claim,k,n,samples,min_margin,status\n";
    for (const VerificationReport& r : reports) {
        out += csv_escape(r.claim) + ',' + param_or(r, "k") + ',' + param_or(r, "n") + ',' + param_or(r, "samples") +
               ',' + (r.margin ? format_double(*r.margin) : std::string{}) + ',' + r.status() + '\n';
    }
    return out;
}

std::string ranks_to_csv(int m, int n, const std::vector<U128>& sizes) {
    std::string out = "m,n,j,p_j\n";
    for (std::size_t j = 0; j < sizes.size(); ++j)
        out += std::to_string(m) + ',' + std::to_string(n) + ',' + std::to_string(j) + ',' + u128_to_string(sizes[j]) + '\n';
    return out;
}

std::string bounds_to_csv(const std::vector<BoundsRow>& rows) {
    std::string out =
        "k,log2_lower_allk,log2_upper_allk,log2_lower_asym,log2_upper_asym,log2_antichain_bound,log2_mk,pk,prodinger_r\n";
    for (const BoundsRow& r : rows) {
        out += std::to_string(r.k) + ',' + format_double(r.log2_lower_allk) + ',' + format_double(r.log2_upper_allk) +
               ',' + format_double(r.log2_lower_asym) + ',' + format_double(r.log2_upper_asym) + ',' +
               format_double(r.log2_antichain_bound) + ',';
        out += r.log2_mk ? format_double(*r.log2_mk) : std::string{};
        out += ',';
        out += r.pk ? u128_to_string(*r.pk) : std::string{};
        out += ',';
        out += r.prodinger_r ? format_double(*r.prodinger_r) : std::string{};
        out += '\n';
    }
    return out;
}

std::string probe_to_csv(const ProbeReport& report) {
    std::string out = "k,usize,strategy,density,seed,below_threshold,label\n";
    for (const ProbeRow& r : report.rows) {
        out += std::to_string(r.k) + ',' + std::to_string(r.usize) + ',' + r.strategy + ',' +
               format_double(r.density) + ',' + std::to_string(r.seed) + ',' + (r.below_threshold ? "1" : "0") + ',' +
               csv_escape(report.label) + '\n';
    }
    return out;
}

}  // namespace mlcif
