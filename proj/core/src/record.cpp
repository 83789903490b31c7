#include "levelscope/record.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace levelscope {

namespace {

using nlohmann::json;

const std::set<std::string> kJsonKeys = {"prime", "poly",       "level", "capped",
                                         "chain", "rank_C",     "p_rank", "nilpotency",
                                         "class", "bound",      "ms",    "version"};

template <typename T>
json opt_to_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os << ms;
    return os.str();
}

}  // namespace

std::string RunRecord::to_json() const {
    json j;
    j["prime"] = prime;
    j["poly"] = poly;
    j["level"] = opt_to_json(level);
    j["capped"] = capped;
    j["chain"] = chain;
    j["rank_C"] = opt_to_json(rank_C);
    j["p_rank"] = opt_to_json(p_rank);
    j["nilpotency"] = opt_to_json(nilpotency);
    j["class"] = opt_to_json(classification);
    j["bound"] = opt_to_json(bound);
    j["ms"] = ms;
    j["version"] = version;
    return j.dump();
}

RunRecord RunRecord::from_json(const std::string& line) {
    json j = json::parse(line);
    if (!j.is_object()) throw ArgumentError("record line is not a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!kJsonKeys.count(key)) throw ArgumentError("unknown record key '" + key + "'");
    }
    for (const auto& key : kJsonKeys) {
        if (!j.contains(key)) throw ArgumentError("missing record key '" + key + "'");
    }
    RunRecord r;
    r.prime = j.at("prime").get<u64>();
    r.poly = j.at("poly").get<std::string>();
    if (!j.at("level").is_null()) r.level = j.at("level").get<int>();
    r.capped = j.at("capped").get<bool>();
    r.chain = j.at("chain").get<std::vector<std::vector<std::string>>>();
    if (!j.at("rank_C").is_null()) r.rank_C = j.at("rank_C").get<std::size_t>();
    if (!j.at("p_rank").is_null()) r.p_rank = j.at("p_rank").get<std::size_t>();
    if (!j.at("nilpotency").is_null()) r.nilpotency = j.at("nilpotency").get<long long>();
    if (!j.at("class").is_null()) r.classification = j.at("class").get<std::string>();
    if (!j.at("bound").is_null()) r.bound = j.at("bound").get<int>();
    r.ms = j.at("ms").get<double>();
    r.version = j.at("version").get<std::string>();
    return r;
}

std::string RunRecord::csv_header() {
    return "prime,genus,h,level,capped,rank_C,p_rank,nilpotency,class,bound,ms,seed";
}

std::string RunRecord::to_csv_row() const {
    auto opt_str = [](const auto& v) -> std::string {
        if (!v) return "";
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, std::string>) return *v;
        else return std::to_string(*v);
    };
    std::ostringstream os;
    os << prime << "," << genus << "," << h << "," << opt_str(level) << ","
       << (capped ? "true" : "false") << "," << opt_str(rank_C) << "," << opt_str(p_rank) << ","
       << opt_str(nilpotency) << "," << opt_str(classification) << "," << opt_str(bound) << ","
       << format_ms(ms) << "," << seed;
    return os.str();
}

RunRecord RunRecord::from_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    if (fields.size() != 12) throw ArgumentError("CSV row must have 12 fields");
    RunRecord r;
    r.prime = std::stoull(fields[0]);
    r.genus = std::stoi(fields[1]);
    r.h = fields[2];
    if (!fields[3].empty()) r.level = std::stoi(fields[3]);
    r.capped = fields[4] == "true";
    if (!fields[5].empty()) r.rank_C = std::stoull(fields[5]);
    if (!fields[6].empty()) r.p_rank = std::stoull(fields[6]);
    if (!fields[7].empty()) r.nilpotency = std::stoll(fields[7]);
    if (!fields[8].empty()) r.classification = fields[8];
    if (!fields[9].empty()) r.bound = std::stoi(fields[9]);
    r.ms = std::stod(fields[10]);
    r.seed = fields[11];
    return r;
}

bool RunRecord::operator==(const RunRecord& other) const {
    return prime == other.prime && genus == other.genus && poly == other.poly &&
           h == other.h && level == other.level && capped == other.capped &&
           chain == other.chain && rank_C == other.rank_C && p_rank == other.p_rank &&
           nilpotency == other.nilpotency && classification == other.classification &&
           bound == other.bound && ms == other.ms && version == other.version &&
           seed == other.seed;
}

}  // namespace levelscope
