#include "modq/hurwitz_cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace modq::io {

HurwitzCache::HurwitzCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("v") || j["v"] != kVersion) return;
    for (const auto& [key, value] : j.items()) {
        if (key == "v") continue;
        int d = 0, g = 0;
        char comma = 0;
        std::istringstream ks(key);
        if (!(ks >> d >> comma >> g) || comma != ',') continue;
        if (!value.is_object() || !value.contains("tuples") || !value.contains("count")) continue;
        enumgeo::HurwitzRecord rec;
        rec.degree = d;
        rec.genus = g;
        rec.tuples = value["tuples"].get<std::int64_t>();
        if (rec.count.set_str(value["count"].get<std::string>(), 10) != 0) continue;
        rec.count.canonicalize();
        entries_[{d, g}] = rec;
    }
}

std::optional<enumgeo::HurwitzRecord> HurwitzCache::lookup(int degree, int genus) const {
    auto it = entries_.find({degree, genus});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void HurwitzCache::store(const enumgeo::HurwitzRecord& record) {
    entries_[{record.degree, record.genus}] = record;
}

void HurwitzCache::save() const {
    nlohmann::ordered_json j;
    j["v"] = kVersion;
    for (const auto& [key, rec] : entries_) {
        j[std::to_string(key.first) + "," + std::to_string(key.second)] = {
            {"tuples", rec.tuples}, {"count", rec.count.get_str()}};
    }
    std::ofstream out(path_);
    if (!out) throw Error("cannot write cache file " + path_.string());
    out << j.dump(2) << "\n";
}

enumgeo::HurwitzRecord HurwitzCache::get_or_compute(int degree, int genus, double budget) {
    if (auto hit = lookup(degree, genus)) return *hit;
    auto rec = enumgeo::hurwitz_oracle(degree, genus, budget);
    store(rec);
    save();
    return rec;
}

} // namespace modq::io
