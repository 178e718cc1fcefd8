#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "modq/enumgeo.hpp"

namespace modq::io {

/// On-disk memo of oracle results:
///   {"v": 1, "d,g": {"tuples": n, "count": "p/q"}, ...}
/// A file with a different "v" is ignored and overwritten on save.
class HurwitzCache {
public:
    static constexpr int kVersion = 1;

    explicit HurwitzCache(std::filesystem::path path);

    const std::filesystem::path& path() const noexcept { return path_; }
    std::optional<enumgeo::HurwitzRecord> lookup(int degree, int genus) const;
    void store(const enumgeo::HurwitzRecord& record);
    void save() const;

    /// lookup, or run the oracle and store + save.
    enumgeo::HurwitzRecord get_or_compute(int degree, int genus, double budget);

private:
    std::filesystem::path path_;
    std::map<std::pair<int, int>, enumgeo::HurwitzRecord> entries_;
};

} // namespace modq::io
