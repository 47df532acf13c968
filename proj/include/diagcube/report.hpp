#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diagcube {

struct CheckRecord {
    std::string name;    // stable identifier; report order is lexicographic by name
    std::string anchor;  // human label of the verified statement
    std::string mode;    // exact | modular | sampled
    std::string status;  // verified | refuted | inconclusive
    std::vector<std::string> witnesses;
    std::uint64_t seed = 0;
    std::int64_t timing_ms = -1;
};

inline CheckRecord make_record(std::string name, std::string anchor, std::string mode,
                               bool ok, std::vector<std::string> witnesses = {},
                               std::uint64_t seed = 0) {
    return CheckRecord{std::move(name), std::move(anchor), std::move(mode),
                       ok ? "verified" : "refuted", std::move(witnesses), seed, -1};
}

class Report {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void merge(const Report& o) {
        for (const auto& r : o.records_) records_.push_back(r);
    }

    // records in stable lexicographic order
    std::vector<CheckRecord> sorted() const;

    bool all_verified() const;
    bool any_refuted() const;

    // 0 all verified, 2 refuted, 3 inconclusive
    int exit_code() const;

    // Byte-stable given identical seed/config. Timings are opt-in because
    // they are inherently non-deterministic.
    std::string render_text(bool with_timings = false) const;
    std::string render_json(bool with_timings = false) const;

    std::size_t size() const { return records_.size(); }

private:
    std::vector<CheckRecord> records_;
};

} // namespace diagcube
