#include "diagcube/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace diagcube {

std::vector<CheckRecord> Report::sorted() const {
    std::vector<CheckRecord> v = records_;
    std::stable_sort(v.begin(), v.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    return v;
}

bool Report::all_verified() const {
    for (const auto& r : records_)
        if (r.status != "verified") return false;
    return true;
}

bool Report::any_refuted() const {
    for (const auto& r : records_)
        if (r.status == "refuted") return true;
    return false;
}

int Report::exit_code() const {
    if (any_refuted()) return 2;
    if (!all_verified()) return 3;
    return 0;
}

std::string Report::render_text(bool with_timings) const {
    std::ostringstream os;
    for (const auto& r : sorted()) {
        os << r.status << "  " << r.name << "  [" << r.anchor << "]  mode=" << r.mode
           << " seed=" << r.seed;
        if (with_timings && r.timing_ms >= 0) os << " time_ms=" << r.timing_ms;
        os << "\n";
        for (const auto& w : r.witnesses) os << "    . " << w << "\n";
    }
    os << "summary: " << records_.size() << " checks, exit " << exit_code() << "\n";
    return os.str();
}

std::string Report::render_json(bool with_timings) const {
    nlohmann::ordered_json doc;
    doc["schema"] = "diagcube-report/1";
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : sorted()) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["anchor"] = r.anchor;
        jr["mode"] = r.mode;
        jr["status"] = r.status;
        jr["witnesses"] = r.witnesses;
        jr["seed"] = r.seed;
        if (with_timings && r.timing_ms >= 0) jr["timing_ms"] = r.timing_ms;
        doc["checks"].push_back(jr);
    }
    doc["exit_code"] = exit_code();
    return doc.dump(2) + "\n";
}

} // namespace diagcube
