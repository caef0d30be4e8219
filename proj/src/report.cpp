#include "stokescluster/report.hpp"

namespace sc {

bool Report::all_ok() const {
    for (const auto& item : items)
        if (!item.ok) return false;
    return true;
}

std::string Report::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["check"] = check;
    j["parameters"] = parameters;
    if (!triangulation.empty()) j["triangulation"] = ordered_json::parse(triangulation);
    ordered_json arr = ordered_json::array();
    for (const auto& item : items) {
        ordered_json o;
        o["name"] = item.name;
        o["status"] = item.ok ? "pass" : "fail";
        if (!item.residual.empty()) o["residual"] = item.residual;
        arr.push_back(o);
    }
    j["items"] = arr;
    if (!conventions.empty()) j["conventions"] = conventions;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

} // namespace sc
