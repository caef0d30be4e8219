#ifndef STOKESCLUSTER_REPORT_HPP
#define STOKESCLUSTER_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace sc {

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string residual; // empty when no residual applies
};

struct Report {
    std::string check;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::string triangulation; // serialized triangulation, empty when absent
    std::vector<CheckItem> items;
    nlohmann::ordered_json conventions = nlohmann::ordered_json::object();
    long long elapsed_ms = 0;

    bool all_ok() const;
    std::string to_json() const;
};

} // namespace sc

#endif
