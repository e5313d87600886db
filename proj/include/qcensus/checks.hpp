#pragma once

#include <string>
#include <vector>

namespace qcensus {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string details;
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string details = "") {
        items.push_back({std::move(name), pass, std::move(details)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

}  // namespace qcensus
