// Minimal key-value config reader: "key = v1, v2, ..." lines, '#' comments.
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hqzcli {

using KvConfig = std::map<std::string, std::vector<std::string>>;

inline bool load_kv_config(const std::string& path, KvConfig& out,
                           std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) trimmed += c;
        // skip blank lines
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            error = "config line " + std::to_string(lineno) + ": missing '='";
            return false;
        }
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(trimmed.substr(0, eq));
        if (key.empty()) {
            error = "config line " + std::to_string(lineno) + ": empty key";
            return false;
        }
        std::string rest = trimmed.substr(eq + 1);
        for (char& c : rest)
            if (c == ',') c = ' ';
        std::istringstream vals(rest);
        std::vector<std::string> items;
        std::string item;
        while (vals >> item) items.push_back(item);
        out[key] = std::move(items);
    }
    return true;
}

}  // namespace hqzcli
