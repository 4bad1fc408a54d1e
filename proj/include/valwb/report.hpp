#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "valwb/errors.hpp"

namespace valwb {

/// 64-bit FNV-1a of the inputs, as 16 hex digits.
inline std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// One checked claim: what ran, on what, what came out, and why it matters.
struct Verdict {
    std::string operation;
    std::string digest;
    std::string outcome;
    std::string citation;
    bool passed = true;
    std::vector<std::string> caveats;
    std::vector<std::pair<std::string, std::string>> data;

    Verdict& add(std::string key, std::string value) {
        data.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    nlohmann::json to_json() const {
        nlohmann::json d = nlohmann::json::array();
        for (const auto& [k, v] : data) d.push_back(nlohmann::json::array({k, v}));
        return {{"operation", operation}, {"digest", digest},   {"outcome", outcome}, {"citation", citation},
                {"passed", passed},       {"caveats", caveats}, {"data", d}};
    }

    static Verdict from_json(const nlohmann::json& j) {
        Verdict v;
        v.operation = j.at("operation").get<std::string>();
        v.digest = j.at("digest").get<std::string>();
        v.outcome = j.at("outcome").get<std::string>();
        v.citation = j.at("citation").get<std::string>();
        v.passed = j.at("passed").get<bool>();
        v.caveats = j.at("caveats").get<std::vector<std::string>>();
        for (const auto& kv : j.at("data")) v.data.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
        return v;
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
    std::vector<Verdict> verdicts;

    Verdict& add(Verdict v) {
        verdicts.push_back(std::move(v));
        return verdicts.back();
    }
    void append(const Report& other) { verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end()); }

    bool passed() const {
        for (const auto& v : verdicts)
            if (!v.passed) return false;
        return true;
    }

    /// JSON Lines, one verdict per line.
    std::string structured() const {
        std::string out;
        for (const auto& v : verdicts) out += v.to_json().dump() + "\n";
        return out;
    }

    static Report parse_structured(std::string_view text) {
        Report r;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            ++line_no;
            pos = end + 1;
            if (line.empty()) continue;
            try {
                r.verdicts.push_back(Verdict::from_json(nlohmann::json::parse(line)));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(line_no, 1, std::string("bad report line: ") + e.what());
            }
        }
        return r;
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& v : verdicts) {
            os << (v.passed ? "[ok]   " : "[FAIL] ") << v.operation << ": " << v.outcome << "\n";
            if (!v.citation.empty()) os << "       cites: " << v.citation << "\n";
            for (const auto& [k, val] : v.data) os << "       " << k << " = " << val << "\n";
            for (const auto& c : v.caveats) os << "       caveat: " << c << "\n";
        }
        return os.str();
    }

    friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace valwb
