#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace latcert {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

/// One verified condition: a short stable name, the claim it checks in
/// plain words, the outcome, and enough witness data to replay the check.
struct ChecklistItem {
    std::string name;
    std::string claim;
    CheckStatus status = CheckStatus::Skip;
    Json witness = Json::object();
};

/// Structured verification report for one construction.  `overall` is
/// Verified iff every item passed, Failed if any item failed, Partial
/// when nothing failed but something was skipped.
struct Certificate {
    std::string tag;
    Json inputs = Json::object();
    std::vector<ChecklistItem> checklist;
    Json outputs = Json::object(); // emitted descriptors (group, envelope, ...)

    void add(std::string name, std::string claim, bool pass, Json witness = Json::object());
    void add_skip(std::string name, std::string claim, Json witness = Json::object());

    bool has_fail() const;
    std::string overall() const; // "Verified" | "Failed" | "Partial"
    Json to_json() const;        // versioned: {"schema": 1, ...}
};

/// Canonical serialization: 2-space indent, ordered keys, trailing newline.
std::string canonical_json(const Json& j);

/// Write via temp file + rename so readers never observe a torn file.
void write_text_atomic(const std::string& path, const std::string& content);
void write_json_atomic(const std::string& path, const Json& j);

} // namespace latcert
