#include "latcert/certificate.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "latcert/errors.hpp"

namespace latcert {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Skip: return "Skip";
    }
    return "?";
}

void Certificate::add(std::string name, std::string claim, bool pass, Json witness) {
    checklist.push_back({std::move(name), std::move(claim),
                         pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
}

void Certificate::add_skip(std::string name, std::string claim, Json witness) {
    checklist.push_back({std::move(name), std::move(claim), CheckStatus::Skip, std::move(witness)});
}

bool Certificate::has_fail() const {
    for (const auto& it : checklist)
        if (it.status == CheckStatus::Fail) return true;
    return false;
}

std::string Certificate::overall() const {
    bool skip = false;
    for (const auto& it : checklist) {
        if (it.status == CheckStatus::Fail) return "Failed";
        if (it.status == CheckStatus::Skip) skip = true;
    }
    return skip ? "Partial" : "Verified";
}

Json Certificate::to_json() const {
    Json j;
    j["schema"] = 1;
    j["construction"] = tag;
    j["inputs"] = inputs;
    Json items = Json::array();
    for (const auto& it : checklist) {
        Json e;
        e["name"] = it.name;
        e["claim"] = it.claim;
        e["status"] = to_string(it.status);
        if (!it.witness.empty()) e["witness"] = it.witness;
        items.push_back(std::move(e));
    }
    j["checklist"] = std::move(items);
    if (!outputs.empty()) j["outputs"] = outputs;
    j["overall"] = overall();
    return j;
}

std::string canonical_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) fail(errc::invalid_argument, "cannot open for writing: " + tmp);
        os << content;
        os.flush();
        if (!os) fail(errc::invalid_argument, "write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(errc::invalid_argument, "rename failed: " + path);
}

void write_json_atomic(const std::string& path, const Json& j) {
    write_text_atomic(path, canonical_json(j));
}

} // namespace latcert
