#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "verikit/types.hpp"

namespace verikit {

namespace parsedetail {

/// Finds the minimal balanced `{...}` span starting at `start` (which must
/// point at a '{'), honoring JSON string literals and escapes. Returns the
/// index one past the closing brace, or npos if the span never closes.
inline std::size_t balanced_end(std::string_view text, std::size_t start) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"')
            in_string = true;
        else if (c == '{')
            ++depth;
        else if (c == '}') {
            --depth;
            if (depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

}  // namespace parsedetail

/// Extracts the last syntactically valid JSON object embedded in free text.
/// "Last" means the object whose closing brace appears furthest right; among
/// candidates ending at the same position the outermost (earliest start)
/// wins. Returns nullopt when no parseable object exists.
inline std::optional<nlohmann::json> extract_last_json_object(std::string_view text) {
    bool have_best = false;
    std::size_t best_end = 0;
    nlohmann::json best;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '{') continue;
        std::size_t end = parsedetail::balanced_end(text, i);
        if (end == std::string_view::npos) continue;
        // Candidates nested inside an accepted object close strictly earlier,
        // so "furthest-right end wins" also prefers the outermost object.
        if (have_best && end <= best_end) continue;
        auto parsed = nlohmann::json::parse(text.substr(i, end - i), nullptr, /*allow_exceptions=*/false);
        if (parsed.is_discarded() || !parsed.is_object()) continue;
        have_best = true;
        best_end = end;
        best = std::move(parsed);
    }
    if (!have_best) return std::nullopt;
    return best;
}

/// Total parse of raw verifier text into a Verdict. Never throws: malformed
/// output yields well_formed=false, answer=false, empty explanation.
inline Verdict parse_verdict(std::string_view raw) {
    Verdict v;
    v.raw = std::string(raw);

    auto obj = extract_last_json_object(raw);
    if (!obj) return v;

    auto it = obj->find("answer");
    if (it == obj->end()) return v;
    if (it->is_boolean()) {
        v.answer = it->get<bool>();
    } else if (it->is_string()) {
        std::string s = it->get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        if (s == "true")
            v.answer = true;
        else if (s == "false")
            v.answer = false;
        else
            return v;
    } else {
        return v;  // any other value type is a format violation
    }
    v.well_formed = true;

    if (auto e = obj->find("explanation"); e != obj->end() && e->is_string())
        v.explanation = e->get<std::string>();
    if (auto p = obj->find("edit_prompt"); p != obj->end() && p->is_string() && !p->get<std::string>().empty())
        v.edit_prompt = p->get<std::string>();
    return v;
}

/// Serializes a verdict back into the canonical raw response form.
inline std::string verdict_to_raw(bool answer, const std::string& explanation = "",
                                  const std::optional<std::string>& edit_prompt = std::nullopt) {
    nlohmann::ordered_json j;
    j["answer"] = answer;
    if (!explanation.empty()) j["explanation"] = explanation;
    if (edit_prompt) j["edit_prompt"] = *edit_prompt;
    return j.dump();
}

}  // namespace verikit
