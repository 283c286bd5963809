#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace verikit {

// ─── Task taxonomy ───────────────────────────────────────────────────────
//
// Six benchmark categories, sixteen subtasks. A subtask's category is fixed,
// so TaskTag stores the subtask only and derives the category; the grouping
// invariant holds by construction.

enum class TaskCategory {
    ConceptExistence,
    ObjectRelation,
    WorldDynamics,
    ImageAnnotation,
    StateValueEvaluation,
    Stem,
};

enum class Subtask {
    Object,
    Attribute,
    AbstractPatterns,
    Spatial,
    NonSpatial,
    StaticPhysics,
    DynamicPhysics,
    BoundingBox,
    Pointing,
    Counting,
    Maze,
    FrozenLake,
    Robotics,
    Gui,
    Chart,
    Latex,
};

inline constexpr std::array<Subtask, 16> kAllSubtasks = {
    Subtask::Object,       Subtask::Attribute,     Subtask::AbstractPatterns, Subtask::Spatial,
    Subtask::NonSpatial,   Subtask::StaticPhysics, Subtask::DynamicPhysics,   Subtask::BoundingBox,
    Subtask::Pointing,     Subtask::Counting,      Subtask::Maze,             Subtask::FrozenLake,
    Subtask::Robotics,     Subtask::Gui,           Subtask::Chart,            Subtask::Latex,
};

inline constexpr TaskCategory category_of(Subtask s) {
    switch (s) {
        case Subtask::Object:
        case Subtask::Attribute:
        case Subtask::AbstractPatterns:
            return TaskCategory::ConceptExistence;
        case Subtask::Spatial:
        case Subtask::NonSpatial:
            return TaskCategory::ObjectRelation;
        case Subtask::StaticPhysics:
        case Subtask::DynamicPhysics:
            return TaskCategory::WorldDynamics;
        case Subtask::BoundingBox:
        case Subtask::Pointing:
        case Subtask::Counting:
            return TaskCategory::ImageAnnotation;
        case Subtask::Maze:
        case Subtask::FrozenLake:
        case Subtask::Robotics:
        case Subtask::Gui:
            return TaskCategory::StateValueEvaluation;
        case Subtask::Chart:
        case Subtask::Latex:
            return TaskCategory::Stem;
    }
    return TaskCategory::Stem;  // unreachable
}

/// Stable lowercase snake-case names used in the JSONL schema.
inline constexpr std::string_view to_string(Subtask s) {
    switch (s) {
        case Subtask::Object: return "object";
        case Subtask::Attribute: return "attribute";
        case Subtask::AbstractPatterns: return "abstract_patterns";
        case Subtask::Spatial: return "spatial";
        case Subtask::NonSpatial: return "non_spatial";
        case Subtask::StaticPhysics: return "static_physics";
        case Subtask::DynamicPhysics: return "dynamic_physics";
        case Subtask::BoundingBox: return "bounding_box";
        case Subtask::Pointing: return "pointing";
        case Subtask::Counting: return "counting";
        case Subtask::Maze: return "maze";
        case Subtask::FrozenLake: return "frozen_lake";
        case Subtask::Robotics: return "robotics";
        case Subtask::Gui: return "gui";
        case Subtask::Chart: return "chart";
        case Subtask::Latex: return "latex";
    }
    return "";
}

inline constexpr std::string_view to_string(TaskCategory c) {
    switch (c) {
        case TaskCategory::ConceptExistence: return "Concept Existence";
        case TaskCategory::ObjectRelation: return "Object Relation";
        case TaskCategory::WorldDynamics: return "World Dynamics";
        case TaskCategory::ImageAnnotation: return "Image Annotation";
        case TaskCategory::StateValueEvaluation: return "State Value Evaluation";
        case TaskCategory::Stem: return "STEM";
    }
    return "";
}

/// Short column headers for rendered report tables.
inline constexpr std::string_view short_name(Subtask s) {
    switch (s) {
        case Subtask::Object: return "Obj.";
        case Subtask::Attribute: return "Attr.";
        case Subtask::AbstractPatterns: return "Abs.P.";
        case Subtask::Spatial: return "Spat.";
        case Subtask::NonSpatial: return "N-Spat.";
        case Subtask::StaticPhysics: return "S-Phy";
        case Subtask::DynamicPhysics: return "D-Phy";
        case Subtask::BoundingBox: return "BBox";
        case Subtask::Pointing: return "Point";
        case Subtask::Counting: return "Count";
        case Subtask::Maze: return "Maze";
        case Subtask::FrozenLake: return "F.Lake";
        case Subtask::Robotics: return "Robot.";
        case Subtask::Gui: return "GUI";
        case Subtask::Chart: return "Chart";
        case Subtask::Latex: return "LaTeX";
    }
    return "";
}

inline std::optional<Subtask> subtask_from_string(std::string_view name) {
    for (Subtask s : kAllSubtasks)
        if (to_string(s) == name) return s;
    return std::nullopt;
}

struct TaskTag {
    Subtask subtask = Subtask::Object;

    TaskCategory category() const { return category_of(subtask); }
    std::string_view name() const { return to_string(subtask); }
    auto operator<=>(const TaskTag&) const = default;
};

// ─── Verdicts and samples ────────────────────────────────────────────────

/// A verifier's parsed output. When parsing fails, well_formed is false and
/// answer is the forced default (false) so a malformed reply is scored as a
/// format violation, never as a confident prediction.
struct Verdict {
    bool answer = false;
    std::string explanation;
    std::optional<std::string> edit_prompt;
    bool well_formed = false;
    std::string raw;

    bool operator==(const Verdict&) const = default;
};

/// One benchmark/training item. `label == false` requires a non-empty
/// ground-truth explanation; true-labeled items carry an empty one.
struct VerificationSample {
    std::string id;
    TaskTag task;
    std::string question;
    std::vector<std::string> images;  // file paths (relative to the dataset) or data URIs
    bool label = true;
    std::string explanation;
    std::optional<std::string> pair_id;
    nlohmann::json meta = nlohmann::json::object();

    bool operator==(const VerificationSample&) const = default;
};

struct Prediction {
    std::string sample_id;
    Verdict verdict;
    std::int64_t latency_ms = 0;
    std::string backend_id;
};

struct DatasetManifest {
    std::filesystem::path path;
    std::size_t count = 0;
    std::map<Subtask, std::size_t> per_task;
    double balance = 0.0;  // fraction of true-labeled samples
};

}  // namespace verikit
