#pragma once

#include <string>
#include <utility>
#include <vector>

namespace camtax {

// A single detected misuse occurrence. `code` is the identifier of the
// program the instance was found in.
struct CamInstance {
    std::string abstract;
    std::string detail;
    std::string code;

    bool operator==(const CamInstance&) const = default;
};

// Output of the grouping step: instances of the same nature, with their
// program identifiers merged and details concatenated.
struct MergedInstance {
    std::string abstract;
    std::string detail;
    std::vector<std::string> code_ids; // deduplicated, first-seen order

    bool operator==(const MergedInstance&) const = default;
};

enum class CategoryKind { Base, Abstract };

struct CamCategory {
    std::string id; // content hash of (title, explanation), stable within a run
    std::string title;
    std::string explanation;
    CategoryKind kind = CategoryKind::Base;
    std::vector<std::string> source_code_ids; // Base categories only

    bool operator==(const CamCategory&) const = default;
};

// Deterministic id for a category. Abstract and base ids use distinct
// prefixes so a title collision across kinds cannot alias.
std::string category_id(CategoryKind kind, const std::string& title, const std::string& explanation);

CamCategory make_base_category(std::string title, std::string explanation,
                               std::vector<std::string> source_code_ids);
CamCategory make_abstract_category(std::string title, std::string explanation);

// Additive change proposed for a taxonomy. Edge endpoints may reference a
// node by id or by title; resolution happens when the delta is applied.
struct TaxonomyDelta {
    std::vector<CamCategory> new_nodes; // always kind=Abstract when LLM-proposed
    std::vector<std::pair<std::string, std::string>> new_edges; // (parent_ref, child_ref)
    std::vector<std::string> new_keywords;
};

} // namespace camtax
