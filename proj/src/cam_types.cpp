#include "camtax/cam_types.hpp"

#include "camtax/hash.hpp"

namespace camtax {

std::string category_id(CategoryKind kind, const std::string& title, const std::string& explanation) {
    const char* prefix = kind == CategoryKind::Base ? "cat-" : "abs-";
    return prefix + fnv1a64_hex(title + '\x1f' + explanation);
}

CamCategory make_base_category(std::string title, std::string explanation,
                               std::vector<std::string> source_code_ids) {
    CamCategory c;
    c.kind = CategoryKind::Base;
    c.id = category_id(c.kind, title, explanation);
    c.title = std::move(title);
    c.explanation = std::move(explanation);
    c.source_code_ids = std::move(source_code_ids);
    return c;
}

CamCategory make_abstract_category(std::string title, std::string explanation) {
    CamCategory c;
    c.kind = CategoryKind::Abstract;
    c.id = category_id(c.kind, title, explanation);
    c.title = std::move(title);
    c.explanation = std::move(explanation);
    return c;
}

} // namespace camtax
