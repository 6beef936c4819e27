#include "camtax/corpus.hpp"

#include "camtax/errors.hpp"
#include "camtax/fsio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace camtax {

namespace fs = std::filesystem;

std::string_view language_name(Language lang) {
    switch (lang) {
    case Language::C_CPP: return "C_CPP";
    case Language::Java: return "Java";
    case Language::Python: return "Python";
    case Language::Go: return "Go";
    case Language::Unknown: return "Unknown";
    }
    return "Unknown";
}

Language language_from_name(std::string_view name) {
    if (name == "C_CPP") return Language::C_CPP;
    if (name == "Java") return Language::Java;
    if (name == "Python") return Language::Python;
    if (name == "Go") return Language::Go;
    return Language::Unknown;
}

Language language_from_extension(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return Language::Unknown;
    std::string ext = to_lower_ascii(path.substr(dot));
    if (ext == ".c" || ext == ".cc" || ext == ".cpp" || ext == ".h") return Language::C_CPP;
    if (ext == ".java") return Language::Java;
    if (ext == ".py") return Language::Python;
    if (ext == ".go") return Language::Go;
    return Language::Unknown;
}

CryptoKeywordSet::CryptoKeywordSet() : CryptoKeywordSet({"crypto", "javax.crypto", "OpenSSL"}) {}

CryptoKeywordSet::CryptoKeywordSet(std::vector<std::string> keywords) {
    if (keywords.empty()) {
        throw InputError("crypto keyword set must be non-empty");
    }
    for (auto& k : keywords) {
        add(std::move(k));
    }
}

void CryptoKeywordSet::add(std::string keyword) {
    if (keyword.empty()) return;
    std::string folded = to_lower_ascii(keyword);
    for (const auto& existing : keywords_) {
        if (to_lower_ascii(existing) == folded) return;
    }
    keywords_.push_back(std::move(keyword));
}

std::size_t estimate_tokens(std::string_view text) {
    return (text.size() + 3) / 4;
}

bool is_crypto_relevant(std::string_view text, const CryptoKeywordSet& keywords) {
    for (const auto& k : keywords.keywords()) {
        if (contains_ci(text, k)) return true;
    }
    return false;
}

namespace {

CodeSlice make_slice(const ProgramUnit& unit, std::size_t index, std::string text,
                     const CryptoKeywordSet& keywords) {
    CodeSlice s;
    s.program_id = unit.id;
    s.index = index;
    s.est_tokens = estimate_tokens(text);
    s.crypto_relevant = is_crypto_relevant(text, keywords);
    s.text = std::move(text);
    return s;
}

} // namespace

std::vector<CodeSlice> slice_program(const ProgramUnit& unit, std::size_t budget,
                                     const CryptoKeywordSet& keywords) {
    if (budget == 0) {
        throw InputError("slice budget must be positive");
    }
    std::vector<CodeSlice> slices;
    if (unit.source.empty()) return slices;

    const std::size_t budget_bytes = budget * 4; // estimate_tokens(n bytes) <= budget iff n <= 4*budget
    const std::string& src = unit.source;

    std::string current;
    auto flush = [&]() {
        if (!current.empty()) {
            slices.push_back(make_slice(unit, slices.size(), std::move(current), keywords));
            current.clear();
        }
    };

    std::size_t pos = 0;
    while (pos < src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::size_t line_end = nl == std::string::npos ? src.size() : nl + 1;
        std::size_t line_len = line_end - pos;

        if (line_len > budget_bytes) {
            // Oversized single line: hard-split at the byte budget.
            flush();
            while (line_len > 0) {
                std::size_t take = std::min(line_len, budget_bytes);
                slices.push_back(make_slice(unit, slices.size(), src.substr(pos, take), keywords));
                pos += take;
                line_len -= take;
            }
        } else if (current.size() + line_len > budget_bytes) {
            flush();
            current = src.substr(pos, line_len);
            pos = line_end;
        } else {
            current.append(src, pos, line_len);
            pos = line_end;
        }
    }
    flush();
    return slices;
}

CorpusLoad load_corpus(const fs::path& root, const std::vector<std::string>& extensions) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("corpus root is not a readable directory: " + root.string());
    }

    std::set<std::string> wanted;
    for (const auto& e : extensions) {
        wanted.insert(to_lower_ascii(e));
    }

    CorpusLoad result;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        throw IoError("cannot iterate corpus root: " + root.string() + ": " + ec.message());
    }
    for (const auto& entry : it) {
        if (!entry.is_regular_file(ec)) continue;
        const fs::path& p = entry.path();
        if (!wanted.empty()) {
            std::string ext = to_lower_ascii(p.extension().string());
            if (!wanted.count(ext)) continue;
        }
        std::string rel = fs::relative(p, root, ec).generic_string();
        if (ec) rel = p.generic_string();

        std::string bytes;
        try {
            bytes = read_text_file(p);
        } catch (const IoError& e) {
            result.warnings.push_back(std::string("skipped unreadable file: ") + rel);
            continue;
        }
        if (!is_valid_utf8(bytes)) {
            result.warnings.push_back("skipped non-UTF-8 file: " + rel);
            continue;
        }

        ProgramUnit unit;
        unit.id = std::move(rel);
        unit.language = language_from_extension(unit.id);
        unit.byte_len = bytes.size();
        unit.source = std::move(bytes);
        result.units.push_back(std::move(unit));
    }

    std::sort(result.units.begin(), result.units.end(),
              [](const ProgramUnit& a, const ProgramUnit& b) { return a.id < b.id; });
    std::sort(result.warnings.begin(), result.warnings.end());
    return result;
}

} // namespace camtax
