#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace camtax {

enum class Language { C_CPP, Java, Python, Go, Unknown };

std::string_view language_name(Language lang);
Language language_from_name(std::string_view name);
Language language_from_extension(std::string_view path);

// One source program. `id` is the path relative to the corpus root, with
// '/' separators; it is the stable identifier every later stage uses.
struct ProgramUnit {
    std::string id;
    Language language = Language::Unknown;
    std::string source;
    std::size_t byte_len = 0;
};

// A contiguous, token-bounded segment of one program. Slices of a program,
// concatenated in index order, reproduce its source byte-for-byte.
struct CodeSlice {
    std::string program_id;
    std::size_t index = 0;
    std::string text;
    std::size_t est_tokens = 0;
    bool crypto_relevant = false;
};

// Case-insensitive keywords used to judge crypto relevance.
class CryptoKeywordSet {
public:
    // Defaults to {"crypto", "javax.crypto", "OpenSSL"}.
    CryptoKeywordSet();
    explicit CryptoKeywordSet(std::vector<std::string> keywords);

    void add(std::string keyword); // case-folded dedupe
    const std::vector<std::string>& keywords() const { return keywords_; }

private:
    std::vector<std::string> keywords_;
};

// ceil(bytes / 4): a deliberately pessimistic budget proxy; the pipeline
// never needs an exact tokenizer, only a bound that keeps requests under
// the model's token limit.
std::size_t estimate_tokens(std::string_view text);

bool is_crypto_relevant(std::string_view text, const CryptoKeywordSet& keywords);

// Splits at line boundaries; a single line over the budget is hard-split at
// the byte budget. Empty source yields no slices.
std::vector<CodeSlice> slice_program(const ProgramUnit& unit, std::size_t budget,
                                     const CryptoKeywordSet& keywords);

struct CorpusLoad {
    std::vector<ProgramUnit> units; // sorted by id
    std::vector<std::string> warnings; // skipped files (non-UTF-8, unreadable)
};

// Loads every file under root whose extension is in `extensions`
// (empty list = accept all). Non-UTF-8 files are skipped with a warning.
CorpusLoad load_corpus(const std::filesystem::path& root,
                       const std::vector<std::string>& extensions);

} // namespace camtax
