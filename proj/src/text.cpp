// Unicode handling for names and titles, backed by ICU.

#include "pubgames/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace pubgames {

std::string normalize_name(std::string_view raw) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
        throw std::runtime_error(std::string("ICU NFC unavailable: ") + u_errorName(status));
    }
    const auto input = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    const icu::UnicodeString composed = nfc->normalize(input, status);
    if (U_FAILURE(status)) {
        throw std::runtime_error(std::string("NFC normalization failed: ") + u_errorName(status));
    }

    icu::UnicodeString collapsed;
    bool pending_space = false;
    for (int32_t i = 0; i < composed.length();) {
        const UChar32 c = composed.char32At(i);
        i += U16_LENGTH(c);
        if (u_isUWhiteSpace(c)) {
            pending_space = !collapsed.isEmpty();
            continue;
        }
        if (pending_space) {
            collapsed.append(static_cast<UChar>(u' '));
            pending_space = false;
        }
        collapsed.append(c);
    }

    std::string out;
    collapsed.toUTF8String(out);
    return out;
}

std::string casefold(std::string_view text) {
    auto folded = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    folded.foldCase(U_FOLD_CASE_DEFAULT);
    std::string out;
    folded.toUTF8String(out);
    return out;
}

std::optional<ColonSplit> colon_split(std::string_view title) {
    const auto colon = title.find(':');
    if (colon == std::string_view::npos) {
        return std::nullopt;
    }
    std::string_view prefix = title.substr(0, colon);
    std::string_view suffix = title.substr(colon + 1);
    // Normalized text only carries ASCII spaces after the colon.
    while (!suffix.empty() && (suffix.front() == ' ' || suffix.front() == '\t')) {
        suffix.remove_prefix(1);
    }
    if (prefix.empty() || suffix.empty()) {
        return std::nullopt;
    }
    return ColonSplit{std::string(prefix), std::string(suffix)};
}

}  // namespace pubgames
