#include "strings.hpp"

#include <stdexcept>

#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

namespace lto::str {

namespace {

std::u16string to_utf16(std::string_view utf8) {
    std::u16string out(utf8.size() + 1, u'\0');
    UErrorCode ec = U_ZERO_ERROR;
    int32_t len = 0;
    u_strFromUTF8(out.data(), static_cast<int32_t>(out.size()), &len,
                  utf8.data(), static_cast<int32_t>(utf8.size()), &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("invalid UTF-8 input");
    out.resize(static_cast<size_t>(len));
    return out;
}

std::string to_utf8(const std::u16string& utf16) {
    std::string out(utf16.size() * 4 + 1, '\0');
    UErrorCode ec = U_ZERO_ERROR;
    int32_t len = 0;
    u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &len,
                utf16.data(), static_cast<int32_t>(utf16.size()), &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("UTF-16 to UTF-8 conversion failed");
    out.resize(static_cast<size_t>(len));
    return out;
}

} // namespace

std::string nfc(std::string_view utf8) {
    std::u16string in = to_utf16(utf8);
    UErrorCode ec = U_ZERO_ERROR;
    const UNormalizer2* norm = unorm2_getNFCInstance(&ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("NFC normalizer unavailable");
    std::u16string out(in.size() * 2 + 8, u'\0');
    int32_t len = unorm2_normalize(norm, in.data(), static_cast<int32_t>(in.size()),
                                   out.data(), static_cast<int32_t>(out.size()), &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("NFC normalization failed");
    out.resize(static_cast<size_t>(len));
    return to_utf8(out);
}

std::string casefold(std::string_view utf8) {
    std::u16string in = to_utf16(utf8);
    std::u16string out(in.size() * 2 + 8, u'\0');
    UErrorCode ec = U_ZERO_ERROR;
    int32_t len = u_strFoldCase(out.data(), static_cast<int32_t>(out.size()),
                                in.data(), static_cast<int32_t>(in.size()),
                                U_FOLD_CASE_DEFAULT, &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("case folding failed");
    out.resize(static_cast<size_t>(len));
    return to_utf8(out);
}

bool valid_utf8(std::string_view bytes) {
    int32_t i = 0;
    const int32_t n = static_cast<int32_t>(bytes.size());
    const uint8_t* s = reinterpret_cast<const uint8_t*>(bytes.data());
    while (i < n) {
        UChar32 c;
        U8_NEXT(s, i, n, c);
        if (c < 0)
            return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    return rtrim(s.substr(std::min(s.find_first_not_of(" \t"), s.size())));
}

std::string_view rtrim(std::string_view s) {
    size_t end = s.find_last_not_of(" \t\r");
    return end == std::string_view::npos ? std::string_view{} : s.substr(0, end + 1);
}

bool contains_fold(std::string_view haystack, std::string_view needle) {
    return casefold(haystack).find(casefold(needle)) != std::string::npos;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

} // namespace lto::str
