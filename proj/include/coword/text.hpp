// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coword/detail/strings.hpp"
#include "coword/error.hpp"

namespace coword {

/// Lower-case words excluded from title vocabularies. The active list's
/// label travels into run manifests so results stay attributable.
struct StopwordList {
    std::unordered_set<std::string> words;
    std::string source = "none";

    bool contains(std::string_view w) const {
        return words.find(std::string(w)) != words.end();
    }
};

/// surface -> singular overrides for words where bare plural-s stripping
/// is wrong (viruses) or destructive (apparatus). Ships as data.
struct PluralExceptions {
    std::unordered_map<std::string, std::string> map;

    const std::string* find(const std::string& w) const {
        auto it = map.find(w);
        return it == map.end() ? nullptr : &it->second;
    }
};

/// One word per line, '#' starts a comment. A `# label: <name>` comment
/// sets the list's source label; otherwise the file stem is used.
inline StopwordList load_stopwords(const std::filesystem::path& path) {
    StopwordList list;
    list.source = path.stem().string();
    std::string text = detail::read_file(path);
    for (const auto& raw : detail::split(text, '\n')) {
        std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto rest = detail::trim(line.substr(1));
            if (detail::starts_with(rest, "label:"))
                list.source = std::string(detail::trim(rest.substr(6)));
            continue;
        }
        auto cut = line.find('#');
        if (cut != std::string_view::npos) line = detail::trim(line.substr(0, cut));
        if (!line.empty()) list.words.insert(detail::lower(line));
    }
    return list;
}

/// TSV: surface TAB singular, '#' comments allowed.
inline PluralExceptions load_plural_exceptions(const std::filesystem::path& path) {
    PluralExceptions ex;
    std::string text = detail::read_file(path);
    for (const auto& raw : detail::split(text, '\n')) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw ConfigError("plural exception line missing TAB: " + std::string(line));
        std::string surface = detail::lower(detail::trim(line.substr(0, tab)));
        std::string singular = detail::lower(detail::trim(line.substr(tab + 1)));
        if (surface.empty() || singular.empty())
            throw ConfigError("empty plural exception entry: " + std::string(line));
        ex.map[surface] = singular;
    }
    return ex;
}

/// Lower-cases and splits on anything that is not an ASCII letter or digit.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (detail::is_ascii_alpha(c) || detail::is_ascii_digit(c)) {
            cur.push_back(detail::to_lower_ascii(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

/// Minimal plural correction: strip one trailing 's' when the token is
/// longer than 3 characters and does not end in "ss". The exception
/// table wins over the rule.
inline std::string singularize(const std::string& token, const PluralExceptions& exceptions = {}) {
    if (const std::string* mapped = exceptions.find(token)) return *mapped;
    size_t n = token.size();
    if (n > 3 && token[n - 1] == 's' && token[n - 2] != 's')
        return token.substr(0, n - 1);
    return token;
}

/// tokenize -> drop one-letter tokens -> drop stopwords -> singularize.
/// Stopwords are re-checked after singularization so no output term is
/// ever a stopword ("uses" -> "use"). Order and duplicates preserved.
inline std::vector<std::string> normalize_title(std::string_view title,
                                                const StopwordList& stopwords,
                                                const PluralExceptions& exceptions = {}) {
    std::vector<std::string> terms;
    for (auto& tok : tokenize(title)) {
        if (tok.size() == 1 && detail::is_ascii_alpha(tok[0])) continue;
        if (stopwords.contains(tok)) continue;
        std::string term = singularize(tok, exceptions);
        if (stopwords.contains(term)) continue;
        terms.push_back(std::move(term));
    }
    return terms;
}

namespace detail {

// Positions of the next straight (") or typographic (U+201C/U+201D) double
// quote at or after `from`; `len` is the matched byte length.
struct QuoteHit {
    size_t pos = std::string_view::npos;
    size_t len = 0;
    bool typographic = false;
    bool closing = false; // U+201D
};

inline QuoteHit find_quote(std::string_view s, size_t from) {
    for (size_t i = from; i < s.size(); ++i) {
        if (s[i] == '"') return {i, 1, false, false};
        if (static_cast<unsigned char>(s[i]) == 0xE2 && i + 2 < s.size() &&
            static_cast<unsigned char>(s[i + 1]) == 0x80) {
            unsigned char b = static_cast<unsigned char>(s[i + 2]);
            if (b == 0x9C) return {i, 3, true, false};
            if (b == 0x9D) return {i, 3, true, true};
        }
    }
    return {};
}

} // namespace detail

/// First span enclosed by a matched pair of double quotation marks,
/// straight or typographic. Whitespace and one trailing comma/period
/// inside the quotes are stripped. No matched pair -> nothing.
inline std::optional<std::string> extract_quoted_title(std::string_view nplr) {
    size_t search = 0;
    while (search < nplr.size()) {
        auto open = detail::find_quote(nplr, search);
        if (open.pos == std::string_view::npos) return std::nullopt;
        if (open.typographic && open.closing) { // stray closer, keep scanning
            search = open.pos + open.len;
            continue;
        }
        size_t body = open.pos + open.len;
        auto close = detail::find_quote(nplr, body);
        // typographic openers match typographic closers, straight match straight
        while (close.pos != std::string_view::npos &&
               (close.typographic != open.typographic ||
                (close.typographic && !close.closing))) {
            close = detail::find_quote(nplr, close.pos + close.len);
        }
        if (close.pos == std::string_view::npos) {
            search = body;
            continue;
        }
        std::string_view span = detail::trim(nplr.substr(body, close.pos - body));
        if (!span.empty() && (span.back() == ',' || span.back() == '.'))
            span = detail::trim(span.substr(0, span.size() - 1));
        if (span.empty()) {
            search = close.pos + close.len;
            continue;
        }
        return std::string(span);
    }
    return std::nullopt;
}

} // namespace coword
