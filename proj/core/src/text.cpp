#include "hecke0/text.hpp"

#include <cctype>
#include <string>

#include "hecke0/errors.hpp"

namespace hecke0::text {
namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Parses a comma-separated list of integers between the given delimiters,
// starting at pos; advances pos past the closing delimiter.
std::vector<int> parse_list_at(const std::string& s, std::size_t& pos, char open, char close) {
    if (pos >= s.size() || s[pos] != open)
        throw ParseError(std::string("expected '") + open + "' at offset " + std::to_string(pos) + " in \"" + s + "\"");
    ++pos;
    std::vector<int> values;
    if (pos < s.size() && s[pos] == close) {
        ++pos;
        return values;
    }
    for (;;) {
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (s[start] == '-' && pos == start + 1))
            throw ParseError("expected an integer at offset " + std::to_string(start) + " in \"" + s + "\"");
        try {
            values.push_back(std::stoi(s.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range in \"" + s + "\"");
        }
        if (pos >= s.size()) throw ParseError(std::string("missing '") + close + "' in \"" + s + "\"");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == close) {
            ++pos;
            return values;
        }
        throw ParseError("unexpected '" + std::string(1, s[pos]) + "' at offset " + std::to_string(pos) + " in \"" +
                         s + "\"");
    }
}

template <typename T, typename Make>
T wrap_invalid(Make&& make) {
    try {
        return make();
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::vector<int> parse_int_list(std::string_view raw) {
    const std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty list");
    const char open = s.front();
    const char close = open == '(' ? ')' : ']';
    if (open != '[' && open != '(') throw ParseError("expected '[' or '(' in \"" + s + "\"");
    std::size_t pos = 0;
    auto values = parse_list_at(s, pos, open, close);
    if (pos != s.size()) throw ParseError("trailing characters in \"" + s + "\"");
    return values;
}

Partition parse_partition(std::string_view s) {
    auto parts = parse_int_list(s);
    return wrap_invalid<Partition>([&] { return Partition(parts); });
}

Permutation parse_permutation(std::string_view s) {
    auto w = parse_int_list(s);
    return wrap_invalid<Permutation>([&] { return Permutation(w); });
}

Word parse_word(std::string_view raw) {
    const std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty word");
    if (s.front() == '[' || s.front() == '(') {
        Word w = parse_int_list(s);
        for (int x : w)
            if (x < 1) throw ParseError("word letters must be positive");
        return w;
    }
    Word w;
    for (char c : s) {
        if (c < '1' || c > '9') throw ParseError("bare words must consist of digits 1-9: \"" + s + "\"");
        w.push_back(c - '0');
    }
    return w;
}

std::vector<std::vector<int>> parse_row_sets(std::string_view raw) {
    const std::string s = strip(raw);
    std::size_t pos = 0;
    if (s.empty() || s[pos] != '{') throw ParseError("expected '{' in \"" + s + "\"");
    ++pos;
    std::vector<std::vector<int>> rows;
    for (;;) {
        rows.push_back(parse_list_at(s, pos, '{', '}'));
        if (pos >= s.size()) throw ParseError("missing '}' in \"" + s + "\"");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == '}') {
            ++pos;
            break;
        }
        throw ParseError("unexpected '" + std::string(1, s[pos]) + "' in \"" + s + "\"");
    }
    if (pos != s.size()) throw ParseError("trailing characters in \"" + s + "\"");
    return rows;
}

Tableau parse_tableau(std::string_view s) {
    auto rows = parse_row_sets(s);
    return wrap_invalid<Tableau>([&] { return Tableau(rows); });
}

Tabloid parse_tabloid(std::string_view s) {
    auto rows = parse_row_sets(s);
    return wrap_invalid<Tabloid>([&] { return Tabloid(rows); });
}

}  // namespace hecke0::text
