#include "zsum/literal.hpp"

#include "zsum/error.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace zsum {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::int64_t parse_int(std::string_view text)
{
    text = trim(text);
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::int64_t> parse_list(std::string_view text)
{
    text = trim(text);
    std::vector<std::int64_t> out;
    if (text.empty()) {
        return out;
    }
    for (auto part : split(text, ',')) {
        out.push_back(parse_int(part));
    }
    return out;
}

} // namespace

Group parse_group(std::string_view text)
{
    return make_group(parse_list(text));
}

GroupElement parse_element(const Group& group, std::string_view text)
{
    return group.element(parse_list(text));
}

GSequence parse_sequence(const Group& group, std::string_view input)
{
    // U+00D7 is accepted as a multiplicity mark alongside 'x'.
    std::string normalized(input);
    for (std::size_t pos; (pos = normalized.find("\xC3\x97")) != std::string::npos;) {
        normalized.replace(pos, 2, "x");
    }
    std::string_view text = trim(normalized);
    GSequence s(group);
    if (text.empty()) {
        return s;
    }
    for (auto item : split(text, ';')) {
        item = trim(item);
        if (item.empty()) {
            throw Error(ErrorKind::Parse, "empty sequence item");
        }
        std::int64_t count = 1;
        const std::size_t x = item.find('x');
        if (x != std::string_view::npos) {
            count = parse_int(item.substr(x + 1));
            if (count < 1) {
                throw Error(ErrorKind::Parse, "multiplicity must be positive");
            }
            item = item.substr(0, x);
        }
        s.push(parse_element(group, item), count);
    }
    return s;
}

} // namespace zsum
