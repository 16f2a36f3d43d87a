#include "asym/labels.hpp"

namespace asym {

namespace {

// Parses a positive decimal with no leading zeros starting at pos; advances pos.
std::optional<int> parse_index(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) return std::nullopt;
    if (s[start] == '0') return std::nullopt;
    if (pos - start > 9) return std::nullopt;
    return std::stoi(s.substr(start, pos - start));
}

} // namespace

std::optional<VertexRole> VertexRole::parse(const std::string& label) {
    VertexRole r;
    if (label == "x0") { r.tag = Tag::x0; return r; }
    if (label == "y") { r.tag = Tag::y; return r; }
    if (label == "y'") { r.tag = Tag::y_prime; return r; }

    if (label.empty()) return std::nullopt;
    switch (label[0]) {
        case 'u': r.tag = Tag::u; break;
        case 'v': r.tag = Tag::v; break;
        case 'w': r.tag = Tag::w; break;
        default: return std::nullopt;
    }

    size_t pos = 1;
    if (pos < label.size() && label[pos] == '\'') {
        r.prime = true;
        ++pos;
    } else if (pos < label.size() && label[pos] >= '1' && label[pos] <= '9') {
        auto copy = parse_index(label, pos);
        if (!copy) return std::nullopt;
        r.copy = *copy;
    }

    if (pos >= label.size() || label[pos] != '_') return std::nullopt;
    ++pos;
    auto i = parse_index(label, pos);
    if (!i) return std::nullopt;
    r.i = *i;

    if (r.tag == Tag::w) {
        if (pos >= label.size() || label[pos] != '_') return std::nullopt;
        ++pos;
        auto j = parse_index(label, pos);
        if (!j) return std::nullopt;
        r.j = *j;
    }
    return pos == label.size() ? std::optional<VertexRole>(r) : std::nullopt;
}

std::string VertexRole::to_label() const {
    switch (tag) {
        case Tag::x0: return "x0";
        case Tag::y: return "y";
        case Tag::y_prime: return "y'";
        default: break;
    }
    std::string s(1, tag == Tag::u ? 'u' : (tag == Tag::v ? 'v' : 'w'));
    if (prime) s += '\'';
    else if (copy > 0) s += std::to_string(copy);
    s += '_';
    s += std::to_string(i);
    if (tag == Tag::w) {
        s += '_';
        s += std::to_string(j);
    }
    return s;
}

} // namespace asym
