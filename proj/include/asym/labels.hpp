#ifndef ASYM_LABELS_HPP
#define ASYM_LABELS_HPP

#include <optional>
#include <string>

namespace asym {

// Structured form of the construction label grammar. Indices are 1-based as
// in the generated labels:
//   "u_3", "v_12", "w_4_2"   plain Construction-1 roles
//   "u2_3", "w3_4_1"         copy-qualified (copy = 2, 3)
//   "u'_3", "w'_4_2"         primed second copy
//   "x0", "y", "y'"          specials
struct VertexRole {
    enum class Tag { u, v, w, x0, y, y_prime };

    Tag tag = Tag::x0;
    int i = 0;          // main index, 0 when not applicable
    int j = 0;          // layer index, w only
    int copy = 0;       // 0 = unqualified
    bool prime = false;

    static std::optional<VertexRole> parse(const std::string& label);
    std::string to_label() const;

    bool operator==(const VertexRole& other) const {
        return tag == other.tag && i == other.i && j == other.j && copy == other.copy &&
               prime == other.prime;
    }
};

} // namespace asym

#endif // ASYM_LABELS_HPP
