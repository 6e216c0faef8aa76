#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace cmtors {

// C_m x C_n with m | n; C_1 x C_n is written C_n.
class TorsionGroup {
public:
    TorsionGroup() = default;
    // Throws std::invalid_argument unless m, n > 0 and m | n.
    TorsionGroup(unsigned m, unsigned n);
    static TorsionGroup cyclic(unsigned n) { return TorsionGroup(1, n); }

    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    unsigned order() const { return m_ * n_; }

    // Abstract subgroup test: C_a x C_b embeds in C_m x C_n iff a | m and b | n.
    bool contains(const TorsionGroup& h) const;
    bool strictly_contains(const TorsionGroup& h) const { return contains(h) && h != *this; }

    // "C2xC6"
    std::string to_string() const;
    // "C₂×C₆"
    std::string pretty() const;

    auto operator<=>(const TorsionGroup& o) const
    {
        if (auto c = order() <=> o.order(); c != 0)
            return c;
        return m_ <=> o.m_;
    }
    bool operator==(const TorsionGroup&) const = default;

private:
    unsigned m_ = 1, n_ = 1;
};

std::ostream& operator<<(std::ostream& os, const TorsionGroup& g);

// Parses "C6", "C2xC6" or "C2×C6".
TorsionGroup parse_group(const std::string& s);

} // namespace cmtors
