#include "cmtors/classifier/group.hpp"

#include <stdexcept>

namespace cmtors {

TorsionGroup::TorsionGroup(unsigned m, unsigned n) : m_(m), n_(n)
{
    if (m == 0 || n == 0 || n % m != 0)
        throw std::invalid_argument("TorsionGroup: need m | n with m, n > 0");
}

bool TorsionGroup::contains(const TorsionGroup& h) const
{
    return m_ % h.m_ == 0 && n_ % h.n_ == 0;
}

std::string TorsionGroup::to_string() const
{
    std::string s = "C" + std::to_string(n_);
    if (m_ > 1)
        s = "C" + std::to_string(m_) + "x" + s;
    return s;
}

namespace {

std::string subscript(unsigned v)
{
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char c : std::to_string(v))
        s += digits[c - '0'];
    return s;
}

} // namespace

std::string TorsionGroup::pretty() const
{
    std::string s = "C" + subscript(n_);
    if (m_ > 1)
        s = "C" + subscript(m_) + "×" + s;
    return s;
}

std::ostream& operator<<(std::ostream& os, const TorsionGroup& g)
{
    return os << g.to_string();
}

TorsionGroup parse_group(const std::string& s)
{
    auto bad = [&]() { return std::invalid_argument("not a torsion group: '" + s + "'"); };
    auto cyclic_order = [&](const std::string& part) -> unsigned {
        if (part.size() < 2 || part[0] != 'C')
            throw bad();
        for (std::size_t i = 1; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
        return static_cast<unsigned>(std::stoul(part.substr(1)));
    };
    std::string t = s;
    static const char* subs[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    for (int i = 0; i < 10; ++i) {
        const std::string sub = subs[i];
        for (auto pos = t.find(sub); pos != std::string::npos; pos = t.find(sub))
            t.replace(pos, sub.size(), std::string(1, static_cast<char>('0' + i)));
    }
    for (std::string sep : {"×", "X"}) {
        for (auto pos = t.find(sep); pos != std::string::npos; pos = t.find(sep))
            t.replace(pos, sep.size(), "x");
    }
    auto x = t.find('x');
    if (x == std::string::npos)
        return TorsionGroup(1, cyclic_order(t));
    return TorsionGroup(cyclic_order(t.substr(0, x)), cyclic_order(t.substr(x + 1)));
}

} // namespace cmtors
