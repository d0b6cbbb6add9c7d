#ifndef OSCBASIS_LABELS_HPP
#define OSCBASIS_LABELS_HPP

#include <array>
#include <string>

namespace osc {

// Corner letters a,b,c and the three side labels ab,bc,ca. Cyclic alphabetical
// order is a->b->c->a and ab->bc->ca->ab.
enum class Letter : int { A = 0, B = 1, C = 2 };
enum class Side : int { AB = 0, BC = 1, CA = 2 };

inline Letter nextLetter(Letter x) { return static_cast<Letter>((static_cast<int>(x) + 1) % 3); }
inline Letter prevLetter(Letter x) { return static_cast<Letter>((static_cast<int>(x) + 2) % 3); }
inline Side nextSide(Side k) { return static_cast<Side>((static_cast<int>(k) + 1) % 3); }
inline Side prevSide(Side k) { return static_cast<Side>((static_cast<int>(k) + 2) % 3); }

// Side whose endpoints carry letters {x,y}; the label is the cyclic-alphabetical
// ordering of the pair, so sideOf(a,b)=sideOf(b,a)=ab.
inline Side sideOf(Letter x, Letter y) {
    if (nextLetter(x) == y) return static_cast<Side>(static_cast<int>(x));
    return static_cast<Side>(static_cast<int>(y));
}

inline Letter sideFirst(Side k) { return static_cast<Letter>(static_cast<int>(k)); }
inline Letter sideSecond(Side k) { return nextLetter(sideFirst(k)); }

// +1 on the six cyclic-alphabetical pairs, -1 on their reverses, 0 on equal.
inline int epsilon(Letter k, Letter l) {
    if (k == l) return 0;
    return nextLetter(k) == l ? 1 : -1;
}
inline int epsilon(Side k, Side l) {
    if (k == l) return 0;
    return nextSide(k) == l ? 1 : -1;
}

inline const char* letterName(Letter x) {
    static const char* names[3] = {"a", "b", "c"};
    return names[static_cast<int>(x)];
}
inline const char* sideName(Side k) {
    static const char* names[3] = {"ab", "bc", "ca"};
    return names[static_cast<int>(k)];
}

} // namespace osc

#endif
