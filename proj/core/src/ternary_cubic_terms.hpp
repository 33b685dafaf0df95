#pragma once

// Generated term tables: SL(3)-invariants of a ternary cubic written in
// raw monomial coefficients (lex-decreasing exponent order: x^3, x^2y,
// x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3). Normalized so that on
// x^3+y^3+z^3+t*xyz with phi = t/6: S = phi - phi^4, T = 1 - 20phi^3 - 8phi^6,
// and 64*S^3 + T^2 = (1 + 8 phi^3)^3.

namespace milrec::detail {

template <int Arity> struct InvariantTerm {
    long num;
    long den;
    int idx[Arity];
};

inline constexpr InvariantTerm<4> kAronholdSTerms[] = {
    {-1, 9, {0, 3, 7, 9}},
    {1, 27, {0, 3, 8, 8}},
    {1, 6, {0, 4, 6, 9}},
    {-1, 54, {0, 4, 7, 8}},
    {-1, 9, {0, 5, 6, 8}},
    {1, 27, {0, 5, 7, 7}},
    {1, 27, {1, 1, 7, 9}},
    {-1, 81, {1, 1, 8, 8}},
    {-1, 9, {1, 2, 6, 9}},
    {1, 81, {1, 2, 7, 8}},
    {-1, 54, {1, 3, 4, 9}},
    {1, 81, {1, 3, 5, 8}},
    {1, 162, {1, 4, 4, 8}},
    {-1, 54, {1, 4, 5, 7}},
    {1, 27, {1, 5, 5, 6}},
    {1, 27, {2, 2, 6, 8}},
    {-1, 81, {2, 2, 7, 7}},
    {1, 27, {2, 3, 3, 9}},
    {-1, 54, {2, 3, 4, 8}},
    {1, 81, {2, 3, 5, 7}},
    {1, 162, {2, 4, 4, 7}},
    {-1, 54, {2, 4, 5, 6}},
    {-1, 81, {3, 3, 5, 5}},
    {1, 162, {3, 4, 4, 5}},
    {-1, 1296, {4, 4, 4, 4}},
};

inline constexpr InvariantTerm<6> kAronholdTTerms[] = {
    {1, 1, {0, 0, 6, 6, 9, 9}},
    {-2, 3, {0, 0, 6, 7, 8, 9}},
    {4, 27, {0, 0, 6, 8, 8, 8}},
    {4, 27, {0, 0, 7, 7, 7, 9}},
    {-1, 27, {0, 0, 7, 7, 8, 8}},
    {-2, 3, {0, 1, 3, 6, 9, 9}},
    {2, 9, {0, 1, 3, 7, 8, 9}},
    {-4, 81, {0, 1, 3, 8, 8, 8}},
    {2, 9, {0, 1, 4, 6, 8, 9}},
    {-4, 27, {0, 1, 4, 7, 7, 9}},
    {2, 81, {0, 1, 4, 7, 8, 8}},
    {2, 9, {0, 1, 5, 6, 7, 9}},
    {-4, 27, {0, 1, 5, 6, 8, 8}},
    {2, 81, {0, 1, 5, 7, 7, 8}},
    {2, 9, {0, 2, 3, 6, 8, 9}},
    {-4, 27, {0, 2, 3, 7, 7, 9}},
    {2, 81, {0, 2, 3, 7, 8, 8}},
    {2, 9, {0, 2, 4, 6, 7, 9}},
    {-4, 27, {0, 2, 4, 6, 8, 8}},
    {2, 81, {0, 2, 4, 7, 7, 8}},
    {-2, 3, {0, 2, 5, 6, 6, 9}},
    {2, 9, {0, 2, 5, 6, 7, 8}},
    {-4, 81, {0, 2, 5, 7, 7, 7}},
    {4, 27, {0, 3, 3, 3, 9, 9}},
    {-4, 27, {0, 3, 3, 4, 8, 9}},
    {-4, 27, {0, 3, 3, 5, 7, 9}},
    {8, 81, {0, 3, 3, 5, 8, 8}},
    {1, 9, {0, 3, 4, 4, 7, 9}},
    {1, 81, {0, 3, 4, 4, 8, 8}},
    {2, 9, {0, 3, 4, 5, 6, 9}},
    {-10, 81, {0, 3, 4, 5, 7, 8}},
    {-4, 27, {0, 3, 5, 5, 6, 8}},
    {8, 81, {0, 3, 5, 5, 7, 7}},
    {-5, 54, {0, 4, 4, 4, 6, 9}},
    {-1, 162, {0, 4, 4, 4, 7, 8}},
    {1, 9, {0, 4, 4, 5, 6, 8}},
    {1, 81, {0, 4, 4, 5, 7, 7}},
    {-4, 27, {0, 4, 5, 5, 6, 7}},
    {4, 27, {0, 5, 5, 5, 6, 6}},
    {4, 27, {1, 1, 1, 6, 9, 9}},
    {-4, 81, {1, 1, 1, 7, 8, 9}},
    {8, 729, {1, 1, 1, 8, 8, 8}},
    {-4, 27, {1, 1, 2, 6, 8, 9}},
    {8, 81, {1, 1, 2, 7, 7, 9}},
    {-4, 243, {1, 1, 2, 7, 8, 8}},
    {-1, 27, {1, 1, 3, 3, 9, 9}},
    {2, 81, {1, 1, 3, 4, 8, 9}},
    {2, 81, {1, 1, 3, 5, 7, 9}},
    {-4, 243, {1, 1, 3, 5, 8, 8}},
    {1, 81, {1, 1, 4, 4, 7, 9}},
    {-2, 243, {1, 1, 4, 4, 8, 8}},
    {-4, 27, {1, 1, 4, 5, 6, 9}},
    {2, 81, {1, 1, 4, 5, 7, 8}},
    {8, 81, {1, 1, 5, 5, 6, 8}},
    {-1, 27, {1, 1, 5, 5, 7, 7}},
    {-4, 27, {1, 2, 2, 6, 7, 9}},
    {8, 81, {1, 2, 2, 6, 8, 8}},
    {-4, 243, {1, 2, 2, 7, 7, 8}},
    {2, 81, {1, 2, 3, 3, 8, 9}},
    {-10, 81, {1, 2, 3, 4, 7, 9}},
    {2, 81, {1, 2, 3, 4, 8, 8}},
    {2, 9, {1, 2, 3, 5, 6, 9}},
    {-2, 243, {1, 2, 3, 5, 7, 8}},
    {1, 9, {1, 2, 4, 4, 6, 9}},
    {-1, 243, {1, 2, 4, 4, 7, 8}},
    {-10, 81, {1, 2, 4, 5, 6, 8}},
    {2, 81, {1, 2, 4, 5, 7, 7}},
    {2, 81, {1, 2, 5, 5, 6, 7}},
    {2, 81, {1, 3, 3, 4, 5, 9}},
    {-4, 243, {1, 3, 3, 5, 5, 8}},
    {-1, 162, {1, 3, 4, 4, 4, 9}},
    {-1, 243, {1, 3, 4, 4, 5, 8}},
    {2, 81, {1, 3, 4, 5, 5, 7}},
    {-4, 81, {1, 3, 5, 5, 5, 6}},
    {1, 486, {1, 4, 4, 4, 4, 8}},
    {-1, 162, {1, 4, 4, 4, 5, 7}},
    {1, 81, {1, 4, 4, 5, 5, 6}},
    {4, 27, {2, 2, 2, 6, 6, 9}},
    {-4, 81, {2, 2, 2, 6, 7, 8}},
    {8, 729, {2, 2, 2, 7, 7, 7}},
    {8, 81, {2, 2, 3, 3, 7, 9}},
    {-1, 27, {2, 2, 3, 3, 8, 8}},
    {-4, 27, {2, 2, 3, 4, 6, 9}},
    {2, 81, {2, 2, 3, 4, 7, 8}},
    {2, 81, {2, 2, 3, 5, 6, 8}},
    {-4, 243, {2, 2, 3, 5, 7, 7}},
    {1, 81, {2, 2, 4, 4, 6, 8}},
    {-2, 243, {2, 2, 4, 4, 7, 7}},
    {2, 81, {2, 2, 4, 5, 6, 7}},
    {-1, 27, {2, 2, 5, 5, 6, 6}},
    {-4, 81, {2, 3, 3, 3, 5, 9}},
    {1, 81, {2, 3, 3, 4, 4, 9}},
    {2, 81, {2, 3, 3, 4, 5, 8}},
    {-4, 243, {2, 3, 3, 5, 5, 7}},
    {-1, 162, {2, 3, 4, 4, 4, 8}},
    {-1, 243, {2, 3, 4, 4, 5, 7}},
    {2, 81, {2, 3, 4, 5, 5, 6}},
    {1, 486, {2, 4, 4, 4, 4, 7}},
    {-1, 162, {2, 4, 4, 4, 5, 6}},
    {8, 729, {3, 3, 3, 5, 5, 5}},
    {-2, 243, {3, 3, 4, 4, 5, 5}},
    {1, 486, {3, 4, 4, 4, 4, 5}},
    {-1, 5832, {4, 4, 4, 4, 4, 4}},
};


}  // namespace milrec::detail
