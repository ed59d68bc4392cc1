#pragma once

#include "stc/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stc {

/// Tableau alphabet for the rank-2 symplectic crystal, ordered 1 < 2 < 2b < 1b.
enum class Letter : uint8_t { One = 0, Two = 1, TwoBar = 2, OneBar = 3 };

std::string letter_str(Letter l);

/// Two-row semistandard tableau in the alphabet above. Admissible tableaux exclude
/// the column (1,1b) and the two adjacent-column patterns
///   [2 2 / . 2b]   and   [2 . / 2b 2b].
struct KNTableau {
    int a = 0, b = 0;  // shape (a, b), a >= b >= 0
    std::vector<Letter> row1, row2;

    bool admissible() const;
    /// (#1 - #1b, #2 - #2b).
    std::pair<int, int> weight() const;
    std::string str() const;

    friend bool operator==(const KNTableau& x, const KNTableau& y) {
        return x.a == y.a && x.b == y.b && x.row1 == y.row1 && x.row2 == y.row2;
    }
    friend bool operator<(const KNTableau& x, const KNTableau& y) {
        return std::tie(x.a, x.b, x.row1, x.row2) < std::tie(y.a, y.b, y.row1, y.row2);
    }
};

/// All admissible tableaux of shape (a, b), deterministic order.
std::vector<KNTableau> kn_enumerate(int a, int b);

/// Character sum over kn_enumerate: sum of t1^(#1-#1b) t2^(#2-#2b) as a 2-variable
/// Laurent polynomial.
LaurentPoly kn_character(int a, int b);

/// Kashiwara operators via the far-eastern reading (rightmost column first, top to
/// bottom) and the +/- bracketing rule. Returns nullopt when the operator vanishes.
std::optional<KNTableau> crystal_lower(int i, const KNTableau& t);  // f~_i
std::optional<KNTableau> crystal_raise(int i, const KNTableau& t);  // e~_i

/// The distinguished tableau with first row (1^k, 2^z, 2b^y) and second row
/// (2^k, 1b^(b-k)), defined for a-b even, z = (a-b)/2, y = (a+b)/2 - k, 0 <= k <= b.
KNTableau highest_a1_tableau(int a, int b, int k);

}  // namespace stc
