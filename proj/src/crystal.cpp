#include "stc/crystal.hpp"

#include <sstream>
#include <stdexcept>

namespace stc {

namespace {

constexpr int kNumLetters = 4;

// f~_i transitions along the crystal graph 1 -1-> 2 -2-> 2b -1-> 1b.
std::optional<Letter> lower_letter(int i, Letter l) {
    if (i == 1) {
        if (l == Letter::One) return Letter::Two;
        if (l == Letter::TwoBar) return Letter::OneBar;
    } else {
        if (l == Letter::Two) return Letter::TwoBar;
    }
    return std::nullopt;
}

std::optional<Letter> raise_letter(int i, Letter l) {
    if (i == 1) {
        if (l == Letter::Two) return Letter::One;
        if (l == Letter::OneBar) return Letter::TwoBar;
    } else {
        if (l == Letter::TwoBar) return Letter::Two;
    }
    return std::nullopt;
}

// 0 none, +1 if f~_i applies to the letter, -1 if e~_i applies.
int signature(int i, Letter l) {
    if (lower_letter(i, l)) return +1;
    if (raise_letter(i, l)) return -1;
    return 0;
}

// Far-eastern reading: positions as (row, col), rightmost column first,
// top to bottom inside a column.
std::vector<std::pair<int, int>> reading_positions(const KNTableau& t) {
    std::vector<std::pair<int, int>> pos;
    for (int col = t.a - 1; col >= 0; --col) {
        pos.push_back({0, col});
        if (col < t.b) pos.push_back({1, col});
    }
    return pos;
}

}  // namespace

std::string letter_str(Letter l) {
    switch (l) {
        case Letter::One: return "1";
        case Letter::Two: return "2";
        case Letter::TwoBar: return "2b";
        case Letter::OneBar: return "1b";
    }
    return "?";
}

bool KNTableau::admissible() const {
    if (a < b || b < 0) return false;
    if (static_cast<int>(row1.size()) != a || static_cast<int>(row2.size()) != b) return false;
    for (int j = 0; j + 1 < a; ++j)
        if (row1[j] > row1[j + 1]) return false;
    for (int j = 0; j + 1 < b; ++j)
        if (row2[j] > row2[j + 1]) return false;
    for (int j = 0; j < b; ++j)
        if (row2[j] <= row1[j]) return false;
    for (int j = 0; j < b; ++j)
        if (row1[j] == Letter::One && row2[j] == Letter::OneBar) return false;
    for (int j = 0; j + 1 < a; ++j) {
        // [2 2 / . 2b]: forbidden when column j+1 is (2, 2b).
        if (j + 1 < b && row1[j] == Letter::Two && row1[j + 1] == Letter::Two &&
            row2[j + 1] == Letter::TwoBar)
            return false;
        // [2 . / 2b 2b]: forbidden when column j is (2, 2b).
        if (j + 1 < b && row1[j] == Letter::Two && row2[j] == Letter::TwoBar &&
            row2[j + 1] == Letter::TwoBar)
            return false;
    }
    return true;
}

std::pair<int, int> KNTableau::weight() const {
    int n1 = 0, n1b = 0, n2 = 0, n2b = 0;
    auto count = [&](const std::vector<Letter>& row) {
        for (Letter l : row) {
            switch (l) {
                case Letter::One: ++n1; break;
                case Letter::Two: ++n2; break;
                case Letter::TwoBar: ++n2b; break;
                case Letter::OneBar: ++n1b; break;
            }
        }
    };
    count(row1);
    count(row2);
    return {n1 - n1b, n2 - n2b};
}

std::string KNTableau::str() const {
    std::ostringstream os;
    for (int j = 0; j < a; ++j) os << letter_str(row1[j]) << " ";
    if (b > 0) {
        os << "/ ";
        for (int j = 0; j < b; ++j) os << letter_str(row2[j]) << " ";
    }
    return os.str();
}

std::vector<KNTableau> kn_enumerate(int a, int b) {
    if (a < b || b < 0) throw std::invalid_argument("kn_enumerate: need a >= b >= 0");
    std::vector<std::vector<Letter>> rows1, rows2;
    auto gen_rows = [](int len, std::vector<std::vector<Letter>>& out) {
        std::vector<Letter> cur(len, Letter::One);
        auto rec = [&](auto&& self, int idx, Letter lo) -> void {
            if (idx == len) {
                out.push_back(cur);
                return;
            }
            for (int l = static_cast<int>(lo); l < kNumLetters; ++l) {
                cur[idx] = static_cast<Letter>(l);
                self(self, idx + 1, static_cast<Letter>(l));
            }
        };
        rec(rec, 0, Letter::One);
    };
    gen_rows(a, rows1);
    gen_rows(b, rows2);
    std::vector<KNTableau> out;
    for (const auto& r1 : rows1)
        for (const auto& r2 : rows2) {
            KNTableau t{a, b, r1, r2};
            if (t.admissible()) out.push_back(std::move(t));
        }
    return out;
}

LaurentPoly kn_character(int a, int b) {
    LaurentPoly out(2);
    for (const auto& t : kn_enumerate(a, b)) {
        auto [m1, m2] = t.weight();
        out.add_term({m1, m2}, CycloNum(1));
    }
    return out;
}

namespace {

std::optional<KNTableau> apply_op(int i, const KNTableau& t, bool lower) {
    if (i != 1 && i != 2) throw std::invalid_argument("crystal operator index must be 1 or 2");
    auto pos = reading_positions(t);
    // Bracketing: '+' where f~_i applies, '-' where e~_i applies; cancel "+-" pairs.
    std::vector<int> plus_stack;     // surviving '+' positions (word indices)
    std::vector<int> minus_kept;     // surviving '-' positions, left to right
    for (std::size_t w = 0; w < pos.size(); ++w) {
        Letter l = (pos[w].first == 0) ? t.row1[pos[w].second] : t.row2[pos[w].second];
        int s = signature(i, l);
        if (s > 0) {
            plus_stack.push_back(static_cast<int>(w));
        } else if (s < 0) {
            if (!plus_stack.empty())
                plus_stack.pop_back();
            else
                minus_kept.push_back(static_cast<int>(w));
        }
    }
    int target;
    if (lower) {
        if (plus_stack.empty()) return std::nullopt;
        target = plus_stack.front();  // leftmost surviving '+'
    } else {
        if (minus_kept.empty()) return std::nullopt;
        target = minus_kept.back();  // rightmost surviving '-'
    }
    auto [row, col] = pos[target];
    Letter cur = (row == 0) ? t.row1[col] : t.row2[col];
    auto next = lower ? lower_letter(i, cur) : raise_letter(i, cur);
    KNTableau out = t;
    if (row == 0)
        out.row1[col] = *next;
    else
        out.row2[col] = *next;
    return out;
}

}  // namespace

std::optional<KNTableau> crystal_lower(int i, const KNTableau& t) { return apply_op(i, t, true); }
std::optional<KNTableau> crystal_raise(int i, const KNTableau& t) { return apply_op(i, t, false); }

KNTableau highest_a1_tableau(int a, int b, int k) {
    if ((a - b) % 2 != 0) throw std::invalid_argument("highest_a1_tableau: a-b must be even");
    if (k < 0 || k > b) throw std::invalid_argument("highest_a1_tableau: need 0 <= k <= b");
    int z = (a - b) / 2;
    int y = (a + b) / 2 - k;
    KNTableau t;
    t.a = a;
    t.b = b;
    for (int j = 0; j < k; ++j) t.row1.push_back(Letter::One);
    for (int j = 0; j < z; ++j) t.row1.push_back(Letter::Two);
    for (int j = 0; j < y; ++j) t.row1.push_back(Letter::TwoBar);
    for (int j = 0; j < k; ++j) t.row2.push_back(Letter::Two);
    for (int j = 0; j < b - k; ++j) t.row2.push_back(Letter::OneBar);
    return t;
}

}  // namespace stc
