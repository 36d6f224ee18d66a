#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace efluct {

enum class Letter : unsigned char { One, Star };

using TypeWord = std::vector<Letter>;
using ColorWord = std::vector<int>;

inline constexpr int kDefaultColor = 1;

/// A matrix monomial: letter types plus the ensemble (color) of each letter.
struct Word {
    TypeWord types;
    ColorWord colors;

    Word() = default;
    Word(TypeWord t, ColorWord c);
    // Single-color word.
    explicit Word(TypeWord t, int color = kDefaultColor);

    std::size_t size() const { return types.size(); }
    bool empty() const { return types.empty(); }
    bool single_color() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

// x^n, (x*)^n, (x x*)^n, single color.
Word pure_word(int length, int color = kDefaultColor);
Word adjoint_word(int length, int color = kDefaultColor);
Word alternating_word(int pairs, int color = kDefaultColor);

// Reverse the letter order and swap One <-> Star (the matrix transpose of the
// monomial in the real case, the conjugate-transpose in the complex case).
Word transpose(const Word& w);
TypeWord transpose(const TypeWord& t);

Word concat(const Word& a, const Word& b);

/// Parse the word grammar: letters 'x' (One) and 's' (Star), each optionally
/// followed by a decimal color id; whitespace and commas separate tokens and
/// are otherwise ignored. "xs", "x s", "x1 s1 x2 s2" are all valid.
/// Throws InputError naming the offending character and its position.
Word parse_word(std::string_view text);

// Inverse of parse_word; colors are written only when some color differs
// from the default.
std::string format_word(const Word& w);

} // namespace efluct
