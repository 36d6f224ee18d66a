#include "efluct/words.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <cctype>

namespace efluct {

Word::Word(TypeWord t, ColorWord c) : types(std::move(t)), colors(std::move(c)) {
    if (types.size() != colors.size()) throw InputError("type word and color word differ in length");
}

Word::Word(TypeWord t, int color) : types(std::move(t)), colors(types.size(), color) {}

bool Word::single_color() const {
    return std::adjacent_find(colors.begin(), colors.end(), std::not_equal_to<>()) == colors.end();
}

Word pure_word(int length, int color) { return Word(TypeWord(static_cast<std::size_t>(length), Letter::One), color); }

Word adjoint_word(int length, int color) {
    return Word(TypeWord(static_cast<std::size_t>(length), Letter::Star), color);
}

Word alternating_word(int pairs, int color) {
    TypeWord t;
    for (int k = 0; k < pairs; ++k) {
        t.push_back(Letter::One);
        t.push_back(Letter::Star);
    }
    return Word(std::move(t), color);
}

TypeWord transpose(const TypeWord& t) {
    TypeWord out(t.rbegin(), t.rend());
    for (auto& l : out) l = l == Letter::One ? Letter::Star : Letter::One;
    return out;
}

Word transpose(const Word& w) {
    return Word(transpose(w.types), ColorWord(w.colors.rbegin(), w.colors.rend()));
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.types.insert(out.types.end(), b.types.begin(), b.types.end());
    out.colors.insert(out.colors.end(), b.colors.begin(), b.colors.end());
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            continue;
        }
        Letter letter;
        if (ch == 'x' || ch == 'X') {
            letter = Letter::One;
        } else if (ch == 's' || ch == 'S') {
            letter = Letter::Star;
        } else {
            throw InputError("word parse error: unexpected '" + std::string(1, ch) + "' at position " +
                             std::to_string(i));
        }
        ++i;
        int color = kDefaultColor;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            color = 0;
            const auto start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                color = color * 10 + (text[i] - '0');
                if (i - start > 6) throw InputError("word parse error: color id too long at position " +
                                                    std::to_string(start));
                ++i;
            }
        }
        w.types.push_back(letter);
        w.colors.push_back(color);
    }
    return w;
}

std::string format_word(const Word& w) {
    const bool show_colors =
        std::any_of(w.colors.begin(), w.colors.end(), [](int c) { return c != kDefaultColor; });
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0 && show_colors) out += ' ';
        out += w.types[k] == Letter::One ? 'x' : 's';
        if (show_colors) out += std::to_string(w.colors[k]);
    }
    return out;
}

} // namespace efluct
