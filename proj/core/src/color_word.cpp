#include "charmoments/color_word.hpp"

namespace charmoments {

ColorWord ColorWord::parse(const std::string& text) {
    std::vector<Color> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '1': letters.push_back(Color::plain); break;
        case 'c': letters.push_back(Color::conj); break;
        default:
            throw InvalidInput("color word may contain only '1' and 'c', got '" +
                               std::string(1, ch) + "'");
        }
    }
    return ColorWord(std::move(letters));
}

ColorWord ColorWord::uniform(std::size_t length, Color c) {
    return ColorWord(std::vector<Color>(length, c));
}

std::string ColorWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Color c : letters_) out.push_back(c == Color::plain ? '1' : 'c');
    return out;
}

bool ColorWord::balanced() const { return word_sum(*this) == 0; }

ColorWord ColorWord::subword(std::size_t first, std::size_t last) const {
    if (first > last || last > letters_.size())
        throw InvalidInput("subword range out of bounds");
    return ColorWord(std::vector<Color>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

ColorWord ColorWord::operator+(const ColorWord& rhs) const {
    std::vector<Color> letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return ColorWord(std::move(letters));
}

int word_sum(const ColorWord& w) {
    int sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        sum += (w[i] == Color::plain) ? 1 : -1;
    return sum;
}

WordDecomposition decompose_at(const ColorWord& eps, int r) {
    if (eps.size() < 2 || eps.size() % 2 != 0)
        throw InvalidInput("decompose_at needs a word of even positive length");
    const int k = static_cast<int>(eps.size()) / 2 - 1;
    if (r < 1 || r > k + 1)
        throw InvalidInput("decompose_at position out of range");
    // 1-based positions {1, 2r} removed; inner = 2..2r-1, outer = 2r+1..2k+2.
    return WordDecomposition{
        eps.subword(1, static_cast<std::size_t>(2 * r - 1)),
        eps.subword(static_cast<std::size_t>(2 * r), eps.size()),
    };
}

std::vector<int> admissible_positions(const ColorWord& eps) {
    if (eps.size() < 2 || eps.size() % 2 != 0)
        throw InvalidInput("admissible_positions needs a word of even positive length");
    const int k = static_cast<int>(eps.size()) / 2 - 1;
    std::vector<int> out;
    for (int r = 1; r <= k + 1; ++r)
        if (eps[0] != eps[static_cast<std::size_t>(2 * r - 1)]) out.push_back(r);
    return out;
}

} // namespace charmoments
