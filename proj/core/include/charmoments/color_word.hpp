#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "charmoments/errors.hpp"

namespace charmoments {

// A letter of a color word: either a plain copy of the fundamental object
// or its conjugate.
enum class Color : unsigned char { plain = 0, conj = 1 };

inline Color flip(Color c) { return c == Color::plain ? Color::conj : Color::plain; }

// A finite word over {plain, conj}.  Serialized as a string over the
// alphabet {'1', 'c'}, e.g. "1c1c"; the empty word is "".
class ColorWord {
public:
    ColorWord() = default;
    explicit ColorWord(std::vector<Color> letters) : letters_(std::move(letters)) {}

    // Parses "1c1c" style strings; throws InvalidInput on foreign characters.
    static ColorWord parse(const std::string& text);

    // All-plain or all-conj word of the given length.
    static ColorWord uniform(std::size_t length, Color c = Color::plain);

    std::string str() const;

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Color operator[](std::size_t i) const { return letters_[i]; }

    // True when the word has as many plain letters as conjugate ones.
    bool balanced() const;

    // Letters at positions [first, last), 0-based.
    ColorWord subword(std::size_t first, std::size_t last) const;

    ColorWord operator+(const ColorWord& rhs) const;

    auto operator<=>(const ColorWord&) const = default;

    const std::vector<Color>& letters() const { return letters_; }

private:
    std::vector<Color> letters_;
};

// (#plain) - (#conj); zero exactly for balanced words.
int word_sum(const ColorWord& w);

// Splitting of an even word around a distinguished outer pair: the inner
// part sits strictly between the pair, the outer part after it.
struct WordDecomposition {
    ColorWord inner;
    ColorWord outer;
};

// For a word eps of even length 2k+2 and r in [1, k+1]: inner is
// positions 2..2r-1, outer is positions 2r+1..2k+2 (1-based), i.e. the
// two pieces left after removing the pair {1, 2r}.
WordDecomposition decompose_at(const ColorWord& eps, int r);

// The positions r in [1, k+1] with eps(1) != eps(2r): exactly the outer
// pairs {1, 2r} that a color-alternating pairing may contain.
std::vector<int> admissible_positions(const ColorWord& eps);

} // namespace charmoments
