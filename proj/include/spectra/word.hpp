#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spectra {

// Finite continued-fraction word: optional integer head a0 plus partial
// quotients a1..an >= 1. Combinatorial words (cylinder labels, block sets)
// carry no head.
struct Word {
    std::optional<long> head;
    std::vector<int> digits;

    Word() = default;
    explicit Word(std::vector<int> d) : digits(std::move(d)) {}
    Word(long a0, std::vector<int> d) : head(a0), digits(std::move(d)) {}

    bool empty() const { return !head && digits.empty(); }
    size_t size() const { return digits.size(); }

    bool operator==(const Word&) const = default;
};

void validate_digits(const Word& w);  // every digit >= 1

// Canonical form: trailing digit >= 2, obtained by merging a trailing 1
// ([3;7,15,1] -> [3;7,16]); a bare [a0;1] becomes [a0+1].
Word canonicalize(const Word& w);

bool is_canonical(const Word& w);

Word reversed(const Word& w);               // digits only; head must be absent
Word concat(const Word& a, const Word& b);  // digit concatenation, head from a

// "3;7,16" / "0;2,2" / "1,2,3" (headless). Inverse of format_word.
Word parse_word(const std::string& s);
std::string format_word(const Word& w);

// Word with an eventually periodic tail: "0;2,1,(2,2,1,1)".
struct CFExpansion {
    Word pre;     // head + preperiodic digits
    Word period;  // empty = finite expansion
};
CFExpansion parse_cf(const std::string& s);
std::string format_cf(const CFExpansion& e);

// Compact digit syntax for word sets: words separated by commas, digits of a
// word either a plain string of digits <= 9 ("122") or '.'-separated ("1.12").
std::vector<Word> parse_word_list(const std::string& s);
std::string format_word_compact(const Word& w);

}  // namespace spectra
