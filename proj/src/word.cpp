#include "spectra/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string_view>

namespace spectra {

void validate_digits(const Word& w) {
    for (int d : w.digits)
        if (d < 1) throw std::invalid_argument("word digit must be >= 1");
}

Word canonicalize(const Word& w) {
    validate_digits(w);
    Word r = w;
    if (!r.digits.empty() && r.digits.back() == 1) {
        r.digits.pop_back();
        if (r.digits.empty()) {
            r.head = r.head.value_or(0) + 1;
        } else {
            r.digits.back() += 1;
        }
    }
    return r;
}

bool is_canonical(const Word& w) {
    return w.digits.empty() || w.digits.back() >= 2;
}

Word reversed(const Word& w) {
    if (w.head) throw std::invalid_argument("reversed: word must be headless");
    Word r = w;
    std::reverse(r.digits.begin(), r.digits.end());
    return r;
}

Word concat(const Word& a, const Word& b) {
    if (b.head) throw std::invalid_argument("concat: second word must be headless");
    Word r = a;
    r.digits.insert(r.digits.end(), b.digits.begin(), b.digits.end());
    return r;
}

namespace {

long parse_long(std::string_view s) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("malformed integer in word: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::vector<int> parse_digit_list(std::string_view s) {
    std::vector<int> digits;
    if (s.empty()) return digits;
    for (auto piece : split(s, ',')) {
        if (piece.empty()) throw std::invalid_argument("empty digit in word");
        long v = parse_long(piece);
        if (v < 1) throw std::invalid_argument("word digit must be >= 1");
        digits.push_back(static_cast<int>(v));
    }
    return digits;
}

}  // namespace

Word parse_word(const std::string& s) {
    Word w;
    std::string_view rest(s);
    if (size_t semi = rest.find(';'); semi != std::string_view::npos) {
        w.head = parse_long(rest.substr(0, semi));
        rest = rest.substr(semi + 1);
    }
    w.digits = parse_digit_list(rest);
    if (w.empty()) throw std::invalid_argument("empty word");
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.head) out += std::to_string(*w.head) + ";";
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.digits[i]);
    }
    return out;
}

CFExpansion parse_cf(const std::string& s) {
    size_t open = s.find('(');
    if (open == std::string::npos) return {parse_word(s), Word{}};
    size_t close = s.find(')', open);
    if (close == std::string::npos || close != s.size() - 1)
        throw std::invalid_argument("malformed periodic block in '" + s + "'");
    CFExpansion e;
    e.period.digits = parse_digit_list(std::string_view(s).substr(open + 1, close - open - 1));
    if (e.period.digits.empty()) throw std::invalid_argument("empty periodic block");
    std::string head = s.substr(0, open);
    while (!head.empty() && (head.back() == ',' || std::isspace(static_cast<unsigned char>(head.back()))))
        head.pop_back();
    if (!head.empty()) {
        e.pre = parse_word(head);
    }
    return e;
}

std::string format_cf(const CFExpansion& e) {
    std::string out = e.pre.empty() ? std::string() : format_word(e.pre);
    if (!e.period.digits.empty()) {
        if (!e.pre.digits.empty()) out += ",";
        out += "(" + format_word(e.period) + ")";
    }
    return out;
}

std::vector<Word> parse_word_list(const std::string& s) {
    std::vector<Word> words;
    for (auto piece : split(std::string_view(s), ',')) {
        if (piece.empty()) throw std::invalid_argument("empty word in word list");
        Word w;
        if (piece.find('.') != std::string_view::npos) {
            for (auto digit : split(piece, '.')) {
                long v = parse_long(digit);
                if (v < 1) throw std::invalid_argument("word digit must be >= 1");
                w.digits.push_back(static_cast<int>(v));
            }
        } else {
            for (char c : piece) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                    throw std::invalid_argument("bad digit '" + std::string(1, c) + "' in word list");
                w.digits.push_back(c - '0');
            }
        }
        words.push_back(std::move(w));
    }
    return words;
}

std::string format_word_compact(const Word& w) {
    bool small = true;
    for (int d : w.digits) small = small && d <= 9;
    std::string out;
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (i && !small) out += ".";
        out += std::to_string(w.digits[i]);
    }
    return out;
}

}  // namespace spectra
