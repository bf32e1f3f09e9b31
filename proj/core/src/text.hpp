#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "squareprod/error.hpp"

namespace squareprod::detail {

// Yields non-blank, non-comment lines and remembers their 1-based number.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next()
    {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos || line[first] == '#')
                continue;
            return line;
        }
        return std::nullopt;
    }

    int line_number() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

class Tokenizer {
public:
    Tokenizer(std::string_view line, int line_number) : line_(line), line_number_(line_number) {}

    int column() { skip_space(); return static_cast<int>(pos_) + 1; }

    bool at_end() { skip_space(); return pos_ >= line_.size(); }

    bool peek_word(std::string_view word)
    {
        skip_space();
        return line_.substr(pos_, word.size()) == word
            && (pos_ + word.size() == line_.size() || std::isspace(static_cast<unsigned char>(line_[pos_ + word.size()])));
    }

    void expect_word(std::string_view word)
    {
        if (!peek_word(word))
            fail("expected '" + std::string(word) + "'");
        pos_ += word.size();
    }

    void expect_char(char c)
    {
        skip_space();
        if (pos_ >= line_.size() || line_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    VertexId integer(std::string_view what)
    {
        skip_space();
        VertexId value = 0;
        auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
        if (ec != std::errc() || ptr == line_.data() + pos_)
            fail("expected " + std::string(what));
        if (value < 0)
            fail(std::string(what) + " must be non-negative");
        pos_ = static_cast<std::size_t>(ptr - line_.data());
        return value;
    }

    void expect_end()
    {
        if (!at_end())
            fail("unexpected trailing text");
    }

    [[noreturn]] void fail(const std::string& message)
    {
        throw ParseError(message, line_number_, static_cast<int>(pos_) + 1);
    }

private:
    void skip_space()
    {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t'))
            ++pos_;
    }

    std::string_view line_;
    int line_number_;
    std::size_t pos_ = 0;
};

}  // namespace squareprod::detail
