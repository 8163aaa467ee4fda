#pragma once

#include <string>
#include <string_view>

#include "tcm/errors.hpp"

namespace tcm {

// Finite word over {L, R}: a path in a planar binary tree.
class PathWord {
  public:
    PathWord() = default;
    explicit PathWord(std::string_view letters) : letters_(letters) {
        for (char c : letters_) {
            if (c != 'L' && c != 'R') throw ParseError("path word letters must be L or R");
        }
    }

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    PathWord prefix(std::size_t n) const { return PathWord(letters_.substr(0, n)); }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

  private:
    std::string letters_;
};

// Finite word over {s, r}: s the tropical Vieta involution, r the cyclic
// coordinate permutation.
class GeneratorWord {
  public:
    GeneratorWord() = default;
    explicit GeneratorWord(std::string_view letters) : letters_(letters) {
        for (char c : letters_) {
            if (c != 's' && c != 'r') throw ParseError("generator word letters must be s or r");
        }
    }

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

  private:
    std::string letters_;
};

} // namespace tcm
