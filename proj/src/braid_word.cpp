#include "braidforge/braid_word.hpp"

#include <charconv>

namespace braidforge {

BraidWord::BraidWord(int strands, Letters letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1 || strands > kMaxStrands) {
    throw std::invalid_argument("strand count must be in 1.." +
                                std::to_string(kMaxStrands) + ", got " +
                                std::to_string(strands));
  }
  for (Generator g : letters_) {
    if (g < 1 || g > strands - 1) {
      throw std::invalid_argument("generator x" + std::to_string(g) +
                                  " is not defined on " +
                                  std::to_string(strands) + " strands");
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) {
    throw std::invalid_argument("cannot multiply braids on " +
                                std::to_string(strands_) + " and " +
                                std::to_string(rhs.strands_) + " strands");
  }
  Letters out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

bool operator<(const BraidWord& a, const BraidWord& b) {
  return length_lex_less(a.letters(), b.letters());
}

std::string to_string(std::span<const Generator> letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BraidWord parse_word(int strands, std::string_view text) {
  text = trim(text);
  if (text == "e" || text.empty()) return BraidWord(strands);
  Letters letters;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1 ||
        value > kMaxStrands) {
      throw std::invalid_argument("malformed braid word '" + std::string(text) + "'");
    }
    letters.push_back(static_cast<Generator>(value));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace braidforge
