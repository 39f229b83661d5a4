#include "kautz/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace kautz {

Word::Word(std::initializer_list<int> symbols) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s > 255) throw std::invalid_argument("symbol out of range");
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

Word Word::shifted(Symbol next) const {
  std::vector<Symbol> out(symbols_.begin() + 1, symbols_.end());
  out.push_back(next);
  return Word(std::move(out));
}

Word Word::extended(Symbol next) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(next);
  return Word(std::move(out));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::K: return "K";
    case Family::sK: return "sK";
    case Family::CK: return "CK";
    case Family::MCK: return "MCK";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "K") return Family::K;
  if (upper == "SK") return Family::sK;
  if (upper == "CK") return Family::CK;
  if (upper == "MCK") return Family::MCK;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected K, sK, CK or MCK)");
}

void FamilySpec::validate() const {
  if (d < 2 || d > kMaxAlphabetParameter)
    throw std::invalid_argument("d must lie in [2, 254], got " + std::to_string(d));
  if (l < 2) throw std::invalid_argument("l must be at least 2, got " + std::to_string(l));
}

std::string FamilySpec::name() const {
  return std::string(to_string(family)) + "(" + std::to_string(d) + "," + std::to_string(l) + ")";
}

bool known_disconnected(const FamilySpec& spec) {
  return spec.family == Family::CK && spec.d == 2 && spec.l != 2 && spec.l != 4;
}

bool is_valid_vertex(const Word& w, const FamilySpec& spec) {
  if (static_cast<int>(w.size()) != spec.l)
    throw std::invalid_argument("word length " + std::to_string(w.size()) + " does not match l=" +
                                std::to_string(spec.l));
  for (Symbol s : w.symbols())
    if (s > spec.d) throw std::invalid_argument("symbol exceeds d=" + std::to_string(spec.d));
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return false;
  if (spec.family == Family::CK || spec.family == Family::MCK) return w.front() != w.back();
  return true;
}

namespace {

void extend_vertices(const FamilySpec& spec, std::vector<Symbol>& prefix, std::vector<Word>& out) {
  const auto depth = static_cast<int>(prefix.size());
  if (depth == spec.l) {
    if ((spec.family == Family::CK || spec.family == Family::MCK) && prefix.front() == prefix.back()) return;
    out.emplace_back(prefix);
    return;
  }
  for (int s = 0; s <= spec.d; ++s) {
    if (depth > 0 && prefix.back() == s) continue;
    prefix.push_back(static_cast<Symbol>(s));
    extend_vertices(spec, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_vertices(const FamilySpec& spec) {
  spec.validate();
  std::vector<Word> out;
  std::vector<Symbol> prefix;
  prefix.reserve(spec.l);
  extend_vertices(spec, prefix, out);
  return out;
}

int word_period(const Word& w) {
  const auto n = static_cast<int>(w.size());
  for (int p = 1; p < n; ++p) {
    bool periodic = true;
    for (int i = 0; i + p < n && periodic; ++i) periodic = w[i] == w[i + p];
    if (periodic) return p;
  }
  return n;
}

Word reverse(const Word& w) {
  std::vector<Symbol> out(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(out));
}

std::string format_word(const Word& w, int d) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (d > 9 && i > 0) out.push_back(',');
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

Word parse_word(std::string_view text, int d) {
  std::vector<Symbol> symbols;
  auto push = [&](int value) {
    if (value < 0 || value > d)
      throw std::invalid_argument("symbol " + std::to_string(value) + " outside [0, " + std::to_string(d) + "]");
    symbols.push_back(static_cast<Symbol>(value));
  };
  if (text.empty()) throw std::invalid_argument("empty word");
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view token = text.substr(pos, comma - pos);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      push(value);
      pos = comma + 1;
    }
    return Word(std::move(symbols));
  }
  if (d > 9)
    throw std::invalid_argument("words over an alphabet with d >= 10 must be comma-separated");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    push(c - '0');
  }
  return Word(std::move(symbols));
}

}  // namespace kautz
