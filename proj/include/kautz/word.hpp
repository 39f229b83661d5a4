#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kautz {

/// Alphabet element of Z_{d+1}, stored as the integer 0..d.
using Symbol = std::uint8_t;

/// Largest alphabet parameter representable by Symbol.
inline constexpr int kMaxAlphabetParameter = 254;

/// Immutable sequence of symbols. Validity against a family is a separate
/// predicate; a Word on its own only knows its symbols.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<int> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Drops the first symbol and appends `next`.
  Word shifted(Symbol next) const;
  /// Appends `next` without dropping anything.
  Word extended(Symbol next) const;
  /// Contiguous sub-word [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

enum class Family { K, sK, CK, MCK };

std::string_view to_string(Family family);
/// Accepts K, sK, CK, MCK (case-insensitive).
Family parse_family(std::string_view text);

struct FamilySpec {
  Family family = Family::K;
  int d = 2;
  int l = 2;

  /// Throws std::invalid_argument unless 2 <= d <= 254 and l >= 2.
  void validate() const;
  std::string name() const;  // e.g. "CK(3,4)"

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// CK(2,l) is disconnected for every l except 2 and 4.
bool known_disconnected(const FamilySpec& spec);

/// Vertex condition of the family. Throws std::invalid_argument on a length
/// mismatch or a symbol outside [0, d].
bool is_valid_vertex(const Word& w, const FamilySpec& spec);

/// All valid vertices in lexicographic order. This order defines vertex
/// indices of every built digraph.
std::vector<Word> enumerate_vertices(const FamilySpec& spec);

/// Smallest p >= 1 with w[i] == w[i+p] wherever both exist; w.size() when
/// the word has no shorter period.
int word_period(const Word& w);

Word reverse(const Word& w);

/// "0120" when d <= 9, "0,1,2,10" otherwise.
std::string format_word(const Word& w, int d);
/// Inverse of format_word. Commas are accepted for any d and mandatory for
/// d >= 10. Throws std::invalid_argument on malformed text or symbols > d.
Word parse_word(std::string_view text, int d);

}  // namespace kautz
