#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcslab {

using Symbol = std::uint8_t;

/// Largest alphabet the display symbol table can render.
inline constexpr unsigned kMaxAlphabet = 64;

/// Display character for a symbol index: 0-9, a-z, A-Z, '+', '/'.
char symbol_char(Symbol s);

/// Inverse of symbol_char; nullopt for characters outside the table.
std::optional<Symbol> char_symbol(char c);

/// A string over the alphabet {0, ..., q-1}, stored as small integers.
class Sequence {
 public:
  explicit Sequence(unsigned alphabet_size = 2);
  Sequence(std::vector<Symbol> symbols, unsigned alphabet_size);

  /// Parses display characters; throws InvalidInput on characters outside
  /// the first `alphabet_size` entries of the symbol table.
  static Sequence from_string(std::string_view text, unsigned alphabet_size);

  std::string to_string() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return q_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  void push_back(Symbol s);
  void reserve(std::size_t n) { symbols_.reserve(n); }

  Sequence reversed() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned q_;
};

/// Throws InvalidInput unless every sequence has the same alphabet size.
void require_same_alphabet(std::span<const Sequence> seqs);

}  // namespace lcslab
