#include "lcslab/sequence.hpp"

#include <algorithm>

#include "lcslab/error.hpp"

namespace lcslab {

namespace {

constexpr std::string_view kSymbolTable =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";
static_assert(kSymbolTable.size() == kMaxAlphabet);

void check_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet)
    throw InvalidInput("alphabet size must be in [2, 64], got " + std::to_string(q));
}

}  // namespace

char symbol_char(Symbol s) { return kSymbolTable[s]; }

std::optional<Symbol> char_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + c - 'a');
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(36 + c - 'A');
  if (c == '+') return Symbol{62};
  if (c == '/') return Symbol{63};
  return std::nullopt;
}

Sequence::Sequence(unsigned alphabet_size) : q_(alphabet_size) { check_alphabet(q_); }

Sequence::Sequence(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), q_(alphabet_size) {
  check_alphabet(q_);
  for (Symbol s : symbols_)
    if (s >= q_)
      throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                         std::to_string(q_));
}

Sequence Sequence::from_string(std::string_view text, unsigned alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = char_symbol(c);
    if (!s || *s >= alphabet_size)
      throw InvalidInput(std::string("character '") + c + "' outside alphabet of size " +
                         std::to_string(alphabet_size));
    out.push_back(*s);
  }
  return Sequence(std::move(out), alphabet_size);
}

std::string Sequence::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(symbol_char(s));
  return out;
}

void Sequence::push_back(Symbol s) {
  if (s >= q_) throw InvalidInput("symbol outside alphabet");
  symbols_.push_back(s);
}

Sequence Sequence::reversed() const {
  Sequence out(*this);
  std::reverse(out.symbols_.begin(), out.symbols_.end());
  return out;
}

void require_same_alphabet(std::span<const Sequence> seqs) {
  for (const auto& s : seqs)
    if (s.alphabet_size() != seqs.front().alphabet_size())
      throw InvalidInput("sequences use different alphabet sizes");
}

}  // namespace lcslab
