#pragma once

/**
 * Family text format.
 *
 *   # comment lines start with '#'
 *   n=<n> q=<q>
 *   0110          (q = 2: one 0/1 string per line, coordinate 1 leftmost)
 *   3,0,4,1       (q > 2: comma-separated decimal symbols)
 *
 * Blank lines are ignored. Duplicate vectors are a parse error.
 */

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/errors.hpp"

namespace sunforge {

using AnyFamily = std::variant<Family, QFamily>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::size_t parse_unsigned(std::string_view s, std::size_t line, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

inline std::pair<std::size_t, unsigned> parse_header(std::string_view text, std::size_t line) {
  std::size_t n = 0;
  std::size_t q = 0;
  bool have_n = false;
  bool have_q = false;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view t = token;
    if (t.starts_with("n=")) {
      n = parse_unsigned(t.substr(2), line, "n");
      have_n = true;
    } else if (t.starts_with("q=")) {
      q = parse_unsigned(t.substr(2), line, "q");
      have_q = true;
    } else {
      throw ParseError(line, "unexpected header token '" + token + "'");
    }
  }
  if (!have_n || !have_q) throw ParseError(line, "header must be 'n=<n> q=<q>'");
  if (n == 0 || n > BitVector::kMaxLength) throw ParseError(line, "n must be in [1, 4096]");
  if (q < 2 || q > QVector::kMaxAlphabet) throw ParseError(line, "q must be in [2, 256]");
  return {n, static_cast<unsigned>(q)};
}

}  // namespace detail

inline AnyFamily read_family(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<AnyFamily> family;
  while (std::getline(in, raw)) {
    ++line;
    auto text = detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!family) {
      auto [n, q] = detail::parse_header(text, line);
      if (q == 2)
        family.emplace(Family(n));
      else
        family.emplace(QFamily(n, q));
      continue;
    }
    bool added = std::visit(
        [&](auto& f) -> bool {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Family>) {
            if (text.size() != f.n())
              throw ParseError(line, "expected " + std::to_string(f.n()) + " bits, got " + std::to_string(text.size()));
            try {
              return f.insert(BitVector::from_string(text));
            } catch (const std::invalid_argument& e) {
              throw ParseError(line, e.what());
            }
          } else {
            std::vector<std::uint8_t> symbols;
            std::size_t start = 0;
            while (start <= text.size()) {
              auto comma = text.find(',', start);
              auto piece = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
              auto value = detail::parse_unsigned(piece, line, "symbol");
              if (value >= f.q()) throw ParseError(line, "symbol " + std::to_string(value) + " >= q");
              symbols.push_back(static_cast<std::uint8_t>(value));
              if (comma == std::string_view::npos) break;
              start = comma + 1;
            }
            if (symbols.size() != f.n())
              throw ParseError(line, "expected " + std::to_string(f.n()) + " symbols, got " + std::to_string(symbols.size()));
            return f.insert(QVector(f.q(), std::move(symbols)));
          }
        },
        *family);
    if (!added) throw ParseError(line, "duplicate vector");
  }
  if (!family) throw ParseError(0, "missing 'n=<n> q=<q>' header");
  return std::move(*family);
}

inline AnyFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_family(in);
}

inline Family parse_binary_family(std::string_view text) {
  auto any = parse_family(text);
  if (auto* f = std::get_if<Family>(&any)) return std::move(*f);
  throw ParseError(0, "expected a binary family (q=2)");
}

template <class Vector>
void write_family(std::ostream& out, const BasicFamily<Vector>& family) {
  out << "n=" << family.n() << " q=" << family.q() << '\n';
  for (const auto& v : family) out << v.to_string() << '\n';
}

inline void write_family(std::ostream& out, const AnyFamily& family) {
  std::visit([&](const auto& f) { write_family(out, f); }, family);
}

template <class F>
std::string format_family(const F& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

}  // namespace sunforge
