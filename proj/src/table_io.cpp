#include "qloop/errors.hpp"
#include "qloop/magma.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

namespace qloop {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

Element to_label(const Token& tok) {
  Element v = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("non-numeric token '" + std::string(tok.text) + "'", tok.line, tok.column);
  return v;
}

/// Splits into lines of tokens, dropping blank and '#' comment lines.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos)
      stop = text.size();
    ++line_no;
    std::string_view line = text.substr(start, stop - start);

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i >= line.size())
        break;
      if (tokens.empty() && line[i] == '#')
        break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.push_back(Token{line.substr(i, j - i), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty())
      lines.push_back(std::move(tokens));
    if (stop == text.size())
      break;
    start = stop + 1;
  }
  return lines;
}

Magma parse_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError("missing table order", 1, 1);

  const Token& order_tok = lines[0][0];
  const Element n = to_label(order_tok);
  if (n < 1)
    throw ParseError("table order must be positive", order_tok.line, order_tok.column);
  if (lines[0].size() != 1)
    throw ParseError("order line must hold a single integer", lines[0][1].line, lines[0][1].column);

  const auto un = static_cast<std::size_t>(n);
  if (lines.size() - 1 < un) {
    const Token& last = lines.back().back();
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1),
                     last.line, last.column + last.text.size());
  }
  if (lines.size() - 1 > un) {
    const Token& extra = lines[un + 1][0];
    throw ParseError("unexpected data after " + std::to_string(n) + " rows", extra.line, extra.column);
  }

  std::vector<Element> cells;
  cells.reserve(un * un);
  for (std::size_t r = 1; r <= un; ++r) {
    const auto& row = lines[r];
    if (row.size() != un) {
      const Token& at = row.size() > un ? row[un] : row.back();
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       at.line, at.column);
    }
    for (const Token& tok : row) {
      const Element v = to_label(tok);
      if (v < 1 || v > n)
        throw ParseError("label " + std::to_string(v) + " outside 1.." + std::to_string(n), tok.line, tok.column);
      cells.push_back(v);
    }
  }
  return Magma(n, std::move(cells));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Magma parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw ParseError("JSON table needs \"order\" and \"table\" fields", 1, 1);
  if (!doc["order"].is_number_integer())
    throw ParseError("\"order\" must be an integer", 1, 1);
  const auto n = doc["order"].get<long long>();
  if (n < 1)
    throw ParseError("table order must be positive", 1, 1);
  const auto& rows = doc["table"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n)
    throw ParseError("\"table\" must be an array of " + std::to_string(n) + " rows", 1, 1);

  std::vector<Element> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw ParseError("table row " + std::to_string(r + 1) + " must hold " + std::to_string(n) + " labels", r + 1, 1);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        throw ParseError("non-numeric entry in table row " + std::to_string(r + 1), r + 1, c + 1);
      const auto v = row[c].get<long long>();
      if (v < 1 || v > n)
        throw ParseError("label " + std::to_string(v) + " outside 1.." + std::to_string(n), r + 1, c + 1);
      cells.push_back(static_cast<Element>(v));
    }
  }
  return Magma(static_cast<int>(n), std::move(cells));
}

} // namespace

Magma parse_table(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c == '{')
      return parse_json(text);
    break;
  }
  return parse_text(text);
}

std::string format_table(const Magma& m) {
  std::ostringstream out;
  out << m.order() << '\n';
  for (Element x = 1; x <= m.order(); ++x) {
    for (Element y = 1; y <= m.order(); ++y) {
      if (y > 1)
        out << ' ';
      out << m(x, y);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_table(const Magma& m, std::string_view symbol) {
  const int n = m.order();
  const std::size_t width = std::max(std::to_string(n).size(), symbol.size());
  auto pad = [&](std::string s) {
    while (s.size() < width)
      s.insert(s.begin(), ' ');
    return s;
  };

  std::string rule = "+" + std::string(width + 2, '-') + "++";
  for (int y = 0; y < n; ++y)
    rule += std::string(width + 2, '-') + "+";
  std::string dbl = "+" + std::string(width + 2, '=') + "++";
  for (int y = 0; y < n; ++y)
    dbl += std::string(width + 2, '=') + "+";

  std::ostringstream out;
  out << rule << '\n' << "| " << pad(std::string(symbol)) << " ||";
  for (Element y = 1; y <= n; ++y)
    out << ' ' << pad(std::to_string(y)) << " |";
  out << '\n' << dbl << '\n';
  for (Element x = 1; x <= n; ++x) {
    out << "| " << pad(std::to_string(x)) << " ||";
    for (Element y = 1; y <= n; ++y)
      out << ' ' << pad(std::to_string(m(x, y))) << " |";
    out << '\n' << rule << '\n';
  }
  return out.str();
}

} // namespace qloop
