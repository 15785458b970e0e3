#include "plr/io.hpp"

#include <sstream>

namespace plr {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  throw PlrError(ErrorKind::ParseError, "line " + std::to_string(line) + ", token " +
                                            std::to_string(col) + ": " + what);
}

}  // namespace

PartialLatinRectangle parse_plr_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  // header
  int r = 0, s = 0, n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream hdr(line);
    std::string magic;
    hdr >> magic >> r >> s >> n;
    if (magic != "PLR" || hdr.fail()) parse_fail(lineno, 1, "expected header 'PLR r s n'");
    break;
  }
  if (r < 1 || s < 1 || n < 1) parse_fail(lineno, 1, "bad dimensions in header");
  std::vector<std::vector<int>> grid;
  while (static_cast<int>(grid.size()) < r && std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::vector<int> cells;
    std::string tok;
    while (row >> tok) {
      if (tok == ".") {
        cells.push_back(0);
      } else {
        try {
          size_t used = 0;
          const int v = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          cells.push_back(v);
        } catch (const std::exception&) {
          parse_fail(lineno, static_cast<int>(cells.size()) + 1, "bad token '" + tok + "'");
        }
      }
    }
    if (static_cast<int>(cells.size()) != s)
      parse_fail(lineno, static_cast<int>(cells.size()) + 1, "expected " + std::to_string(s) + " tokens");
    grid.push_back(std::move(cells));
  }
  if (static_cast<int>(grid.size()) != r) parse_fail(lineno, 1, "missing grid rows");
  return PartialLatinRectangle::from_grid(r, s, n, grid);
}

std::string format_plr(const PartialLatinRectangle& L) {
  std::ostringstream out;
  out << "PLR " << L.rows() << ' ' << L.cols() << ' ' << L.symbols() << "\n";
  for (int i = 0; i < L.rows(); ++i) {
    for (int j = 0; j < L.cols(); ++j) {
      if (j) out << ' ';
      const int k = L.at(i, j);
      if (k == PartialLatinRectangle::kEmpty) out << '.';
      else out << (k + 1);
    }
    out << "\n";
  }
  return out.str();
}

std::string format_group(const AutotopismGroup& g) {
  std::ostringstream out;
  out << "order " << g.total_order << "\n";
  auto fact_of = [](const BigInt& f) {
    // factors are exact factorials; recover the argument for display
    BigInt acc = 1;
    int k = 0;
    while (acc < f) acc *= ++k;
    return k;
  };
  out << "factors " << fact_of(g.row_factor) << "! " << fact_of(g.col_factor) << "! "
      << fact_of(g.sym_factor) << "!\n";
  for (const Isotopism& t : g.reduced_autotopisms)
    out << t.rows.to_cycles() << " | " << t.cols.to_cycles() << " | " << t.syms.to_cycles()
        << "\n";
  return out.str();
}

}  // namespace plr
