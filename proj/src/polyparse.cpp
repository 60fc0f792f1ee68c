#include "bh/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bh/error.hpp"

namespace bh {

ExponentMatrix::ExponentMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size())
      fail(ErrorCode::DimensionMismatch, "exponent matrix must be square");
    for (int e : r)
      if (e < 0)
        fail(ErrorCode::InvalidArgument, "negative exponent");
  }
}

ExponentMatrix ExponentMatrix::transposed() const {
  std::vector<std::vector<int>> t(n(), std::vector<int>(n()));
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      t[j][i] = rows_[i][j];
  return ExponentMatrix(std::move(t));
}

ExponentMatrix ExponentMatrix::row_sorted() const {
  auto r = rows_;
  std::sort(r.begin(), r.end());
  return ExponentMatrix(std::move(r));
}

IntMatrix ExponentMatrix::to_int_matrix() const {
  IntMatrix m(n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      m(i, j) = rows_[i][j];
  return m;
}

Integer ExponentMatrix::determinant() const {
  return det_bareiss(to_int_matrix());
}

InvertiblePolynomial::InvertiblePolynomial(ExponentMatrix matrix, std::vector<std::string> variables)
  : matrix_(std::move(matrix)), vars_(std::move(variables)) {
  if (vars_.size() != matrix_.n())
    fail(ErrorCode::MonomialCountMismatch,
         std::to_string(matrix_.n()) + " monomials for " + std::to_string(vars_.size()) + " variables");
  std::set<std::vector<int>> seen(matrix_.rows().begin(), matrix_.rows().end());
  if (seen.size() != matrix_.n())
    fail(ErrorCode::DuplicateMonomial, "repeated monomial");
  if (matrix_.determinant() == 0)
    fail(ErrorCode::ZeroDeterminant, "exponent matrix is singular");
}

bool InvertiblePolynomial::equivalent(const InvertiblePolynomial& other) const {
  return vars_ == other.vars_ && matrix_.row_sorted() == other.matrix_.row_sorted();
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      by_length_.push_back(i);
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [&](std::size_t a, std::size_t b) { return vars_[a].size() > vars_[b].size(); });
  }

  std::vector<std::pair<std::vector<int>, std::size_t>> parse() {
    std::vector<std::pair<std::vector<int>, std::size_t>> monos;
    skip_ws();
    if (at_end())
      error("empty polynomial");
    while (true) {
      std::size_t start = pos_;
      monos.emplace_back(monomial(), start);
      skip_ws();
      if (at_end())
        break;
      if (s_[pos_] != '+')
        error(std::string("unexpected '") + s_[pos_] + "'");
      ++pos_;
      skip_ws();
    }
    return monos;
  }

private:
  std::vector<int> monomial() {
    std::vector<int> row(vars_.size(), 0);
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      if (uint_() != 1)
        error_at("numeric coefficients other than 1 are not supported", start);
      skip_ws();
      if (!at_end() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
    }
    factor(row);
    while (true) {
      skip_ws();
      if (at_end() || s_[pos_] == '+')
        break;
      if (s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
      factor(row);
    }
    return row;
  }

  void factor(std::vector<int>& row) {
    if (at_end())
      error("expected a variable");
    for (std::size_t v : by_length_) {
      const std::string& name = vars_[v];
      if (s_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        int e = 1;
        skip_ws();
        if (!at_end() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          bool braced = !at_end() && s_[pos_] == '{';
          if (braced)
            ++pos_;
          skip_ws();
          e = uint_();
          skip_ws();
          if (braced) {
            if (at_end() || s_[pos_] != '}')
              error("expected '}'");
            ++pos_;
          }
        }
        row[v] += e;
        return;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
        ++end;
      throw ParseError(ErrorCode::UnknownVariable,
                       "unknown variable '" + std::string(s_.substr(pos_, end - pos_)) + "'", pos_);
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
      error("numeric coefficients are not supported");
    error(std::string("unexpected '") + s_[pos_] + "'");
  }

  int uint_() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      error("expected an exponent");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000)
        error("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  [[noreturn]] void error(const std::string& what) { error_at(what, pos_); }
  [[noreturn]] void error_at(const std::string& what, std::size_t at) {
    throw ParseError(ErrorCode::Parse, what, at);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::vector<std::size_t> by_length_;
  std::size_t pos_ = 0;
};

}  // namespace

InvertiblePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  auto monos = Parser(text, variables).parse();
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (monos[i].first == monos[j].first)
        throw ParseError(ErrorCode::DuplicateMonomial, "repeated monomial", monos[i].second);
  if (monos.size() != variables.size())
    throw ParseError(ErrorCode::MonomialCountMismatch,
                     std::to_string(monos.size()) + " monomials for " + std::to_string(variables.size()) +
                       " variables",
                     0);
  std::vector<std::vector<int>> rows;
  for (auto& [row, at] : monos)
    rows.push_back(std::move(row));
  ExponentMatrix m(std::move(rows));
  if (m.determinant() == 0)
    throw ParseError(ErrorCode::ZeroDeterminant, "exponent matrix is singular", 0);
  return InvertiblePolynomial(std::move(m), variables);
}

std::vector<std::string> infer_variables(std::string_view text) {
  static constexpr std::string_view preferred = "xyzw";
  std::set<char> letters;
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c)))
      letters.insert(c);
  std::vector<std::string> out;
  for (char c : preferred)
    if (letters.erase(c))
      out.emplace_back(1, c);
  for (char c : letters)
    out.emplace_back(1, c);
  return out;
}

InvertiblePolynomial parse_polynomial(std::string_view text) {
  return parse_polynomial(text, infer_variables(text));
}

InvertiblePolynomial transpose(const InvertiblePolynomial& f) {
  return InvertiblePolynomial(f.matrix().transposed(), f.variables());
}

InvertiblePolynomial rename_variables(const InvertiblePolynomial& f, const std::vector<std::string>& images) {
  const auto& vars = f.variables();
  if (images.size() != vars.size())
    fail(ErrorCode::DimensionMismatch, "renaming needs one image per variable");
  std::vector<std::size_t> target(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) {
    auto it = std::find(vars.begin(), vars.end(), images[j]);
    if (it == vars.end())
      fail(ErrorCode::UnknownVariable, "renaming image '" + images[j] + "' is not a variable");
    target[j] = static_cast<std::size_t>(it - vars.begin());
  }
  std::vector<std::size_t> sorted = target;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "renaming is not a permutation");
  std::vector<std::vector<int>> rows(f.n(), std::vector<int>(f.n(), 0));
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j)
      rows[i][target[j]] = f.matrix()(i, j);
  return InvertiblePolynomial(ExponentMatrix(std::move(rows)), vars);
}

bool equivalent_up_to_renaming(const InvertiblePolynomial& f, const InvertiblePolynomial& g) {
  if (f.variables() != g.variables())
    return false;
  std::vector<std::string> images = f.variables();
  std::sort(images.begin(), images.end());
  do {
    if (rename_variables(f, images).equivalent(g))
      return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

std::string render(const InvertiblePolynomial& f) {
  std::string out;
  const auto& m = f.matrix();
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (i)
      out += " + ";
    bool first = true;
    for (std::size_t j = 0; j < m.n(); ++j) {
      int e = m(i, j);
      if (e == 0)
        continue;
      if (!first)
        out += '*';
      first = false;
      out += f.variables()[j];
      if (e != 1)
        out += '^' + std::to_string(e);
    }
    if (first)
      out += '1';
  }
  return out;
}

}  // namespace bh
