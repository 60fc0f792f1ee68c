#pragma once

// Invertible polynomials as exponent matrices, with a small text grammar:
//   poly := mono ('+' mono)* ; mono := factor ('*'? factor)* ; factor := var ('^' uint)?
// All coefficients are 1.

#include <string>
#include <string_view>
#include <vector>

#include "bh/exactalg.hpp"

namespace bh {

class ExponentMatrix {
public:
  ExponentMatrix() = default;
  // Throws DimensionMismatch for ragged or non-square input, InvalidArgument
  // for negative entries. Nonsingularity is checked by the parser, not here.
  explicit ExponentMatrix(std::vector<std::vector<int>> rows);

  std::size_t n() const { return rows_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  ExponentMatrix transposed() const;
  ExponentMatrix row_sorted() const;
  IntMatrix to_int_matrix() const;
  Integer determinant() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
  std::vector<std::vector<int>> rows_;
};

class InvertiblePolynomial {
public:
  // Validates distinct rows and det != 0.
  InvertiblePolynomial(ExponentMatrix matrix, std::vector<std::string> variables);

  const ExponentMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t n() const { return matrix_.n(); }

  // Compares row-sorted matrices and variable lists.
  bool equivalent(const InvertiblePolynomial& other) const;
  friend bool operator==(const InvertiblePolynomial&, const InvertiblePolynomial&) = default;

private:
  ExponentMatrix matrix_;
  std::vector<std::string> vars_;
};

InvertiblePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);
// Variable names appearing in the text (single letters), ordered x, y, z, w first.
std::vector<std::string> infer_variables(std::string_view text);
InvertiblePolynomial parse_polynomial(std::string_view text);

InvertiblePolynomial transpose(const InvertiblePolynomial& f);
// Substitutes variables()[j] -> images[j]; images must permute variables().
InvertiblePolynomial rename_variables(const InvertiblePolynomial& f, const std::vector<std::string>& images);
bool equivalent_up_to_renaming(const InvertiblePolynomial& f, const InvertiblePolynomial& g);
std::string render(const InvertiblePolynomial& f);

}  // namespace bh
