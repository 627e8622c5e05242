#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grhcheck/characters.hpp"
#include "grhcheck/special.hpp"

namespace grhcheck {

enum class LMethod { HurwitzEulerMaclaurin, FiniteGauss, DirichletSeries };

std::string_view to_string(LMethod m) noexcept;
LMethod parse_lmethod(std::string_view name);

struct LValueResult {
  std::string character_id;
  cplx value;
  LMethod method;
  double error_estimate;
};

/// L(1), L'(1) and L'/L(1) from the Hurwitz expansion.
struct LSeriesAtOne {
  cplx value;
  cplx derivative;
  cplx log_derivative;
  double error_estimate;
};

/// chi(0), ..., chi(q-1) split into real and imaginary parts.
struct CharacterTable {
  u64 modulus = 0;
  int parity = 0;
  std::vector<double> re, im;

  static CharacterTable from(const DirichletCharacter& chi);
  /// kronecker(d, .) as a character mod |d|.
  static CharacterTable kronecker_symbol(i64 d);
};

/// L(1, chi) for a non-principal character. FiniteGauss needs chi real and primitive.
LValueResult L_at_1(const DirichletCharacter& chi, LMethod method = LMethod::HurwitzEulerMaclaurin);
LValueResult L_at_1(const CharacterTable& chi, LMethod method, std::string id = {});

LSeriesAtOne l_series_at_one(const DirichletCharacter& chi);
LSeriesAtOne l_series_at_one(const CharacterTable& chi);

/// |Re B(chi)| = log(q/pi)/2 + digamma((1 + a)/2)/2 + Re L'/L(1, chi), chi primitive non-principal.
double re_B(const DirichletCharacter& chi);

enum class ClassNumberMethod { BqfCount, ClassFormula };

struct ClassNumberResult {
  u64 q;
  long h;
  ClassNumberMethod method;
  double raw_value = 0.0;  // class formula only
  double distance = 0.0;   // |raw - h|
};

std::string_view to_string(ClassNumberMethod m) noexcept;

/// h(-q) by counting reduced forms of discriminant -q. Requires -q fundamental, q > 4.
ClassNumberResult class_number_bqf(u64 q);
/// h(-q) = sqrt(q)/pi L(1, kronecker(-q, .)), rounded. Throws RoundingAmbiguous when the
/// value is 0.25 or more away from an integer.
ClassNumberResult class_number_via_formula(u64 q);

}  // namespace grhcheck
