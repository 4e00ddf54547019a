// Copyright 2026 The ifkp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifkp/rational.h"

#include <cctype>
#include <limits>

#include "ifkp/error.h"

namespace ifkp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kNonPositiveResult: return "NonPositiveResult";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBudgetMismatch: return "BudgetMismatch";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotL1: return "NotL1";
    case ErrorCode::kNotLInf: return "NotLInf";
    case ErrorCode::kInfeasibleRepair: return "InfeasibleRepair";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kOracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool IsIntegerLiteral(std::string_view s) {
  size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(int64_t num, int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::kOutOfRange, "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsIntegerLiteral(text)) {
      throw Error(ErrorCode::kParseError,
                  "not a rational: '" + std::string(text) + "'");
    }
    return Rational(ParseInteger(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den)) {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(text) + "'");
  }
  const BigInt d = ParseInteger(den);
  if (d == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(ParseInteger(num), d);
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorCode::kOutOfRange, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

BigInt CeilRational(const Rational& q) {
  const BigInt den = q.den();
  BigInt shifted = q.num() + den - 1;
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
  return result;
}

BigInt FloorRational(const Rational& q) {
  const BigInt num = q.num();
  const BigInt den = q.den();
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return result;
}

int64_t ToInt64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::kOutOfRange,
                "integer does not fit in 64 bits: " + value.get_str());
  }
  return value.get_si();
}

}  // namespace ifkp
