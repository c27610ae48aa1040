// Copyright 2026 The Authors.
//
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgd {

/// Error kinds raised by the engine. The CLI reports them by name.
enum class Errc {
  InvalidField,
  MixedFields,
  DivisionByZero,
  ZeroVector,
  AmbientMismatch,
  NotAHyperplane,
  NotInSubspace,
  WrongCount,
  TooFew,
  NotAnArc,
  NotASimplex,
  FieldTooSmall,
  PointOnHyperplane,
  DegenerateSection,
  InvalidConfiguration,
  BadSymbols,
  SharedPoint,
  SharedFace,
  EdgesDisjoint,
  NoCommonVertex,
  BadT,
  DegenerateLift,
  WInH,
  TooFewSymbols,
  BudgetExceeded,
  TheoremViolation,
  ParseError,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotAHyperplane: return "NotAHyperplane";
    case Errc::NotInSubspace: return "NotInSubspace";
    case Errc::WrongCount: return "WrongCount";
    case Errc::TooFew: return "TooFew";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::NotASimplex: return "NotASimplex";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::PointOnHyperplane: return "PointOnHyperplane";
    case Errc::DegenerateSection: return "DegenerateSection";
    case Errc::InvalidConfiguration: return "InvalidConfiguration";
    case Errc::BadSymbols: return "BadSymbols";
    case Errc::SharedPoint: return "SharedPoint";
    case Errc::SharedFace: return "SharedFace";
    case Errc::EdgesDisjoint: return "EdgesDisjoint";
    case Errc::NoCommonVertex: return "NoCommonVertex";
    case Errc::BadT: return "BadT";
    case Errc::DegenerateLift: return "DegenerateLift";
    case Errc::WInH: return "WInH";
    case Errc::TooFewSymbols: return "TooFewSymbols";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace pgd
