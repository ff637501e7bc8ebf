/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 the tgrs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace tgrs {

enum class Err {
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    AmbientMismatch,
    LengthMismatch,
    DimensionMismatch,
    RepeatedAlpha,
    ZeroMultiplier,
    BothZero,
    ZeroPolynomial,
    InvalidParams,
    DecodeFailure,
    TrialBudgetExhausted,
    ReassemblyStalled,
    NotGrs,
    NoValidMultiplier,
    HookCountMismatch,
    DegenerateWord,
    TwistOutOfRange,
    Unsupported,
    TooLarge,
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrimeP: return "NonPrimeP";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::AmbientMismatch: return "AmbientMismatch";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::RepeatedAlpha: return "RepeatedAlpha";
        case Err::ZeroMultiplier: return "ZeroMultiplier";
        case Err::BothZero: return "BothZero";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::InvalidParams: return "InvalidParams";
        case Err::DecodeFailure: return "DecodeFailure";
        case Err::TrialBudgetExhausted: return "TrialBudgetExhausted";
        case Err::ReassemblyStalled: return "ReassemblyStalled";
        case Err::NotGrs: return "NotGrs";
        case Err::NoValidMultiplier: return "NoValidMultiplier";
        case Err::HookCountMismatch: return "HookCountMismatch";
        case Err::DegenerateWord: return "DegenerateWord";
        case Err::TwistOutOfRange: return "TwistOutOfRange";
        case Err::Unsupported: return "Unsupported";
        case Err::TooLarge: return "TooLarge";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Domain error carrying a machine-checkable code. CLI maps these to exit code 2.
class Error : public std::runtime_error {
   public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const noexcept { return code_; }

   private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace tgrs
