#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "tgrs/errors.hpp"

struct ErrCodeMatcher : Catch::Matchers::MatcherGenericBase {
    tgrs::Err code;
    explicit ErrCodeMatcher(tgrs::Err c) : code(c) {}
    bool match(const tgrs::Error& e) const { return e.code() == code; }
    std::string describe() const override {
        return std::string("has error code ") + tgrs::err_name(code);
    }
};

inline ErrCodeMatcher HasErr(tgrs::Err c) { return ErrCodeMatcher(c); }
