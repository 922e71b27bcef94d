#pragma once

#include <utility>

#include "doctest.h"
#include "picalc/error.hpp"

// True iff f() throws CalcError with exactly the given code.
template <class F>
bool throws_code(picalc::Errc code, F&& f) {
    try {
        std::forward<F>(f)();
        return false;
    } catch (const picalc::CalcError& e) {
        return e.code() == code;
    } catch (...) {
        return false;
    }
}

#define CHECK_THROWS_CODE(code, ...) CHECK(throws_code(code, [&] { (void)(__VA_ARGS__); }))
