#pragma once

#include <turan/error.hpp>

namespace test_util {

/// True iff f() raises a project Error of exactly the given kind.
template <typename F>
bool raises(F&& f, turan::ErrorKind kind) {
    try {
        f();
    } catch (const turan::Error& e) {
        return e.kind() == kind;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace test_util
