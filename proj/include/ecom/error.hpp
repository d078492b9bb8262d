#pragma once

#include <stdexcept>
#include <string>

namespace ecom {

// Error categories, grouped by how the CLI maps them to exit codes:
// input errors -> 2, resource limits -> 3, internal invariant failures -> 4.
enum class errc {
    not_a_group,
    unknown_name,
    syntax,
    unknown_generator,
    bad_input,
    order_limit,
    coset_limit,
    poset_size,
    complex_size,
    time_limit,
    height_too_large,
    disconnected,
    integer_overflow,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

    bool is_input_error() const {
        switch (code_) {
            case errc::not_a_group:
            case errc::unknown_name:
            case errc::syntax:
            case errc::unknown_generator:
            case errc::bad_input:
            case errc::height_too_large:
                return true;
            default:
                return false;
        }
    }

    bool is_resource_limit() const {
        switch (code_) {
            case errc::order_limit:
            case errc::coset_limit:
            case errc::poset_size:
            case errc::complex_size:
            case errc::time_limit:
                return true;
            default:
                return false;
        }
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ecom
