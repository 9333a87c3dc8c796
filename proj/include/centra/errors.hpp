#pragma once

#include <stdexcept>
#include <string>

namespace centra {

/// Error categories raised by group construction and the algebra layer.
enum class errc {
    not_latin_square,
    not_associative,
    no_identity,
    no_inverse,
    order_cap_exceeded,
    coset_cap_exceeded,
    order_mismatch,
    bad_parameter,
    bad_action,
    not_a_subgroup,
    not_normal,
    group_too_small,
    abelian_group,
    parse_error,
    unknown_theorem,
};

const char* errc_name(errc code);

class group_error : public std::runtime_error {
public:
    group_error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace centra
