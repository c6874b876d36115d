#pragma once

#include <stdexcept>
#include <string>

namespace taufact {

enum class errc {
    zero_input,
    out_of_range,
    not_prime,
    bad_modulus,
    no_generator,
    unit_input,
    too_many_partitions,
    table_too_large,
    unsupported_modulus,
    prime_search_exhausted,
    unknown_check,
    bad_signature,
};

const char *errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string &what) {
    throw error(code, what);
}

} // namespace taufact
