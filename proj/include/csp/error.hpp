#ifndef CSP_ERROR_HPP
#define CSP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace csp {

enum class errc {
    invalid_argument,
    not_in_module,
    invalid_profile,
    order_not_dividing_n,
    invalid_universal_vector,
    not_csp,
    negative_entry,
    mismatched_margins,
    not_prime,
    gcd_mismatch,
    zero_matrix,
    too_few_beads,
    size_mismatch,
    d_not_dividing_m,
    hypothesis_violation,
    parse_error,
    internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace csp

#endif
