#include "csp/error.hpp"

namespace csp {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::not_in_module: return "NotInModule";
        case errc::invalid_profile: return "InvalidProfile";
        case errc::order_not_dividing_n: return "OrderNotDividingN";
        case errc::invalid_universal_vector: return "InvalidUniversalVector";
        case errc::not_csp: return "NotCsp";
        case errc::negative_entry: return "NegativeEntry";
        case errc::mismatched_margins: return "MismatchedMargins";
        case errc::not_prime: return "NotPrime";
        case errc::gcd_mismatch: return "GcdMismatch";
        case errc::zero_matrix: return "ZeroMatrix";
        case errc::too_few_beads: return "TooFewBeads";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::d_not_dividing_m: return "DNotDividingM";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::parse_error: return "ParseError";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace csp
