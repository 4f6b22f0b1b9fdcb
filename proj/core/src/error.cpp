#include "fov/error.hpp"

namespace fov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "ORDER_CAP_EXCEEDED";
    case ErrorCode::InvalidPermutation: return "INVALID_PERMUTATION";
    case ErrorCode::NotASubgroup: return "NOT_A_SUBGROUP";
    case ErrorCode::NonCoprimeModuli: return "NON_COPRIME_MODULI";
    case ErrorCode::ModulusMismatch: return "MODULUS_MISMATCH";
    case ErrorCode::NonCoprime: return "NON_COPRIME";
    case ErrorCode::EigenspaceSplitFailure: return "EIGENSPACE_SPLIT_FAILURE";
    case ErrorCode::LiftOutOfRange: return "LIFT_OUT_OF_RANGE";
    case ErrorCode::RowMatchFailure: return "ROW_MATCH_FAILURE";
    case ErrorCode::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
    case ErrorCode::UnknownSuite: return "UNKNOWN_SUITE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::HashMismatch: return "HASH_MISMATCH";
  }
  return "UNKNOWN";
}

}  // namespace fov
