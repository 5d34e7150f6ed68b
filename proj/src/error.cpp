#include "toricreg/error.hpp"
#include "toricreg/limits.hpp"

#include <cstdlib>
#include <string>

namespace toricreg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::EdgeExists: return "EdgeExists";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::CeilingExceeded: return "CeilingExceeded";
        case ErrorKind::NotSameParityEar: return "NotSameParityEar";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidWitness: return "InvalidWitness";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

const Limits& default_limits() {
    static const Limits limits = [] {
        Limits l;
        if (const char* env = std::getenv("TORICREG_MAX_STATES")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) {
                l.max_states = v;
                l.max_matrix_entries = v;
            }
        }
        return l;
    }();
    return limits;
}

}  // namespace toricreg
