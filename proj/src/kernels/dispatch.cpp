#include "nlfg/kernels.hpp"

#include "nlfg/errors.hpp"

namespace nlfg::kern {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace

Kind detect() noexcept { return cpu_has_avx2() ? Kind::Avx2 : Kind::Packed; }

bool kind_available(Kind k) noexcept {
    switch (k) {
        case Kind::Avx2:
            return cpu_has_avx2();
        default:
            return true;
    }
}

const char* kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::Auto:
            return "auto";
        case Kind::Generic:
            return "generic";
        case Kind::Packed:
            return "packed";
        case Kind::Avx2:
            return "avx2";
    }
    return "?";
}

Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::Auto, Kind::Generic, Kind::Packed, Kind::Avx2})
        if (s == kind_name(k)) return k;
    throw SpecError("unknown kernel '" + s + "' (auto|generic|packed|avx2)");
}

}  // namespace nlfg::kern
