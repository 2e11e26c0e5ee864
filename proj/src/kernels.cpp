#include "invforge/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invforge::kernels {

void evaluate_all_serial(const SparsePoly& f, const DlogTable& table, std::span<std::uint32_t> out) {
    const auto q = static_cast<std::int64_t>(out.size());
    for (std::int64_t x = 0; x < q; ++x) {
        out[x] = evaluate_raw(f, static_cast<std::uint32_t>(x), table);
    }
}

void evaluate_all_parallel(const SparsePoly& f, const DlogTable& table, std::span<std::uint32_t> out) {
    const auto q = static_cast<std::int64_t>(out.size());
    std::uint32_t* dst = out.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < q; ++x) {
        dst[x] = evaluate_raw(f, static_cast<std::uint32_t>(x), table);
    }
}

void evaluate_all_pow(const SparsePoly& f, std::span<std::uint32_t> out) {
    const auto q = static_cast<std::int64_t>(out.size());
    for (std::int64_t x = 0; x < q; ++x) out[x] = evaluate_raw(f, static_cast<std::uint32_t>(x));
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace invforge::kernels
