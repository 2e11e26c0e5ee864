#pragma once

#include <cstdint>
#include <span>

#include "invforge/field.hpp"
#include "invforge/sparse_poly.hpp"

// Whole-field evaluation kernels. The serial dlog kernel is the reference the
// OpenMP kernel is tested against; the square-and-multiply kernel shares no
// code path with either and backs the dlog/no-dlog consistency checks.
namespace invforge::kernels {

enum class Execution { Serial, Parallel };

/// out[x] = f(x) for every index x, exponent arithmetic through the table.
void evaluate_all_serial(const SparsePoly& f, const DlogTable& table, std::span<std::uint32_t> out);

/// Same as evaluate_all_serial, OpenMP-parallel over x.
void evaluate_all_parallel(const SparsePoly& f, const DlogTable& table, std::span<std::uint32_t> out);

/// out[x] = f(x) by square-and-multiply per term. No table needed.
void evaluate_all_pow(const SparsePoly& f, std::span<std::uint32_t> out);

inline void evaluate_all(const SparsePoly& f, const DlogTable& table, std::span<std::uint32_t> out,
                         Execution exec) {
    if (exec == Execution::Parallel) {
        evaluate_all_parallel(f, table, out);
    } else {
        evaluate_all_serial(f, table, out);
    }
}

/// Number of threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace invforge::kernels
