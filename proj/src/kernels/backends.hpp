#pragma once

#include "kdf/kernels.hpp"

namespace kdf::kernels::detail {

extern const KernelTable scalar_table;
#if defined(KDF_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(KDF_HAVE_NEON)
extern const KernelTable neon_table;
#endif

} // namespace kdf::kernels::detail
