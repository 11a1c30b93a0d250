#include "backends.hpp"

#include "kdf/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace kdf::kernels {
namespace {

bool cpu_supports(Backend b) {
    switch (b) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(KDF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Backend::neon:
#if defined(KDF_HAVE_NEON)
        return true; // mandatory on AArch64
#else
        return false;
#endif
    }
    return false;
}

const KernelTable* lookup(Backend b) {
    if (!cpu_supports(b)) {
        return nullptr;
    }
    switch (b) {
    case Backend::scalar:
        return &detail::scalar_table;
    case Backend::avx2:
#if defined(KDF_HAVE_AVX2)
        return &detail::avx2_table;
#else
        return nullptr;
#endif
    case Backend::neon:
#if defined(KDF_HAVE_NEON)
        return &detail::neon_table;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable* initial_selection() {
    if (const char* env = std::getenv("KDF_KERNELS")) {
        if (auto b = parse_backend(env)) {
            if (const KernelTable* t = lookup(*b)) {
                return t;
            }
        }
    }
    const auto backends = available_backends();
    return lookup(backends.back());
}

std::atomic<const KernelTable*>& selected() {
    static std::atomic<const KernelTable*> current{initial_selection()};
    return current;
}

} // namespace

std::string_view to_string(Backend b) {
    switch (b) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    }
    return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
    if (name == "scalar") return Backend::scalar;
    if (name == "avx2") return Backend::avx2;
    if (name == "neon") return Backend::neon;
    return std::nullopt;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (lookup(b) != nullptr) {
            out.push_back(b);
        }
    }
    return out;
}

const KernelTable& table(Backend b) {
    const KernelTable* t = lookup(b);
    if (t == nullptr) {
        throw DomainError("kernel backend '" + std::string(to_string(b)) + "' is not available");
    }
    return *t;
}

const KernelTable& active() { return *selected().load(std::memory_order_acquire); }

void set_backend(Backend b) { selected().store(&table(b), std::memory_order_release); }

} // namespace kdf::kernels
