#include "kernels_impl.hpp"
#include "switchdim/kernels.hpp"

namespace switchdim::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

const KernelTable& scalar_kernels() noexcept {
    static const KernelTable table{Isa::scalar, &detail::scalar_square_diff_scalar, &detail::rotate_pair_scalar,
                                   &detail::and_popcount_scalar};
    return table;
}

const KernelTable* avx2_kernels() noexcept {
#if SWITCHDIM_HAVE_X86
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    static const KernelTable table{Isa::avx2, &detail::scalar_square_diff_avx2, &detail::rotate_pair_avx2,
                                   &detail::and_popcount_avx2};
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        if (const KernelTable* t = avx2_kernels()) return *t;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace switchdim::kernels
