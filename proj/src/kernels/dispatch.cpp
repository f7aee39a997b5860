#include "isw/kernels.hpp"

#include <cstdlib>

#include "isw/errors.hpp"
#include "kernels_detail.hpp"

namespace isw::kernels {

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
        return nullptr;
    return detail::avx2_table();
#else
    return nullptr;
#endif
}

namespace {

const Ops* pick_default() {
    if (const char* env = std::getenv("ISW_KERNELS")) {
        std::string_view want(env);
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2") {
            if (const Ops* t = avx2_ops()) return t;
            throw Error("ISW_KERNELS requests avx2 kernels but they are unavailable on this CPU");
        }
        if (!want.empty())
            throw Error("unknown ISW_KERNELS value: " + std::string(want));
    }
    if (const Ops* t = avx2_ops()) return t;
    return &scalar_ops();
}

const Ops*& active_slot() {
    static const Ops* slot = pick_default();
    return slot;
}

}  // namespace

const Ops& active() { return *active_slot(); }

void select(std::string_view name) {
    if (name == "auto") {
        active_slot() = avx2_ops() ? avx2_ops() : &scalar_ops();
        return;
    }
    if (name == "scalar") {
        active_slot() = &scalar_ops();
        return;
    }
    if (name == "avx2") {
        if (const Ops* t = avx2_ops()) {
            active_slot() = t;
            return;
        }
        throw Error("avx2 kernels are unavailable on this CPU");
    }
    throw Error("unknown kernel set: " + std::string(name));
}

}  // namespace isw::kernels
