#pragma once

#include "isw/kernels.hpp"

namespace isw::kernels::detail {

// Defined in avx2.cpp. Returns the AVX2 table when that translation unit was
// compiled with AVX2+FMA enabled, nullptr otherwise. The caller is still
// responsible for the runtime CPU check before using it.
const Ops* avx2_table();

}  // namespace isw::kernels::detail
