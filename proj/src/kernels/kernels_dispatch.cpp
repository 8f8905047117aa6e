// Copyright 2026 The catkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace catkit::kern {

namespace {

bool cpu_has_avx2_fma()
{
#if defined(CATKIT_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* resolve()
{
    const char* want = std::getenv("CATKIT_KERNELS");
    if (want != nullptr && std::strcmp(want, "scalar") == 0)
        return &scalar_ops();
    if (want != nullptr && std::strcmp(want, "avx2") == 0) {
        const Ops* v = avx2_ops();
        if (v != nullptr && cpu_has_avx2_fma())
            return v;
        return &scalar_ops(); // requested ISA not usable on this host
    }
    if (const Ops* v = avx2_ops(); v != nullptr && cpu_has_avx2_fma())
        return v;
    return &scalar_ops();
}

} // namespace

const Ops& ops()
{
    static const Ops* active = resolve();
    return *active;
}

} // namespace catkit::kern
