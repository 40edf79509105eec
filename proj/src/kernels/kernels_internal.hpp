/**************************************************************************
 * kernels_internal.hpp
 *
 * Copyright 2026 The bchmp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include "bchmp/kernels.hpp"

namespace bchmp::kernels {

#if defined(BCHMP_BUILD_AVX2)
bool avx2_supported();
const Ops& avx2_ops_impl();
#endif

#if defined(BCHMP_BUILD_NEON)
const Ops& neon_ops_impl();
#endif

} // namespace bchmp::kernels
