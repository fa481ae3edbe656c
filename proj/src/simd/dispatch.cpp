// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "qwalk/error.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd {
namespace {

const KernelTable& select_kernels() {
  const char* forced = std::getenv("QWALK_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return avx2_kernels() != nullptr;
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return scalar_kernels();
    case Isa::kAvx2:
      if (const KernelTable* t = avx2_kernels()) return *t;
      throw Error("AVX2 kernels are not available on this host");
  }
  return scalar_kernels();
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace qwalk::simd
