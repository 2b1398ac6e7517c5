// Copyright 2026 sisylab developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace sisylab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sisylab
