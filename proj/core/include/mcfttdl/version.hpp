// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_VERSION_HPP
#define MCFTTDL_VERSION_HPP

namespace mcfttdl {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
